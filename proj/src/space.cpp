#include "profsemi/space.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace profsemi {

namespace {
constexpr int kCantorMaxDepth = 24;
constexpr int kUnboundedDepth = 1 << 20;
}  // namespace

Space Space::cantor() {
    Space s;
    s.kind_ = Kind::cantor;
    s.max_depth_ = kCantorMaxDepth;
    return s;
}

Space Space::nat_infty() {
    Space s;
    s.kind_ = Kind::nat_infty;
    s.max_depth_ = kUnboundedDepth;
    return s;
}

Space Space::finite(int k) {
    if (k < 1) throw domain_error("finite space needs k >= 1");
    Space s;
    s.kind_ = Kind::finite;
    s.finite_size_ = k;
    s.max_depth_ = kUnboundedDepth;
    return s;
}

Space Space::depth_product(std::vector<int> factors) {
    long long prod = 1;
    for (int f : factors) {
        if (f < 1) throw domain_error("depth_product factors must be >= 1");
        prod *= f;
        if (prod > (1LL << 30)) throw domain_error("depth_product grows past 2^30 cells");
    }
    Space s;
    s.kind_ = Kind::depth_product;
    s.factors_ = std::move(factors);
    s.max_depth_ = kUnboundedDepth;
    return s;
}

Space Space::table(std::vector<int> level_sizes, std::vector<std::vector<int>> transitions) {
    if (level_sizes.empty() || level_sizes[0] < 1)
        throw descriptor_error("table space needs a nonempty level 0");
    if (transitions.size() + 1 != level_sizes.size())
        throw descriptor_error("table space needs one transition per adjacent level pair");
    for (size_t n = 0; n < transitions.size(); ++n) {
        if (static_cast<int>(transitions[n].size()) != level_sizes[n + 1])
            throw descriptor_error("transition " + std::to_string(n) + " has wrong length");
        for (int v : transitions[n])
            if (v < 0 || v >= level_sizes[n])
                throw descriptor_error("transition " + std::to_string(n) + " target out of range");
        if (level_sizes[n + 1] < 1) throw descriptor_error("empty level in table space");
    }
    Space s;
    s.kind_ = Kind::table;
    s.level_sizes_ = std::move(level_sizes);
    s.transitions_ = std::move(transitions);
    s.max_depth_ = static_cast<int>(s.level_sizes_.size()) - 1;
    return s;
}

void Space::check_level(int level) const {
    if (level < 0) throw depth_error("negative level");
    if (level > max_depth_)
        throw depth_error("level " + std::to_string(level) + " exceeds certified depth " +
                          std::to_string(max_depth_) + " of " + describe());
}

int Space::level_size(int level) const {
    check_level(level);
    switch (kind_) {
        case Kind::cantor:
            return 1 << level;
        case Kind::nat_infty:
            return level + 1;
        case Kind::finite:
            return finite_size_;
        case Kind::depth_product: {
            long long prod = 1;
            for (int i = 0; i < std::min<int>(level, factors_.size()); ++i) prod *= factors_[i];
            return static_cast<int>(prod);
        }
        case Kind::table:
            return level_sizes_[level];
    }
    return 1;
}

int Space::transition(int level, int cell) const {
    check_level(level + 1);
    if (cell < 0 || cell >= level_size(level + 1)) throw domain_error("transition cell out of range");
    switch (kind_) {
        case Kind::cantor:
            return cell & ((1 << level) - 1);
        case Kind::nat_infty:
            return std::min(cell, level);
        case Kind::finite:
            return cell;
        case Kind::depth_product:
            if (level >= static_cast<int>(factors_.size())) return cell;
            return cell % level_size(level);
        case Kind::table:
            return transitions_[level][cell];
    }
    return cell;
}

std::vector<int> Space::fibre(int level, int cell) const {
    std::vector<int> out;
    int above = level_size(level + 1);
    for (int x = 0; x < above; ++x)
        if (transition(level, x) == cell) out.push_back(x);
    return out;
}

int Space::min_fibre_cell(int level, int cell) const {
    int above = level_size(level + 1);
    for (int x = 0; x < above; ++x)
        if (transition(level, x) == cell) return x;
    throw domain_error("transition not surjective at level " + std::to_string(level));
}

bool Space::operator==(const Space& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::cantor:
        case Kind::nat_infty:
            return true;
        case Kind::finite:
            return finite_size_ == other.finite_size_;
        case Kind::depth_product:
            return factors_ == other.factors_;
        case Kind::table:
            return level_sizes_ == other.level_sizes_ && transitions_ == other.transitions_;
    }
    return false;
}

std::string Space::describe() const {
    switch (kind_) {
        case Kind::cantor:
            return "cantor";
        case Kind::nat_infty:
            return "nat_infty";
        case Kind::finite:
            return "finite:" + std::to_string(finite_size_);
        case Kind::depth_product: {
            std::string out = "depth_product";
            for (int f : factors_) out += ":" + std::to_string(f);
            return out;
        }
        case Kind::table:
            return "table[" + std::to_string(level_sizes_.size()) + " levels]";
    }
    return "?";
}

Space make_space_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw descriptor_error("empty space spec");
    auto int_at = [&](size_t i) {
        try {
            return std::stoi(parts.at(i));
        } catch (const std::exception&) {
            throw descriptor_error("bad space parameter in '" + spec + "'");
        }
    };
    if (parts[0] == "cantor") return Space::cantor();
    if (parts[0] == "nat_infty") return Space::nat_infty();
    if (parts[0] == "finite") return Space::finite(int_at(1));
    if (parts[0] == "depth_product") {
        std::vector<int> factors;
        for (size_t i = 1; i < parts.size(); ++i) factors.push_back(int_at(i));
        return Space::depth_product(factors);
    }
    throw descriptor_error("unknown space spec '" + spec + "'");
}

ValidationReport validate_system(const Space& s, int depth) {
    ValidationReport r;
    if (depth > s.max_depth()) {
        r.fail_structural("depth", {depth}, "depth exceeds certified depth");
        return r;
    }
    for (int n = 0; n < depth; ++n) {
        std::vector<char> hit(s.level_size(n), 0);
        int above = s.level_size(n + 1);
        for (int x = 0; x < above; ++x) hit[s.transition(n, x)] = 1;
        for (int y = 0; y < s.level_size(n); ++y)
            if (!hit[y])
                r.fail_law("transition_surjective", {n, y},
                           "level " + std::to_string(n) + " cell " + std::to_string(y) +
                               " has no preimage");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Clopen

Clopen::Clopen(const Space& space, int level, const std::vector<int>& cells)
    : space_(space), level_(level) {
    mask_.assign(space_.level_size(level), 0);
    for (int c : cells) {
        if (c < 0 || c >= static_cast<int>(mask_.size()))
            throw domain_error("clopen cell out of range at level " + std::to_string(level));
        mask_[c] = 1;
    }
    canonicalise();
}

Clopen clopen_from_mask(const Space& space, int level, std::vector<char> mask) {
    if (static_cast<int>(mask.size()) != space.level_size(level))
        throw domain_error("clopen mask has wrong size");
    Clopen c = Clopen::empty(space);
    c.space_ = space;
    c.level_ = level;
    c.mask_ = std::move(mask);
    c.canonicalise();
    return c;
}

Clopen Clopen::empty(const Space& space) { return Clopen(space, 0, {}); }

Clopen Clopen::full(const Space& space) {
    std::vector<int> all(space.level_size(0));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return Clopen(space, 0, all);
}

void Clopen::canonicalise() {
    while (level_ > 0) {
        int below = space_.level_size(level_ - 1);
        std::vector<int> in_count(below, 0), total(below, 0);
        for (int x = 0; x < static_cast<int>(mask_.size()); ++x) {
            int p = space_.transition(level_ - 1, x);
            ++total[p];
            if (mask_[x]) ++in_count[p];
        }
        bool reducible = true;
        for (int p = 0; p < below && reducible; ++p)
            reducible = in_count[p] == 0 || in_count[p] == total[p];
        if (!reducible) break;
        std::vector<char> reduced(below, 0);
        for (int p = 0; p < below; ++p) reduced[p] = in_count[p] > 0;
        mask_ = std::move(reduced);
        --level_;
    }
}

std::vector<int> Clopen::cells() const {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(mask_.size()); ++x)
        if (mask_[x]) out.push_back(x);
    return out;
}

bool Clopen::is_empty() const {
    return std::none_of(mask_.begin(), mask_.end(), [](char c) { return c != 0; });
}

std::vector<char> Clopen::mask_at(int level) const {
    if (level < level_) throw domain_error("cannot present a clopen below its canonical level");
    std::vector<char> m = mask_;
    for (int n = level_; n < level; ++n) {
        std::vector<char> up(space_.level_size(n + 1));
        for (int x = 0; x < static_cast<int>(up.size()); ++x) up[x] = m[space_.transition(n, x)];
        m = std::move(up);
    }
    return m;
}

namespace {

template <typename Op>
Clopen combine(const Clopen& a, const Clopen& b, Op op) {
    if (a.space() != b.space()) throw mismatch_error("clopens live on different spaces");
    int level = std::max(a.level(), b.level());
    std::vector<char> ma = a.mask_at(level), mb = b.mask_at(level);
    std::vector<char> out(ma.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = op(ma[i], mb[i]);
    return clopen_from_mask(a.space(), level, std::move(out));
}

}  // namespace

Clopen clopen_and(const Clopen& a, const Clopen& b) {
    return combine(a, b, [](char x, char y) -> char { return x && y; });
}
Clopen clopen_or(const Clopen& a, const Clopen& b) {
    return combine(a, b, [](char x, char y) -> char { return x || y; });
}
Clopen clopen_diff(const Clopen& a, const Clopen& b) {
    return combine(a, b, [](char x, char y) -> char { return x && !y; });
}
Clopen clopen_not(const Clopen& a) {
    std::vector<char> m = a.mask();
    for (auto& v : m) v = !v;
    return clopen_from_mask(a.space(), a.level(), std::move(m));
}
bool clopen_leq(const Clopen& a, const Clopen& b) { return clopen_equal(clopen_and(a, b), a); }
bool clopen_equal(const Clopen& a, const Clopen& b) {
    if (a.space() != b.space()) throw mismatch_error("clopens live on different spaces");
    return a.level() == b.level() && a.mask() == b.mask();
}

std::vector<Clopen> atoms(const Space& space, const std::vector<Clopen>& generators) {
    int level = 0;
    for (const Clopen& g : generators) {
        if (g.space() != space) throw mismatch_error("generator lives on a different space");
        level = std::max(level, g.level());
    }
    std::vector<std::vector<char>> masks;
    masks.reserve(generators.size());
    for (const Clopen& g : generators) masks.push_back(g.mask_at(level));

    int cells = space.level_size(level);
    // group cells by their membership pattern across the generators
    std::vector<std::vector<char>> atom_masks;
    std::vector<std::vector<char>> patterns;
    for (int x = 0; x < cells; ++x) {
        std::vector<char> pat(generators.size());
        for (size_t i = 0; i < generators.size(); ++i) pat[i] = masks[i][x];
        auto it = std::find(patterns.begin(), patterns.end(), pat);
        if (it == patterns.end()) {
            patterns.push_back(pat);
            atom_masks.emplace_back(cells, 0);
            atom_masks.back()[x] = 1;
        } else {
            atom_masks[it - patterns.begin()][x] = 1;
        }
    }
    std::vector<Clopen> out;
    out.reserve(atom_masks.size());
    for (auto& m : atom_masks) out.push_back(clopen_from_mask(space, level, std::move(m)));
    return out;
}

// ---------------------------------------------------------------------------
// Point

Point Point::from_prefix(const Space& space, int level, int cell, int depth) {
    if (depth < level) throw domain_error("point depth must reach its prefix level");
    if (cell < 0 || cell >= space.level_size(level)) throw domain_error("prefix cell out of range");
    Point p(space);
    p.min_extended_ = true;
    p.prefix_level_ = level;
    p.thread_.resize(depth + 1);
    p.thread_[level] = cell;
    for (int n = level; n > 0; --n) p.thread_[n - 1] = space.transition(n - 1, p.thread_[n]);
    for (int n = level; n < depth; ++n) p.thread_[n + 1] = space.min_fibre_cell(n, p.thread_[n]);
    return p;
}

Point Point::from_thread(const Space& space, std::vector<int> thread) {
    if (thread.empty()) throw domain_error("point thread must cover level 0");
    for (size_t n = 0; n + 1 < thread.size(); ++n)
        if (space.transition(static_cast<int>(n), thread[n + 1]) != thread[n])
            throw domain_error("thread incompatible with transitions at level " + std::to_string(n));
    Point p(space);
    p.thread_ = std::move(thread);
    return p;
}

int Point::at(int level) const {
    if (level < 0) throw depth_error("negative level");
    if (level >= static_cast<int>(thread_.size()))
        throw depth_error("point certified to depth " + std::to_string(depth()) +
                          ", level " + std::to_string(level) + " requested");
    return thread_[level];
}

bool point_in(const Point& p, const Clopen& c) {
    if (p.space() != c.space()) throw mismatch_error("point and clopen live on different spaces");
    return c.contains_cell(p.at(c.level()));
}

std::optional<int> separation_level(const std::vector<Point>& points, int max_level) {
    int usable = max_level;
    for (const Point& p : points) usable = std::min(usable, p.depth());
    for (int d = 0; d <= usable; ++d) {
        bool distinct = true;
        for (size_t i = 0; i < points.size() && distinct; ++i)
            for (size_t j = i + 1; j < points.size() && distinct; ++j)
                if (points[i].at(d) == points[j].at(d)) distinct = false;
        if (distinct) return d;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ContinuousMap

ContinuousMap ContinuousMap::identity(const Space& space, int depth) {
    ContinuousMap f;
    f.source_ = space;
    f.target_ = space;
    for (int m = 0; m <= depth; ++m) {
        f.factor_levels_.push_back(m);
        std::vector<int> id(space.level_size(m));
        for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
        f.stage_.push_back(std::move(id));
    }
    return f;
}

ContinuousMap ContinuousMap::first_bit(int depth) {
    return stage_quotient(Space::cantor(), 1, {0, 1}, 2, depth);
}

ContinuousMap ContinuousMap::stage_quotient(const Space& source, int source_level,
                                            const std::vector<int>& table, int target_size,
                                            int depth) {
    if (static_cast<int>(table.size()) != source.level_size(source_level))
        throw domain_error("stage_quotient table length must match the source level size");
    for (int v : table)
        if (v < 0 || v >= target_size) throw domain_error("stage_quotient entry out of range");
    ContinuousMap f;
    f.source_ = source;
    f.target_ = Space::finite(target_size);
    for (int m = 0; m <= depth; ++m) {
        f.factor_levels_.push_back(source_level);
        f.stage_.push_back(table);
    }
    return f;
}

int ContinuousMap::factor_level(int target_level) const {
    if (target_level < 0 || target_level > depth())
        throw depth_error("map certified to target depth " + std::to_string(depth()));
    return factor_levels_[target_level];
}

int ContinuousMap::stage(int target_level, int source_cell) const {
    if (target_level < 0 || target_level > depth())
        throw depth_error("map certified to target depth " + std::to_string(depth()));
    return stage_[target_level][source_cell];
}

Point ContinuousMap::apply(const Point& p) const {
    if (p.space() != source_) throw mismatch_error("point is not on the map's source space");
    int usable = -1;
    for (int m = 0; m <= depth(); ++m) {
        if (factor_levels_[m] > p.depth()) break;
        usable = m;
    }
    if (usable < 0) throw depth_error("point too shallow for this map");
    std::vector<int> thread(usable + 1);
    for (int m = 0; m <= usable; ++m) thread[m] = stage_[m][p.at(factor_levels_[m])];
    return Point::from_thread(target_, std::move(thread));
}

Clopen ContinuousMap::preimage(const Clopen& c) const {
    if (c.space() != target_) throw mismatch_error("clopen is not on the map's target space");
    int m = c.level();
    if (m > depth()) throw depth_error("clopen level exceeds the map's certified depth");
    int src_level = factor_levels_[m];
    std::vector<char> mask(source_.level_size(src_level));
    for (int x = 0; x < static_cast<int>(mask.size()); ++x)
        mask[x] = c.contains_cell(stage_[m][x]);
    return clopen_from_mask(source_, src_level, std::move(mask));
}

ContinuousMap ContinuousMap::then(const ContinuousMap& g) const {
    if (target_ != g.source_) throw mismatch_error("maps are not composable");
    ContinuousMap h;
    h.source_ = source_;
    h.target_ = g.target_;
    for (int m = 0; m <= g.depth(); ++m) {
        int mid = g.factor_levels_[m];
        if (mid > depth()) break;
        int src = factor_levels_[mid];
        h.factor_levels_.push_back(src);
        std::vector<int> comp(source_.level_size(src));
        for (int x = 0; x < static_cast<int>(comp.size()); ++x)
            comp[x] = g.stage_[m][stage_[mid][x]];
        h.stage_.push_back(std::move(comp));
    }
    if (h.factor_levels_.empty()) throw depth_error("composition has no certified levels");
    return h;
}

ValidationReport validate_map(const ContinuousMap& f) {
    ValidationReport r;
    for (int m = 0; m <= f.depth(); ++m) {
        int src_level = f.factor_level(m);
        if (m > 0 && src_level < f.factor_level(m - 1)) {
            r.fail_structural("factor_levels", {m}, "factor levels must be nondecreasing");
            return r;
        }
        int src_size = f.source().level_size(src_level);
        int tgt_size = f.target().level_size(m);
        for (int x = 0; x < src_size; ++x)
            if (f.stage(m, x) < 0 || f.stage(m, x) >= tgt_size) {
                r.fail_structural("stage_range", {m, x}, "stage value out of range");
                return r;
            }
    }
    for (int m = 0; m + 1 <= f.depth(); ++m) {
        int lo = f.factor_level(m), hi = f.factor_level(m + 1);
        int src_size = f.source().level_size(hi);
        for (int x = 0; x < src_size; ++x) {
            int down = x;
            for (int n = hi; n > lo; --n) down = f.source().transition(n - 1, down);
            if (f.target().transition(m, f.stage(m + 1, x)) != f.stage(m, down))
                r.fail_law("stage_compatible", {m, x}, "stage maps do not commute with transitions");
        }
    }
    return r;
}

}  // namespace profsemi

#include "profsemi/measure.hpp"

#include <algorithm>

namespace profsemi {

namespace {

// threads certain to stay equal forever: both follow the least-fibre
// extension and already agree at their shared certified depth
bool certainly_equal(const Point& p, const Point& q) {
    if (p.space() != q.space()) return false;
    if (!p.min_extended() || !q.min_extended()) return false;
    int d = std::min(p.depth(), q.depth());
    if (d < std::max(p.prefix_level(), q.prefix_level())) return false;
    for (int n = 0; n <= d; ++n)
        if (p.at(n) != q.at(n)) return false;
    return true;
}

}  // namespace

FinSuppFn::FinSuppFn(const Space& space, const FiniteSemiring& s,
                     std::vector<WeightedPoint> support)
    : space_(space), sr_(s) {
    for (auto& wp : support) {
        if (wp.point.space() != space) throw mismatch_error("support point on a different space");
        if (wp.value < 0 || wp.value >= s.size) throw domain_error("support value out of range");
        if (wp.value != s.zero) support_.push_back(std::move(wp));
    }
    // points must be pairwise distinct; certify a separation level
    std::vector<Point> pts;
    for (const auto& wp : support_) pts.push_back(wp.point);
    int cap = space.max_depth();
    for (const Point& p : pts) cap = std::min(cap, p.depth());
    auto sep = separation_level(pts, cap);
    if (!sep) {
        // coinciding min-extended threads are genuinely equal, not undecided
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (certainly_equal(pts[i], pts[j]))
                    throw domain_error("support points must be pairwise distinct");
        throw depth_error("support points do not separate within their certified depths");
    }
    separation_ = *sep;
}

Measure::Measure(Space space, FiniteSemiring sr, int depth, Provenance prov,
                 std::function<FinFn(int)> gen, std::vector<WeightedPoint> support)
    : space_(std::move(space)),
      sr_(std::move(sr)),
      depth_(depth),
      prov_(prov),
      gen_(std::move(gen)),
      support_(std::move(support)) {}

FinFn Measure::stage_at(int level) const {
    if (level < 0) throw depth_error("negative level");
    if (level > depth_)
        throw depth_error("measure certified to depth " + std::to_string(depth_) + ", level " +
                          std::to_string(level) + " requested");
    return gen_(level);
}

Measure dirac(const FiniteSemiring& s, const Point& p) {
    Space sp = p.space();
    Point pt = p;
    FiniteSemiring sr = s;
    auto gen = [sp, sr, pt](int n) { return unit(sr, sp.level_size(n), pt.at(n)); };
    return Measure(sp, s, p.depth(), Measure::Provenance::dirac, gen, {{p, s.one}});
}

Measure integrate(const FinSuppFn& f) {
    Space sp = f.space();
    FiniteSemiring sr = f.semiring();
    std::vector<WeightedPoint> support = f.support();
    int depth = sp.max_depth();
    for (const auto& wp : support) depth = std::min(depth, wp.point.depth());
    auto gen = [sp, sr, support](int n) {
        FinFn out = zero_fn(sr, sp.level_size(n));
        for (const auto& wp : support) {
            int c = wp.point.at(n);
            out.values[c] = sr.add(out.values[c], wp.value);
        }
        return out;
    };
    return Measure(sp, sr, depth, Measure::Provenance::finsupp, gen, support);
}

Measure zero_measure(const Space& space, const FiniteSemiring& s, int depth) {
    Space sp = space;
    FiniteSemiring sr = s;
    auto gen = [sp, sr](int n) { return zero_fn(sr, sp.level_size(n)); };
    return Measure(space, s, depth, Measure::Provenance::finsupp, gen, {});
}

Measure measure_from_stages(const Space& space, const FiniteSemiring& s,
                            std::vector<FinFn> stages) {
    if (stages.empty()) throw descriptor_error("stage family must cover level 0");
    for (size_t n = 0; n < stages.size(); ++n)
        if (stages[n].base_size() != space.level_size(static_cast<int>(n)))
            throw descriptor_error("stage " + std::to_string(n) + " has wrong size");
    for (size_t n = 0; n + 1 < stages.size(); ++n) {
        std::vector<int> tr(space.level_size(static_cast<int>(n) + 1));
        for (size_t x = 0; x < tr.size(); ++x)
            tr[x] = space.transition(static_cast<int>(n), static_cast<int>(x));
        FinFn pushed = functor_map(s, tr, space.level_size(static_cast<int>(n)), stages[n + 1]);
        if (!(pushed == stages[n]))
            throw descriptor_error("stages at levels " + std::to_string(n) + "," +
                                   std::to_string(n + 1) + " are not fibre-sum compatible");
    }
    int depth = static_cast<int>(stages.size()) - 1;
    auto gen = [stages](int n) { return stages[static_cast<size_t>(n)]; };
    return Measure(space, s, depth, Measure::Provenance::custom, gen);
}

int eval(const Measure& m, const Clopen& b) {
    if (m.space() != b.space()) throw mismatch_error("measure and clopen live on different spaces");
    FinFn st = m.stage_at(b.level());
    int acc = m.semiring().zero;
    const auto& mask = b.mask();
    for (int c = 0; c < st.base_size(); ++c)
        if (mask[c]) acc = m.semiring().add(acc, st.values[c]);
    return acc;
}

namespace {

void require_compatible(const Measure& a, const Measure& b) {
    if (a.space() != b.space()) throw mismatch_error("measures live on different spaces");
    if (!a.semiring().same_as(b.semiring()))
        throw mismatch_error("measures take values in different semirings");
}

}  // namespace

Measure combine(const Measure& a, const Measure& b) {
    require_compatible(a, b);
    Measure la = a, lb = b;
    auto gen = [la, lb](int n) { return add_fn(la.semiring(), la.stage_at(n), lb.stage_at(n)); };
    return Measure(a.space(), a.semiring(), std::min(a.certified_depth(), b.certified_depth()),
                   Measure::Provenance::custom, gen);
}

Measure scale(int scalar, const Measure& m) {
    if (scalar < 0 || scalar >= m.semiring().size) throw domain_error("scalar out of range");
    Measure lm = m;
    auto gen = [scalar, lm](int n) { return scale_fn(lm.semiring(), scalar, lm.stage_at(n)); };
    return Measure(m.space(), m.semiring(), m.certified_depth(), Measure::Provenance::custom, gen);
}

Measure pushforward(const Measure& m, const ContinuousMap& h) {
    if (m.space() != h.source()) throw mismatch_error("measure is not on the map's source");
    int depth = -1;
    for (int n = 0; n <= h.depth(); ++n) {
        if (h.factor_level(n) > m.certified_depth()) break;
        depth = n;
    }
    if (depth < 0) throw depth_error("measure too shallow for this map");
    Measure lm = m;
    ContinuousMap lh = h;
    auto gen = [lm, lh](int n) {
        int src_level = lh.factor_level(n);
        int src_size = lm.space().level_size(src_level);
        std::vector<int> phi(src_size);
        for (int x = 0; x < src_size; ++x) phi[x] = lh.stage(n, x);
        return functor_map(lm.semiring(), phi, lh.target().level_size(n), lm.stage_at(src_level));
    };
    return Measure(h.target(), m.semiring(), depth, Measure::Provenance::custom, gen);
}

bool equal_to_depth(const Measure& a, const Measure& b, int depth) {
    require_compatible(a, b);
    if (depth > a.certified_depth() || depth > b.certified_depth())
        throw depth_error("equal_to_depth beyond a certified depth");
    for (int n = 0; n <= depth; ++n)
        if (!(a.stage_at(n) == b.stage_at(n))) return false;
    return true;
}

WitnessResult density_witness(const Space& space, const FiniteSemiring& s,
                              const std::vector<SubbasicConstraint>& constraints,
                              int point_depth) {
    std::vector<Clopen> gens;
    int level = 0;
    for (const auto& c : constraints) {
        if (c.clopen.space() != space) throw mismatch_error("constraint on a different space");
        if (static_cast<int>(c.allowed.size()) != s.size)
            throw domain_error("constraint allowed-mask must cover the carrier");
        gens.push_back(c.clopen);
        level = std::max(level, c.clopen.level());
    }
    std::vector<Clopen> parts = atoms(space, gens);
    int na = static_cast<int>(parts.size());

    // membership of each atom in each constraint clopen, via a representative
    std::vector<std::vector<char>> atom_in(constraints.size(), std::vector<char>(na, 0));
    std::vector<int> atom_cell(na);
    for (int a = 0; a < na; ++a) {
        std::vector<char> m = parts[a].mask_at(level);
        int cell = 0;
        while (!m[cell]) ++cell;  // atoms are nonempty
        atom_cell[a] = cell;
        for (size_t i = 0; i < constraints.size(); ++i)
            atom_in[i][a] = constraints[i].clopen.mask_at(level)[cell];
    }

    // exhaust assignments atom -> S in lexicographic order
    std::vector<int> assign(na, 0);
    while (true) {
        bool ok = true;
        for (size_t i = 0; i < constraints.size() && ok; ++i) {
            int total = s.zero;
            for (int a = 0; a < na; ++a)
                if (atom_in[i][a]) total = s.add(total, assign[a]);
            ok = constraints[i].allowed[total] != 0;
        }
        if (ok) {
            int pd = point_depth < 0 ? level : point_depth;
            std::vector<WeightedPoint> support;
            for (int a = 0; a < na; ++a)
                if (assign[a] != s.zero)
                    support.push_back({Point::from_prefix(space, level, atom_cell[a], pd), assign[a]});
            WitnessResult r;
            r.satisfiable = true;
            r.witness = FinSuppFn(space, s, std::move(support));
            return r;
        }
        int i = na - 1;
        while (i >= 0 && assign[i] == s.size - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return {};
}

Clopen separating_clopen(const FinSuppFn& f, const FinSuppFn& g) {
    if (f.space() != g.space()) throw mismatch_error("functions live on different spaces");
    if (!f.semiring().same_as(g.semiring())) throw mismatch_error("semiring mismatch");
    Measure mf = integrate(f), mg = integrate(g);
    int depth = std::min(mf.certified_depth(), mg.certified_depth());
    for (int n = 0; n <= depth; ++n) {
        FinFn a = mf.stage_at(n), b = mg.stage_at(n);
        for (int c = 0; c < a.base_size(); ++c)
            if (a.values[c] != b.values[c]) return Clopen(f.space(), n, {c});
    }
    throw domain_error("functions agree at every certified resolution; no separating clopen");
}

int free_extension(const FiniteSemimodule& y, const ContinuousMap& f, const Measure& m) {
    if (!y.semiring.same_as(m.semiring()))
        throw mismatch_error("module and measure use different semirings");
    if (f.target() != Space::finite(y.size))
        throw mismatch_error("map must land in the discrete space on the module carrier");
    Measure nu = pushforward(m, f);
    FinFn st = nu.stage_at(0);
    int acc = y.mzero;
    for (int v = 0; v < y.size; ++v) acc = y.add(acc, y.act(st.values[v], v));
    return acc;
}

FinSuppFn random_finsupp(const Space& space, const FiniteSemiring& s, int level, int point_depth,
                         CaseRng& rng) {
    std::vector<WeightedPoint> support;
    int cells = space.level_size(level);
    for (int c = 0; c < cells; ++c) {
        int v = rng.below(s.size);
        if (v != s.zero) support.push_back({Point::from_prefix(space, level, c, point_depth), v});
    }
    return FinSuppFn(space, s, std::move(support));
}

}  // namespace profsemi

#include "profsemi/density.hpp"

#include <algorithm>
#include <sstream>

namespace profsemi {

namespace {

bool threads_locked_equal(const Point& p, const Point& q) {
    if (!p.min_extended() || !q.min_extended()) return false;
    int d = std::min(p.depth(), q.depth());
    if (d < std::max(p.prefix_level(), q.prefix_level())) return false;
    for (int n = 0; n <= d; ++n)
        if (p.at(n) != q.at(n)) return false;
    return true;
}

}  // namespace

ScottFn::ScottFn(Measure base) : base_(std::move(base)), order_(natural_order(base_.semiring())) {}

ScottFn density(const Measure& m) { return ScottFn(m); }

Measure to_measure(const ScottFn& f) { return f.base(); }

PointwiseValue eval_pointwise(const ScottFn& f, const Point& p, int depth) {
    if (p.space() != f.space()) throw mismatch_error("point lives on a different space");
    if (depth > f.certified_depth() || depth > p.depth())
        throw depth_error("pointwise evaluation beyond a certified depth");

    PointwiseValue out;
    out.value = f.stage_at(depth).values[p.at(depth)];

    const Measure& m = f.base();
    if (m.provenance() == Measure::Provenance::dirac ||
        m.provenance() == Measure::Provenance::finsupp) {
        // the chain is constant once every support point has either left the
        // thread's cells or provably coincides with the thread
        bool settled = true;
        for (const auto& wp : m.support_points()) {
            bool separated = false;
            int reach = std::min({depth, p.depth(), wp.point.depth()});
            for (int n = 0; n <= reach && !separated; ++n)
                separated = wp.point.at(n) != p.at(n);
            if (!separated && !threads_locked_equal(wp.point, p)) settled = false;
        }
        out.stabilised = settled;
    }
    return out;
}

int integral(const ScottFn& f, const Clopen& b) {
    // idempotent addition is the natural-order join
    return eval(f.base(), b);
}

GaloisReport galois_holds(const ScottFn& f, const Measure& m, int depth) {
    if (f.space() != m.space()) throw mismatch_error("function and measure on different spaces");
    if (!f.semiring().same_as(m.semiring())) throw mismatch_error("semiring mismatch");
    if (depth > f.certified_depth() || depth > m.certified_depth())
        throw depth_error("galois check beyond a certified depth");
    const NaturalOrder& ord = f.order();

    GaloisReport rep;
    std::ostringstream w;

    // integral(f,-) <= m on every clopen at level <= depth, equivalently on
    // every cell of every level (joins of cells recover any clopen)
    rep.integral_leq = true;
    for (int n = 0; n <= depth && rep.integral_leq; ++n) {
        FinFn fs = f.stage_at(n), ms = m.stage_at(n);
        for (int c = 0; c < fs.base_size(); ++c)
            if (!ord.leq(fs.values[c], ms.values[c])) {
                rep.integral_leq = false;
                w << "integral side fails at level " << n << " cell " << c << ": "
                  << fs.values[c] << " !<= " << ms.values[c] << "; ";
                break;
            }
    }

    // f <= density(m) at a representative point of every depth-level cell
    ScottFn dm = density(m);
    rep.pointwise_leq = true;
    int cells = f.space().level_size(depth);
    for (int c = 0; c < cells && rep.pointwise_leq; ++c) {
        Point p = Point::from_prefix(f.space(), depth, c, depth);
        int fv = eval_pointwise(f, p, depth).value;
        int dv = eval_pointwise(dm, p, depth).value;
        if (!ord.leq(fv, dv)) {
            rep.pointwise_leq = false;
            w << "pointwise side fails at depth-" << depth << " cell " << c << ": " << fv
              << " !<= " << dv << "; ";
        }
    }

    rep.witness = w.str();
    return rep;
}

ClosedSetFamily ClosedSetFamily::from_measure(const Measure& m) {
    if (!m.semiring().same_as(builtin_semiring("bool2")))
        throw domain_error("closed-set families require the two-element semiring");
    return ClosedSetFamily(m);
}

ClosedSetFamily ClosedSetFamily::singleton(const Point& p) {
    return ClosedSetFamily(dirac(builtin_semiring("bool2"), p));
}

ClosedSetFamily ClosedSetFamily::union_of(const std::vector<ClosedSetFamily>& parts) {
    if (parts.empty()) throw domain_error("union_of needs at least one family");
    Measure acc = parts[0].m_;
    for (size_t i = 1; i < parts.size(); ++i) acc = combine(acc, parts[i].m_);
    return ClosedSetFamily(acc);
}

std::vector<int> ClosedSetFamily::cells_at(int level) const {
    FinFn st = m_.stage_at(level);
    std::vector<int> out;
    for (int c = 0; c < st.base_size(); ++c)
        if (st.values[c] != m_.semiring().zero) out.push_back(c);
    return out;
}

bool family_meets(const ClosedSetFamily& c, const Clopen& b) {
    return eval(c.measure(), b) == c.measure().semiring().one;
}

bool family_inside(const ClosedSetFamily& c, const Clopen& b) {
    return eval(c.measure(), clopen_not(b)) == c.measure().semiring().zero;
}

}  // namespace profsemi

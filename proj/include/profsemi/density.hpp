#ifndef PROFSEMI_DENSITY_HPP
#define PROFSEMI_DENSITY_HPP

#include <string>
#include <vector>

#include "profsemi/measure.hpp"

namespace profsemi {

// A continuous function into an idempotent semiring with its down-set
// topology, sharing a measure's stage family. The same stage data carries two
// semantics: fibre sums read it as a measure, thread infima read it as a
// function. The value at a point is the stabilised value of the decreasing
// chain stage_at(n)(thread(n)).
class ScottFn {
   public:
    explicit ScottFn(Measure base);

    const Measure& base() const { return base_; }
    const NaturalOrder& order() const { return order_; }
    FinFn stage_at(int level) const { return base_.stage_at(level); }
    int certified_depth() const { return base_.certified_depth(); }
    const Space& space() const { return base_.space(); }
    const FiniteSemiring& semiring() const { return base_.semiring(); }

   private:
    Measure base_;
    NaturalOrder order_;
};

// delta_mu: the density function of a measure over an idempotent semiring;
// throws domain_error when the semiring is not idempotent.
ScottFn density(const Measure& m);

// the measure b -> integral of f over b; identity on the stage family
Measure to_measure(const ScottFn& f);

struct PointwiseValue {
    int value = 0;
    bool stabilised = false;  // guaranteed exact, not merely depth-bounded
};

// Value of the decreasing chain stage_at(n)(thread(n)) at n = depth. The
// stabilised flag is set when the provenance proves the chain constant from
// some level <= depth on (dirac/finsupp supports that separate from the
// point by then); custom-provenance values are always depth-bounded.
PointwiseValue eval_pointwise(const ScottFn& f, const Point& p, int depth);

// natural-order join of the stage values over the clopen's cells
int integral(const ScottFn& f, const Clopen& b);

struct GaloisReport {
    bool integral_leq = false;   // integral(f,-) <= m on all clopens up to depth
    bool pointwise_leq = false;  // f <= density(m) on all depth-resolved cells
    std::string witness;         // describes the first failing side(s)
    bool agree() const { return integral_leq == pointwise_leq; }
};

// Both sides of the adjunction, computed independently: the left one
// cell-by-cell at every level <= depth, the right one at a representative
// point per depth-level cell.
GaloisReport galois_holds(const ScottFn& f, const Measure& m, int depth);

// A closed subset of the space, presented level-wise; identified with the
// {0,1}-valued measure that sends a clopen to 1 exactly when the set meets
// it.
class ClosedSetFamily {
   public:
    static ClosedSetFamily from_measure(const Measure& m);  // semiring must be bool2
    static ClosedSetFamily singleton(const Point& p);
    static ClosedSetFamily union_of(const std::vector<ClosedSetFamily>& parts);

    std::vector<int> cells_at(int level) const;
    const Measure& measure() const { return m_; }
    int certified_depth() const { return m_.certified_depth(); }

   private:
    explicit ClosedSetFamily(Measure m) : m_(std::move(m)) {}
    Measure m_;
};

// membership in the subbasic open <b,{1}>: the set meets b
bool family_meets(const ClosedSetFamily& c, const Clopen& b);
// membership in <not b,{0}>: the set is contained in b
bool family_inside(const ClosedSetFamily& c, const Clopen& b);

}  // namespace profsemi

#endif

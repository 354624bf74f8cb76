#ifndef PROFSEMI_MEASURE_HPP
#define PROFSEMI_MEASURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "profsemi/monad.hpp"
#include "profsemi/rng.hpp"
#include "profsemi/semiring.hpp"
#include "profsemi/space.hpp"

namespace profsemi {

struct WeightedPoint {
    Point point;
    int value;
};

// A finitely supported S-valued function on points. Zero-valued entries are
// dropped on construction; the remaining points must separate within their
// certified depths, which fixes the separation level used downstream.
class FinSuppFn {
   public:
    FinSuppFn(const Space& space, const FiniteSemiring& s, std::vector<WeightedPoint> support);

    const Space& space() const { return space_; }
    const FiniteSemiring& semiring() const { return sr_; }
    const std::vector<WeightedPoint>& support() const { return support_; }
    int separation() const { return separation_; }

   private:
    Space space_;
    FiniteSemiring sr_;
    std::vector<WeightedPoint> support_;
    int separation_ = 0;
};

// A finitely additive S-valued measure on the clopens of a space, realised as
// a compatible family of stage functions level -> (cell -> S). Stages are
// produced by a pure generator and recomputed on demand; every operation
// declares the depth it reads and fails loudly past the certified depth.
class Measure {
   public:
    enum class Provenance { dirac, finsupp, custom };

    FinFn stage_at(int level) const;
    int certified_depth() const { return depth_; }
    Provenance provenance() const { return prov_; }
    const Space& space() const { return space_; }
    const FiniteSemiring& semiring() const { return sr_; }
    // support of the measure when it arose from integration; empty otherwise
    const std::vector<WeightedPoint>& support_points() const { return support_; }

    Measure(Space space, FiniteSemiring sr, int depth, Provenance prov,
            std::function<FinFn(int)> gen, std::vector<WeightedPoint> support = {});

   private:
    Space space_;
    FiniteSemiring sr_;
    int depth_;
    Provenance prov_;
    std::function<FinFn(int)> gen_;
    std::vector<WeightedPoint> support_;
};

// stage_at(n) = the characteristic function of the point's level-n cell
Measure dirac(const FiniteSemiring& s, const Point& p);

// stage_at(n)(c) = sum of the values supported in cell c; equals the linear
// combination of diracs over the support
Measure integrate(const FinSuppFn& f);

Measure zero_measure(const Space& space, const FiniteSemiring& s, int depth);

// explicit stage family; throws descriptor_error unless adjacent stages are
// compatible under fibre sums
Measure measure_from_stages(const Space& space, const FiniteSemiring& s, std::vector<FinFn> stages);

// sum of the stage values over the clopen's cells, at its canonical level
int eval(const Measure& m, const Clopen& b);

Measure combine(const Measure& a, const Measure& b);
Measure scale(int scalar, const Measure& m);

// eval(pushforward(m,h), b) = eval(m, preimage_h(b))
Measure pushforward(const Measure& m, const ContinuousMap& h);

bool equal_to_depth(const Measure& a, const Measure& b, int depth);

// mu(clopen) must land in `allowed` (a mask over the carrier)
struct SubbasicConstraint {
    Clopen clopen;
    std::vector<char> allowed;
};

struct WitnessResult {
    bool satisfiable = false;
    std::optional<FinSuppFn> witness;
};

// Searches for a finitely supported function whose integral satisfies every
// constraint, placing one support point per atom of the algebra the
// constraint clopens generate (lexicographically least thread in each atom).
// Unsatisfiability is certified by exhausting all atom-value assignments.
WitnessResult density_witness(const Space& space, const FiniteSemiring& s,
                              const std::vector<SubbasicConstraint>& constraints,
                              int point_depth = -1);

// A clopen on which the integrals of two distinct finitely supported
// functions differ; throws domain_error when none exists up to the joint
// certified depth (the functions are equal at every tested resolution).
Clopen separating_clopen(const FinSuppFn& f, const FinSuppFn& g);

// The unique semimodule map extending f along dirac: pushes m forward along
// f into the discrete space on y's carrier and evaluates sum nu(v)*v in y.
int free_extension(const FiniteSemimodule& y, const ContinuousMap& f, const Measure& m);

// Seeded level-`level`-definable test data: a random value per level cell
// (zeros dropped), points materialised to point_depth.
FinSuppFn random_finsupp(const Space& space, const FiniteSemiring& s, int level, int point_depth,
                         CaseRng& rng);

}  // namespace profsemi

#endif

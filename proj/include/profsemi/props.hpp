#ifndef PROFSEMI_PROPS_HPP
#define PROFSEMI_PROPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "profsemi/density.hpp"
#include "profsemi/measure.hpp"

namespace profsemi {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string witness;  // seed/case of the first failure, empty on pass
};

// mu(empty)=0 and the modular law mu(a|b)+mu(a&b)=mu(a)+mu(b) over every
// clopen pair at `level`, for seeded level-5-definable measures
SuiteResult additivity_suite(const Space& space, const FiniteSemiring& s, int level, int cases,
                             std::uint64_t seed);

// constructed measures have fibre-sum compatible stage families
SuiteResult stage_compatibility_suite(const Space& space, const FiniteSemiring& s, int cases,
                                      std::uint64_t seed);

// integration is injective: a separating clopen exists for each seeded pair
// of distinct finitely supported functions, verified by evaluation
SuiteResult tau_injectivity_suite(const Space& space, const FiniteSemiring& s, int cases,
                                  std::uint64_t seed);

// integration has dense image: density_witness succeeds on every satisfiable
// list of <= 3 subbasic constraints at level <= 2, and its unsatisfiability
// verdicts match the exhaustive stage-function search
SuiteResult tau_density_suite(const Space& space, const FiniteSemiring& s);

// pushforward respects identity and composition and matches preimage evals
SuiteResult pushforward_suite(const FiniteSemiring& s, int cases, std::uint64_t seed);

// density and integration invert each other at the tested depth, checked
// through the pointwise semantics rather than by copying stage data
SuiteResult roundtrip_suite(const Space& space, const FiniteSemiring& s, int depth, int cases,
                            std::uint64_t seed);

// the measure of a clopen is the join of pointwise densities over
// representatives of its depth-resolved cells, for all clopens at `level`
SuiteResult pointwise_join_suite(const Space& space, const FiniteSemiring& s, int level, int cases,
                                 std::uint64_t seed);

// the two sides of the Galois adjunction agree, and both maps are monotone
SuiteResult galois_suite(const Space& space, const FiniteSemiring& s, int cases,
                         std::uint64_t seed);

// the bool2 measures at each level <= max_level are exactly the closed-set
// families; subbasic membership matches the set semantics; singleton/union
// satisfy the monad identities level-wise
SuiteResult vietoris_suite(const Space& space, int max_level);

// free_extension extends its stage map along dirac, is a semimodule
// homomorphism, and is the unique such extension (brute force over all
// candidate stage maps)
SuiteResult freeness_suite();

// every suite above with default corpora; used by `props run`
std::vector<SuiteResult> run_all_suites(int cases, std::uint64_t seed);

}  // namespace profsemi

#endif

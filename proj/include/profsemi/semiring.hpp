#ifndef PROFSEMI_SEMIRING_HPP
#define PROFSEMI_SEMIRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "profsemi/report.hpp"

namespace profsemi {

// A finite semiring given by lookup tables over the carrier {0,...,size-1}.
// `zero` and `one` are carrier indices; they are not forced to 0/1 so that
// quotients and subalgebras keep their natural numbering.
struct FiniteSemiring {
    std::string label;
    int size = 0;
    int zero = 0;
    int one = 0;
    std::vector<std::vector<int>> add_table;
    std::vector<std::vector<int>> mul_table;

    int add(int a, int b) const { return add_table[a][b]; }
    int mul(int a, int b) const { return mul_table[a][b]; }

    // s + s = s for every carrier element.
    bool idempotent() const;

    bool same_as(const FiniteSemiring& other) const;
};

// Exhaustive law check over all pairs/triples. Structural defects (ragged or
// out-of-range tables) are reported separately from law violations and
// suppress the law scan, since the tables cannot be read safely.
ValidationReport validate_semiring(const FiniteSemiring& s);

// Builtin families:
//   bool2           — ({0,1}, or, and, 0, 1)
//   zmod n          — integers mod n
//   trop_trunc k    — ({0..k, inf}, min, plus saturating to inf, zero=inf, one=0)
//   nat_sat n       — ({0..n-1, top}, + and * saturating into top, zero=0, one=1)
// Throws domain_error for unknown names or out-of-range parameters.
FiniteSemiring builtin_semiring(const std::string& name, const std::vector<int>& params = {});

// Parses "bool2", "zmod:5", "trop_trunc:2", "nat_sat:3".
FiniteSemiring builtin_semiring_spec(const std::string& spec);

std::vector<std::string> builtin_semiring_names();

// Returns an element a with a + a != a, or nullopt when s is idempotent.
std::optional<int> idempotency_witness(const FiniteSemiring& s);

// The natural order of an idempotent semiring: a <= b iff a + b = b.
// Join is +, bottom is the semiring zero; meets exist because a finite
// join-semilattice with bottom is a complete lattice.
struct NaturalOrder {
    int size = 0;
    int bottom = 0;
    std::vector<std::vector<char>> leq_table;

    bool leq(int a, int b) const { return leq_table[a][b] != 0; }
    int meet(int a, int b) const;
};

// Throws domain_error (message names a witness) when s is not idempotent.
NaturalOrder natural_order(const FiniteSemiring& s);

// A finite semimodule over `semiring`: commutative monoid (carrier, madd,
// mzero) plus a scalar action table action[s][m].
struct FiniteSemimodule {
    std::string label;
    FiniteSemiring semiring;
    int size = 0;
    int mzero = 0;
    std::vector<std::vector<int>> madd;
    std::vector<std::vector<int>> action;

    int add(int a, int b) const { return madd[a][b]; }
    int act(int s, int m) const { return action[s][m]; }
};

ValidationReport validate_semimodule(const FiniteSemimodule& m);

// S acting on itself by multiplication.
FiniteSemimodule self_module(const FiniteSemiring& s);

// The three-element chain 0 < 1 < top as a join-semilattice over nat_sat(n):
// zero annihilates, every nonzero scalar acts as the identity (the iterated
// join of a chain element is itself). The variant that sends the saturation
// scalar to the top violates distributivity over the quotient -- see
// saturated_three_chain_action for its stage form.
FiniteSemimodule three_chain_module(const FiniteSemiring& nat_sat);

// An omega-indexed chain of finite semirings with surjective quotient maps
// stage(n+1) -> stage(n), materialised up to a finite exactness depth.
struct SemiringChain {
    std::vector<FiniteSemiring> stages;
    std::vector<std::vector<int>> quotients;  // quotients[n][x in stage n+1] -> stage n element

    int exactness_depth() const { return static_cast<int>(stages.size()) - 1; }
};

// stages[n] = nat_sat(n+1), quotients collapse the new largest value into top.
SemiringChain nat_sat_chain(int depth);

SemiringChain constant_chain(const FiniteSemiring& s, int depth);

// Checks that every quotient is a surjective semiring homomorphism.
ValidationReport validate_chain(const SemiringChain& chain);

// Stage presentation of an action of the chain limit on a finite module-like
// carrier. action_at[n][s][m] gives the value of the action at resolution n,
// for s in stage(n) and m in the carrier; where a quotient fibre is a
// singleton, the presented values must agree across levels.
struct StageAction {
    SemiringChain chain;
    int module_size = 0;
    int mzero = 0;
    std::vector<std::vector<int>> madd;
    std::vector<std::vector<std::vector<int>>> action_at;
};

ValidationReport validate_stage_action(const StageAction& a);

struct ContinuityFailure {
    int target = 0;       // module element whose preimage fails to stabilise
    int input = 0;        // module coordinate of the offending pair
    int level = 0;        // level at which the fibre splits
    int parent_cell = 0;  // stage(level) element whose fibre disagrees
    std::vector<int> cells_in;   // fibre members inside the preimage
    std::vector<int> cells_out;  // fibre members outside it
};

struct ContinuityReport {
    bool pass = true;
    std::vector<ContinuityFailure> failures;
};

// The action is jointly continuous at the tested resolution iff for every
// target element the stage preimages refine into full quotient fibres from
// `depth` up to the chain's exactness depth. A reported failure is a genuine
// one; passing certifies continuity for preimages definable by `depth`.
ContinuityReport check_action_joint_continuity(const StageAction& a, int depth);

// The saturated-chain action on the three-element chain {0, 1, top}:
// finite stages act by iterated addition, the saturation element sends
// nonzero elements to top. Not jointly continuous.
StageAction saturated_three_chain_action(int depth);

// A finite semiring acting on itself along a constant chain.
StageAction constant_self_action(const FiniteSemiring& s, int depth);

// The trivial action s*m = m along the given chain.
StageAction trivial_action(const SemiringChain& chain, int module_size);

}  // namespace profsemi

#endif

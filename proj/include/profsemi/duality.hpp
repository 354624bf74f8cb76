#ifndef PROFSEMI_DUALITY_HPP
#define PROFSEMI_DUALITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "profsemi/monad.hpp"
#include "profsemi/semiring.hpp"

namespace profsemi {

// Subsets of a small universe, bitmask-encoded for exact set algebra.
class Bits {
   public:
    Bits() = default;
    explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}
    static Bits all(int size);

    int size() const { return size_; }
    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    long long count() const;
    bool empty() const;
    int first() const;  // least member, -1 if empty

    Bits operator&(const Bits& o) const;
    Bits operator|(const Bits& o) const;
    Bits operator~() const;
    bool operator==(const Bits& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool subset_of(const Bits& o) const;

   private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// A finite Boolean subalgebra of a powerset, represented by its atoms.
struct FiniteBooleanAlgebra {
    int universe = 0;
    std::vector<Bits> generators;
    std::vector<Bits> atoms;
};

// smallest Boolean subalgebra of P({0..universe-1}) containing the generators
FiniteBooleanAlgebra generated_algebra(int universe, const std::vector<Bits>& generators);

// [b,k] = { f in S^X | sum over b of f = k }, as a subset of the canonical
// enumeration of S^X
struct BracketSet {
    std::vector<char> subset;  // b as a mask over X
    int target = 0;            // k
    Bits members;
};

// every [b,k] for b subset of X and k in S; throws domain_error when |S|^|X|
// exceeds the budget
std::vector<BracketSet> bracket_generators(int base, const FiniteSemiring& s, long long budget);

// integral of f over the masked subset
int subset_sum(const FiniteSemiring& s, const FinFn& f, const std::vector<char>& subset);

// the function X -> S read off an atom of the bracket-generated algebra:
// for each singleton {x} the unique k with atom inside [{x},k]
std::vector<int> atom_to_measure(const Bits& atom, int base, const FiniteSemiring& s,
                                 const std::vector<BracketSet>& brackets);

// the atom of the bracket algebra carrying the filter {[b, mu_f(b)]}
Bits measure_to_ultrafilter(const std::vector<int>& f, int base, const FiniteSemiring& s,
                            const std::vector<BracketSet>& brackets);

struct BijectionReport {
    bool pass = false;
    long long universe_size = 0;  // |S^X|
    long long atom_count = 0;
    long long expected = 0;  // |S|^|X|
    bool partial = false;    // budget exceeded, nothing checked
    std::string witness;
};

// Verifies that the bracket-generated algebra's atoms biject with S^X via the
// two maps above, and that integration transports the pointwise semimodule
// structure.
BijectionReport bijection_report(int base, const FiniteSemiring& s, long long budget);

}  // namespace profsemi

#endif

#ifndef PROFSEMI_MONAD_HPP
#define PROFSEMI_MONAD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "profsemi/semiring.hpp"

namespace profsemi {

// A total S-valued function on the base {0,...,n-1}. On a finite base this
// realises the semiring-monad value S(X) = S^X.
struct FinFn {
    std::vector<int> values;

    int base_size() const { return static_cast<int>(values.size()); }
    bool operator==(const FinFn& o) const { return values == o.values; }
};

// Canonical enumeration of S^X: functions ordered lexicographically by their
// value tuples (values[0] most significant). All law checks and bracket
// constructions index S^X this way.
long long fn_space_size(int carrier, int base);          // carrier^base, throws past 2^62
long long fn_index(const FiniteSemiring& s, const FinFn& f);
FinFn fn_at(const FiniteSemiring& s, int base, long long index);

// result(y) = sum over the phi-fibre of y of f's values
FinFn functor_map(const FiniteSemiring& s, const std::vector<int>& phi, int target_size,
                  const FinFn& f);

// the S-valued characteristic function of {x}
FinFn unit(const FiniteSemiring& s, int base, int x);

FinFn zero_fn(const FiniteSemiring& s, int base);

FinFn add_fn(const FiniteSemiring& s, const FinFn& a, const FinFn& b);
FinFn scale_fn(const FiniteSemiring& s, int scalar, const FinFn& f);

// An element of S(S(X)): coefficients over the canonical enumeration of S^X.
struct DoubleFinFn {
    int inner_base = 0;  // the base X
    FinFn outer;         // indexed by fn_index over S^X
};

// result(x) = sum over f of outer(f) * f(x)
FinFn mult(const FiniteSemiring& s, const DoubleFinFn& F);

// Law checking. Each law is verified over its full domain when that domain
// fits in `budget` enumeration steps; otherwise a structured spanning family
// of small-support elements is used and the law's entry is marked partial.
struct LawCheck {
    std::string law;
    std::string status;  // "pass" | "fail"
    bool partial = false;
    long long checked = 0;
    std::string witness;  // empty unless status == "fail"
};

struct MonadLawReport {
    bool pass = true;
    bool partial = false;
    std::vector<LawCheck> checks;
};

// Overridable monad data, so tests can inject broken variants.
struct MonadOps {
    std::function<FinFn(const FiniteSemiring&, const DoubleFinFn&)> mult_impl;
    std::function<FinFn(const FiniteSemiring&, int, int)> unit_impl;
};

MonadOps standard_monad_ops();

// Verifies the unit laws, associativity and naturality of the semiring monad
// over all bases of size <= max_base.
MonadLawReport check_monad_laws(const FiniteSemiring& s, int max_base, long long budget,
                                const MonadOps& ops = standard_monad_ops());

}  // namespace profsemi

#endif

#include "profsemi/monad.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace profsemi {

long long fn_space_size(int carrier, int base) {
    long long out = 1;
    for (int i = 0; i < base; ++i) {
        if (out > LLONG_MAX / std::max(carrier, 1)) return LLONG_MAX;
        out *= carrier;
    }
    return out;
}

long long fn_index(const FiniteSemiring& s, const FinFn& f) {
    long long idx = 0;
    for (int v : f.values) idx = idx * s.size + v;
    return idx;
}

FinFn fn_at(const FiniteSemiring& s, int base, long long index) {
    FinFn f;
    f.values.assign(base, 0);
    for (int i = base - 1; i >= 0; --i) {
        f.values[i] = static_cast<int>(index % s.size);
        index /= s.size;
    }
    return f;
}

FinFn functor_map(const FiniteSemiring& s, const std::vector<int>& phi, int target_size,
                  const FinFn& f) {
    if (phi.size() != f.values.size())
        throw mismatch_error("functor_map: function base does not match phi's source");
    FinFn out = zero_fn(s, target_size);
    for (size_t x = 0; x < phi.size(); ++x) {
        if (phi[x] < 0 || phi[x] >= target_size) throw domain_error("functor_map: phi out of range");
        out.values[phi[x]] = s.add(out.values[phi[x]], f.values[x]);
    }
    return out;
}

FinFn unit(const FiniteSemiring& s, int base, int x) {
    if (x < 0 || x >= base) throw domain_error("unit: element outside the base");
    FinFn f = zero_fn(s, base);
    f.values[x] = s.one;
    return f;
}

FinFn zero_fn(const FiniteSemiring& s, int base) {
    FinFn f;
    f.values.assign(base, s.zero);
    return f;
}

FinFn add_fn(const FiniteSemiring& s, const FinFn& a, const FinFn& b) {
    if (a.base_size() != b.base_size()) throw mismatch_error("add_fn: base mismatch");
    FinFn out = a;
    for (int i = 0; i < out.base_size(); ++i) out.values[i] = s.add(out.values[i], b.values[i]);
    return out;
}

FinFn scale_fn(const FiniteSemiring& s, int scalar, const FinFn& f) {
    FinFn out = f;
    for (auto& v : out.values) v = s.mul(scalar, v);
    return out;
}

FinFn mult(const FiniteSemiring& s, const DoubleFinFn& F) {
    long long expected = fn_space_size(s.size, F.inner_base);
    if (expected != F.outer.base_size())
        throw mismatch_error("mult: outer base must enumerate S^X exactly");
    FinFn out = zero_fn(s, F.inner_base);
    for (long long i = 0; i < expected; ++i) {
        int coeff = F.outer.values[static_cast<size_t>(i)];
        if (coeff == s.zero) continue;
        FinFn f = fn_at(s, F.inner_base, i);
        for (int x = 0; x < F.inner_base; ++x)
            out.values[x] = s.add(out.values[x], s.mul(coeff, f.values[x]));
    }
    return out;
}

MonadOps standard_monad_ops() {
    MonadOps ops;
    ops.mult_impl = [](const FiniteSemiring& s, const DoubleFinFn& F) { return mult(s, F); };
    ops.unit_impl = [](const FiniteSemiring& s, int base, int x) { return unit(s, base, x); };
    return ops;
}

namespace {

std::string fn_str(const FinFn& f) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f.base_size(); ++i) {
        if (i) os << ",";
        os << f.values[i];
    }
    os << "]";
    return os.str();
}

// sparse element of S(S(SX)): terms (coefficient, F) with F dense over SX
struct SparseTriple {
    std::vector<std::pair<int, FinFn>> terms;
};

// mu applied at the outer level of a sparse triple function, yielding a dense
// element of S(SX)
FinFn outer_mu_sparse(const FiniteSemiring& s, const SparseTriple& G, int sx_size) {
    FinFn acc = zero_fn(s, sx_size);
    for (const auto& [c, F] : G.terms)
        for (int i = 0; i < sx_size; ++i) acc.values[i] = s.add(acc.values[i], s.mul(c, F.values[i]));
    return acc;
}

struct LawChecker {
    const FiniteSemiring& s;
    const MonadOps& ops;
    MonadLawReport& rep;

    LawCheck* current = nullptr;

    void begin(const std::string& law) {
        rep.checks.push_back({law, "pass", false, 0, ""});
        current = &rep.checks.back();
    }
    void count() { ++current->checked; }
    void mark_partial() {
        current->partial = true;
        rep.partial = true;
    }
    bool fail(const std::string& witness) {
        current->status = "fail";
        current->witness = witness;
        rep.pass = false;
        return false;
    }
};

}  // namespace

MonadLawReport check_monad_laws(const FiniteSemiring& s, int max_base, long long budget,
                                const MonadOps& ops) {
    MonadLawReport rep;
    LawChecker lc{s, ops, rep};
    const int k = s.size;

    for (int m = 0; m <= max_base; ++m) {
        long long sx_ll = fn_space_size(k, m);
        if (sx_ll > budget || sx_ll > INT_MAX) {
            lc.begin("unit_laws@base" + std::to_string(m));
            lc.mark_partial();
            continue;
        }
        int sx = static_cast<int>(sx_ll);

        // eta_X: X -> SX as an index map into the canonical enumeration
        std::vector<int> eta_map(m);
        for (int x = 0; x < m; ++x)
            eta_map[x] = static_cast<int>(fn_index(s, ops.unit_impl(s, m, x)));

        lc.begin("unit_law_mu_T_eta@base" + std::to_string(m));
        for (int i = 0; i < sx; ++i) {
            FinFn f = fn_at(s, m, i);
            FinFn lifted = functor_map(s, eta_map, sx, f);  // S(eta)(f) in S(SX)
            FinFn back = ops.mult_impl(s, {m, lifted});
            lc.count();
            if (!(back == f)) {
                lc.fail("base=" + std::to_string(m) + " f=" + fn_str(f) + " mu(S(eta)(f))=" +
                        fn_str(back));
                break;
            }
        }

        lc.begin("unit_law_mu_eta_T@base" + std::to_string(m));
        for (int i = 0; i < sx; ++i) {
            FinFn f = fn_at(s, m, i);
            FinFn at = ops.unit_impl(s, sx, i);  // eta_{SX}(f)
            FinFn back = ops.mult_impl(s, {m, at});
            lc.count();
            if (!(back == f)) {
                lc.fail("base=" + std::to_string(m) + " f=" + fn_str(f) + " mu(eta_SX(f))=" +
                        fn_str(back));
                break;
            }
        }

        // associativity: mu . S(mu) == mu . mu_{SX} on S^3 X
        lc.begin("associativity@base" + std::to_string(m));
        long long ssx_ll = fn_space_size(k, sx > 62 ? 63 : sx);
        long long sssx_ll = ssx_ll == LLONG_MAX ? LLONG_MAX
                                                : fn_space_size(k, ssx_ll > 62 ? 63 : static_cast<int>(ssx_ll));
        auto check_one = [&](const SparseTriple& G, const std::string& tag) {
            // left route: push mu inside, then multiply
            FinFn inner = zero_fn(s, sx);
            for (const auto& [c, F] : G.terms) {
                FinFn g = ops.mult_impl(s, {m, F});
                long long gi = fn_index(s, g);
                inner.values[static_cast<size_t>(gi)] =
                    s.add(inner.values[static_cast<size_t>(gi)], c);
            }
            FinFn lhs = ops.mult_impl(s, {m, inner});
            // right route: multiply at the outer level first
            FinFn collapsed = outer_mu_sparse(s, G, sx);
            FinFn rhs = ops.mult_impl(s, {m, collapsed});
            lc.count();
            if (!(lhs == rhs)) {
                std::ostringstream w;
                w << "base=" << m << " " << tag << " lhs=" << fn_str(lhs) << " rhs=" << fn_str(rhs);
                lc.fail(w.str());
                return false;
            }
            return true;
        };

        bool keep_going = true;
        if (sssx_ll <= budget) {
            // full enumeration of S^3 X
            int ssx = static_cast<int>(ssx_ll);
            for (long long gi = 0; gi < sssx_ll && keep_going; ++gi) {
                FinFn outer = fn_at(s, ssx, gi);
                SparseTriple G;
                for (int i = 0; i < ssx; ++i)
                    if (outer.values[i] != s.zero) G.terms.push_back({outer.values[i], fn_at(s, sx, i)});
                keep_going = check_one(G, "G#" + std::to_string(gi));
            }
        } else {
            // spanning family: outer supports of size <= 2 over small-support
            // inner functions, plus full single-support coverage of S^2 X when
            // that layer is still enumerable
            lc.mark_partial();
            std::vector<FinFn> small_inner;  // elements a*eta(f) of S^2 X
            for (int a = 0; a < k && keep_going; ++a)
                for (int i = 0; i < sx; ++i)
                    small_inner.push_back(scale_fn(s, a, ops.unit_impl(s, sx, i)));
            for (size_t p = 0; p < small_inner.size() && keep_going; ++p)
                for (size_t q = 0; q < small_inner.size() && keep_going; ++q)
                    for (int cs = 0; cs < k && keep_going; ++cs)
                        for (int ct = 0; ct < k && keep_going; ++ct) {
                            SparseTriple G;
                            G.terms.push_back({cs, small_inner[p]});
                            G.terms.push_back({ct, small_inner[q]});
                            keep_going = check_one(G, "span2");
                        }
            if (keep_going && ssx_ll <= budget) {
                int ssx = static_cast<int>(ssx_ll);
                for (long long fi = 0; fi < ssx && keep_going; ++fi) {
                    FinFn F = fn_at(s, sx, fi);
                    for (int cs = 0; cs < k && keep_going; ++cs) {
                        SparseTriple G;
                        G.terms.push_back({cs, F});
                        keep_going = check_one(G, "span-full");
                    }
                }
            }
        }
    }

    // naturality of eta: S(phi)(eta_X(x)) == eta_Y(phi(x))
    lc.begin("eta_natural");
    for (int m1 = 0; m1 <= max_base; ++m1)
        for (int m2 = 0; m2 <= max_base; ++m2) {
            if (m1 > 0 && m2 == 0) continue;
            long long nmaps = fn_space_size(m2, m1);
            for (long long pi = 0; pi < nmaps; ++pi) {
                std::vector<int> phi(m1);
                long long t = pi;
                for (int i = m1 - 1; i >= 0; --i) {
                    phi[i] = static_cast<int>(t % std::max(m2, 1));
                    t /= std::max(m2, 1);
                }
                for (int x = 0; x < m1; ++x) {
                    FinFn lhs = functor_map(s, phi, m2, ops.unit_impl(s, m1, x));
                    FinFn rhs = ops.unit_impl(s, m2, phi[x]);
                    lc.count();
                    if (!(lhs == rhs)) {
                        lc.fail("phi#" + std::to_string(pi) + " from base " + std::to_string(m1) +
                                " at x=" + std::to_string(x));
                        goto eta_done;
                    }
                }
            }
        }
eta_done:;

    // naturality of mu: mu_Y . S^2(phi) == S(phi) . mu_X on S^2 X
    lc.begin("mu_natural");
    {
        bool keep_going = true;
        for (int m1 = 0; m1 <= max_base && keep_going; ++m1)
            for (int m2 = 0; m2 <= max_base && keep_going; ++m2) {
                if (m1 > 0 && m2 == 0) continue;
                long long sx1_ll = fn_space_size(k, m1);
                long long sx2_ll = fn_space_size(k, m2);
                if (sx1_ll > budget || sx2_ll > budget) {
                    lc.mark_partial();
                    continue;
                }
                int sx1 = static_cast<int>(sx1_ll), sx2 = static_cast<int>(sx2_ll);
                long long nmaps = fn_space_size(m2, m1);
                for (long long pi = 0; pi < nmaps && keep_going; ++pi) {
                    std::vector<int> phi(m1);
                    long long t = pi;
                    for (int i = m1 - 1; i >= 0; --i) {
                        phi[i] = static_cast<int>(t % std::max(m2, 1));
                        t /= std::max(m2, 1);
                    }
                    // S(phi) as an index map SX -> SY
                    std::vector<int> sphi(sx1);
                    for (int i = 0; i < sx1; ++i)
                        sphi[i] = static_cast<int>(fn_index(s, functor_map(s, phi, m2, fn_at(s, m1, i))));

                    long long ssx1_ll = fn_space_size(k, sx1);
                    auto check_F = [&](const FinFn& F, const std::string& tag) {
                        FinFn upper = functor_map(s, sphi, sx2, F);      // S^2(phi)(F)
                        FinFn lhs = ops.mult_impl(s, {m2, upper});       // mu_Y after
                        FinFn lower = ops.mult_impl(s, {m1, F});         // mu_X first
                        FinFn rhs = functor_map(s, phi, m2, lower);      // then S(phi)
                        lc.count();
                        if (!(lhs == rhs)) {
                            lc.fail("phi#" + std::to_string(pi) + " bases " + std::to_string(m1) +
                                    "->" + std::to_string(m2) + " " + tag);
                            return false;
                        }
                        return true;
                    };
                    if (ssx1_ll <= budget) {
                        for (long long fi = 0; fi < ssx1_ll && keep_going; ++fi)
                            keep_going = check_F(fn_at(s, sx1, fi), "F#" + std::to_string(fi));
                    } else {
                        lc.mark_partial();
                        for (int a = 0; a < k && keep_going; ++a)
                            for (int i = 0; i < sx1 && keep_going; ++i)
                                for (int b = 0; b < k && keep_going; ++b)
                                    for (int j = 0; j < sx1 && keep_going; ++j) {
                                        FinFn F = add_fn(s, scale_fn(s, a, ops.unit_impl(s, sx1, i)),
                                                         scale_fn(s, b, ops.unit_impl(s, sx1, j)));
                                        keep_going = check_F(F, "span2");
                                    }
                    }
                }
            }
    }

    return rep;
}

}  // namespace profsemi

#include "profsemi/duality.hpp"

#include <algorithm>
#include <sstream>

namespace profsemi {

Bits Bits::all(int size) {
    Bits b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
}

long long Bits::count() const {
    long long n = 0;
    for (std::uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
}

bool Bits::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

int Bits::first() const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
}

Bits Bits::operator&(const Bits& o) const {
    Bits out(size_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
    return out;
}

Bits Bits::operator|(const Bits& o) const {
    Bits out(size_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
    return out;
}

Bits Bits::operator~() const {
    Bits out(size_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    int spare = size_ & 63;
    if (spare && !out.words_.empty()) out.words_.back() &= (1ULL << spare) - 1;
    return out;
}

bool Bits::subset_of(const Bits& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

FiniteBooleanAlgebra generated_algebra(int universe, const std::vector<Bits>& generators) {
    FiniteBooleanAlgebra alg;
    alg.universe = universe;
    alg.generators = generators;
    // group universe elements by their membership pattern across the generators
    std::vector<std::vector<char>> patterns;
    for (int x = 0; x < universe; ++x) {
        std::vector<char> pat(generators.size());
        for (size_t i = 0; i < generators.size(); ++i) pat[i] = generators[i].get(x);
        auto it = std::find(patterns.begin(), patterns.end(), pat);
        if (it == patterns.end()) {
            patterns.push_back(pat);
            alg.atoms.emplace_back(universe);
            alg.atoms.back().set(x);
        } else {
            alg.atoms[it - patterns.begin()].set(x);
        }
    }
    return alg;
}

int subset_sum(const FiniteSemiring& s, const FinFn& f, const std::vector<char>& subset) {
    int acc = s.zero;
    for (int x = 0; x < f.base_size(); ++x)
        if (subset[x]) acc = s.add(acc, f.values[x]);
    return acc;
}

std::vector<BracketSet> bracket_generators(int base, const FiniteSemiring& s, long long budget) {
    long long universe = fn_space_size(s.size, base);
    if (universe > budget)
        throw domain_error("bracket enumeration of " + std::to_string(universe) +
                           " functions exceeds the budget");
    int n = static_cast<int>(universe);
    std::vector<BracketSet> out;
    for (int bm = 0; bm < (1 << base); ++bm) {
        std::vector<char> subset(base);
        for (int x = 0; x < base; ++x) subset[x] = (bm >> x) & 1;
        std::vector<Bits> buckets(s.size, Bits(n));
        for (int i = 0; i < n; ++i) buckets[subset_sum(s, fn_at(s, base, i), subset)].set(i);
        for (int k = 0; k < s.size; ++k) out.push_back({subset, k, buckets[k]});
    }
    return out;
}

std::vector<int> atom_to_measure(const Bits& atom, int base, const FiniteSemiring&,
                                 const std::vector<BracketSet>& brackets) {
    if (atom.empty()) throw domain_error("not an atom: empty set");
    std::vector<int> f(base, -1);
    for (const BracketSet& br : brackets) {
        int members = 0, x = -1;
        for (int i = 0; i < base; ++i)
            if (br.subset[i]) {
                ++members;
                x = i;
            }
        if (members != 1) continue;
        if (atom.subset_of(br.members)) {
            if (f[x] != -1 && f[x] != br.target)
                throw domain_error("not an atom: contained in two disjoint brackets");
            f[x] = br.target;
        }
    }
    for (int x = 0; x < base; ++x)
        if (f[x] == -1) throw domain_error("not an atom: no singleton bracket contains it");
    return f;
}

Bits measure_to_ultrafilter(const std::vector<int>& f, int base, const FiniteSemiring& s,
                            const std::vector<BracketSet>& brackets) {
    FinFn fn;
    fn.values = f;
    long long universe = fn_space_size(s.size, base);
    Bits acc = Bits::all(static_cast<int>(universe));
    for (const BracketSet& br : brackets)
        if (br.target == subset_sum(s, fn, br.subset)) acc = acc & br.members;
    return acc;
}

BijectionReport bijection_report(int base, const FiniteSemiring& s, long long budget) {
    BijectionReport rep;
    rep.expected = fn_space_size(s.size, base);
    if (rep.expected > budget) {
        rep.partial = true;
        rep.witness = "budget exceeded; nothing checked";
        return rep;
    }
    std::vector<BracketSet> brackets = bracket_generators(base, s, budget);
    int n = static_cast<int>(rep.expected);
    rep.universe_size = n;

    std::vector<Bits> gens;
    gens.reserve(brackets.size());
    for (const auto& b : brackets) gens.push_back(b.members);
    FiniteBooleanAlgebra alg = generated_algebra(n, gens);
    rep.atom_count = static_cast<long long>(alg.atoms.size());

    std::ostringstream w;
    bool ok = rep.atom_count == rep.expected;
    if (!ok) w << "atom count " << rep.atom_count << " != " << rep.expected << "; ";

    // the two translations are mutually inverse
    for (const Bits& atom : alg.atoms) {
        std::vector<int> f = atom_to_measure(atom, base, s, brackets);
        Bits back = measure_to_ultrafilter(f, base, s, brackets);
        if (!(back == atom)) {
            ok = false;
            w << "atom round trip failed at atom with least member " << atom.first() << "; ";
            break;
        }
    }
    for (int i = 0; i < n && ok; ++i) {
        FinFn f = fn_at(s, base, i);
        Bits atom = measure_to_ultrafilter(f.values, base, s, brackets);
        std::vector<int> back = atom_to_measure(atom, base, s, brackets);
        if (back != f.values) {
            ok = false;
            w << "function round trip failed at index " << i << "; ";
        }
    }

    // integration transports the pointwise semimodule structure
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            FinFn f = fn_at(s, base, i), g = fn_at(s, base, j);
            FinFn sum = add_fn(s, f, g);
            for (const BracketSet& br : brackets) {
                if (subset_sum(s, sum, br.subset) !=
                    s.add(subset_sum(s, f, br.subset), subset_sum(s, g, br.subset))) {
                    ok = false;
                    w << "additivity transport fails at (" << i << "," << j << "); ";
                    break;
                }
            }
        }
    for (int i = 0; i < n && ok; ++i)
        for (int c = 0; c < s.size && ok; ++c) {
            FinFn f = fn_at(s, base, i);
            FinFn scaled = scale_fn(s, c, f);
            for (const BracketSet& br : brackets) {
                if (subset_sum(s, scaled, br.subset) != s.mul(c, subset_sum(s, f, br.subset))) {
                    ok = false;
                    w << "scaling transport fails at (" << c << "," << i << "); ";
                    break;
                }
            }
        }

    rep.pass = ok;
    rep.witness = w.str();
    return rep;
}

}  // namespace profsemi

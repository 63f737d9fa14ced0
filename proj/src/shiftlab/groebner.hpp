#ifndef SHIFTLAB_GROEBNER_HPP
#define SHIFTLAB_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <tuple>
#include <type_traits>

#include "fp.hpp"
#include "generic_matrix.hpp"
#include "monomial_ideal.hpp"

namespace shiftlab {

// A reduced Groebner basis under the degree reverse lexicographic order
// (y_n largest): generators monic, no leading term divides another, every
// tail term reduced against the rest.
template <class K>
struct GroebnerBasis {
    int n = 0;
    std::vector<Polynomial<K>> gens;
};

// Remainder of full division by G; no term of the result is divisible by a
// leading term of G. Zero iff f lies in the ideal when G is a basis.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
    Polynomial<K> rest = f;
    std::vector<typename Polynomial<K>::Term> kept;  // irreducible terms, decreasing
    while (!rest.is_zero()) {
        const Monomial& lead = rest.leading_monomial();
        const Polynomial<K>* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lead)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            kept.emplace_back(lead, rest.leading_coefficient());
            rest.remove_leading();
            continue;
        }
        K factor = rest.leading_coefficient() / divisor->leading_coefficient();
        rest.add_scaled(*divisor, -factor, lead / divisor->leading_monomial());
    }
    return Polynomial<K>::from_terms(f.n(), std::move(kept));
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& basis) {
    return normal_form(f, basis.gens);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<K> s(f.n());
    s.add_scaled(f, f.leading_coefficient().inv(), l / f.leading_monomial());
    s.add_scaled(g, -g.leading_coefficient().inv(), l / g.leading_monomial());
    return s;
}

// Buchberger with the normal selection strategy: pending pairs are handled
// in increasing lcm degree, pairs with coprime leading terms are dropped.
// Input generators must be nonzero and homogeneous.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& input) {
    int n = -1;
    for (const auto& f : input) {
        if (f.is_zero()) throw ContractError("zero generator");
        if (!f.is_homogeneous()) throw ContractError("non-homogeneous generator");
        if (n < 0) n = f.n();
        if (f.n() != n) throw ContractError("variable counts differ");
    }
    GroebnerBasis<K> out;
    if (input.empty()) return out;
    out.n = n;

    std::vector<Polynomial<K>> seeds = input;
    std::sort(seeds.begin(), seeds.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        return a.degree() < b.degree();
    });

    std::vector<Polynomial<K>> basis;

    // (lcm degree, i, j) processed in increasing degree; sorted deque
    using Pair = std::tuple<int, std::size_t, std::size_t>;
    std::deque<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            // product criterion: coprime leading terms reduce to zero
            if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
            int deg = lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
            Pair p{deg, i, j};
            auto pos = std::lower_bound(queue.begin(), queue.end(), p);
            queue.insert(pos, p);
        }
    };
    auto append = [&](Polynomial<K> f) {
        f.make_monic();
        basis.push_back(std::move(f));
        push_pairs(basis.size() - 1);
    };
    // chain criterion, proper-divisor form: a third leading term dividing
    // the lcm splits the pair into two of strictly smaller degree
    auto chain_skip = [&](std::size_t i, std::size_t j) {
        Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == i || k == j) continue;
            const Monomial& lk = basis[k].leading_monomial();
            if (!lk.divides(l)) continue;
            if (lcm(lk, basis[i].leading_monomial()) != l &&
                lcm(lk, basis[j].leading_monomial()) != l)
                return true;
        }
        return false;
    };

    for (const auto& f : seeds) {
        Polynomial<K> r = normal_form(f, basis);
        if (!r.is_zero()) append(std::move(r));
    }
    while (!queue.empty()) {
        auto [deg, i, j] = queue.front();
        queue.pop_front();
        if (chain_skip(i, j)) continue;
        Polynomial<K> r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (!r.is_zero()) append(std::move(r));
    }

    // minimalize and fully interreduce
    std::vector<Polynomial<K>> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
            if (j != i && basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
                basis[j].leading_monomial() != basis[i].leading_monomial())
                redundant = true;
        if (!redundant) kept.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(kept[i], others);
        kept[i].make_monic();
    }
    std::erase_if(kept, [](const Polynomial<K>& f) { return f.is_zero(); });
    std::sort(kept.begin(), kept.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        return revlex_greater(a.leading_monomial(), b.leading_monomial());
    });
    out.gens = std::move(kept);
    return out;
}

template <class K>
MonomialIdeal initial_ideal(const GroebnerBasis<K>& basis) {
    std::vector<Monomial> leads;
    for (const auto& g : basis.gens) leads.push_back(g.leading_monomial());
    return MonomialIdeal::from_generators(basis.n, leads);
}

// The outcome of a generic initial ideal computation. `certified` holds only
// when every attempted seed produced the same monomial ideal and that ideal
// passed the strong stability closure test.
struct GinResult {
    MonomialIdeal gin;
    std::vector<std::uint64_t> seeds_used;
    bool certified = false;
    bool strongly_stable = false;
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, int attempt) {
    return splitmix64(base ^ splitmix64(stream) ^ (0x9e3779b97f4a7c15ULL * (attempt + 1)));
}

// In(u I) for `attempts` independently sampled generic changes of
// coordinates. Requires a prime exceeding every generator degree, so the
// characteristic never interferes with the degrees in play.
template <class K>
GinResult gin(int n, const std::vector<Polynomial<K>>& gens, int attempts,
              std::uint64_t base_seed) {
    if (attempts < 2) throw ContractError("certification needs at least 2 attempts");
    int max_degree = 0;
    for (const auto& f : gens) {
        if (f.is_zero()) throw ContractError("zero generator");
        if (!f.is_homogeneous()) throw ContractError("non-homogeneous generator");
        if (f.n() != n) throw ContractError("variable counts differ");
        max_degree = std::max(max_degree, f.degree());
    }
    if constexpr (std::is_same_v<K, Fp>) {
        if (static_cast<long long>(K::modulus()) <= max_degree)
            throw ContractError("session prime must exceed the generator degrees");
    }

    GinResult result;
    if (gens.empty()) {
        // zero ideal: every change of coordinates fixes it
        result.gin = MonomialIdeal(n);
        result.certified = true;
        result.strongly_stable = true;
        return result;
    }

    bool all_agree = true;
    for (int t = 0; t < attempts; ++t) {
        std::uint64_t seed = derive_seed(base_seed, 0x67696e00ULL, t);
        auto u = random_generic_matrix<K>(n, seed);
        std::vector<Polynomial<K>> moved;
        moved.reserve(gens.size());
        for (const auto& f : gens) moved.push_back(apply_linear_map(u, f));
        MonomialIdeal in_t = initial_ideal(buchberger(moved));
        result.seeds_used.push_back(seed);
        if (t == 0)
            result.gin = in_t;
        else if (in_t != result.gin)
            all_agree = false;
    }
    result.strongly_stable = result.gin.is_strongly_stable();
    result.certified = all_agree && result.strongly_stable;
    return result;
}

} // namespace shiftlab

#endif

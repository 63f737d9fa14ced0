#include "monomial_ideal.hpp"

#include <algorithm>
#include <bit>

namespace shiftlab {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1) out.push_back(i);
    return out;
}

Subset subset_from(const std::vector<int>& elements, int n) {
    Subset s = 0;
    for (int v : elements) {
        if (v < 1 || v > n) throw ContractError("subset element out of range");
        s |= Subset(1) << (v - 1);
    }
    return s;
}

std::string subset_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int v : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.n() != n) throw ContractError("generator has wrong variable count");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return revlex_greater(b, a);  // increasing degree first, cheap divisors early
    });
    MonomialIdeal ideal(n);
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : ideal.gens_) {
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) ideal.gens_.push_back(g);
    }
    std::sort(ideal.gens_.begin(), ideal.gens_.end(), revlex_greater);
    return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::is_strongly_stable(std::string* violation) const {
    for (const auto& g : gens_) {
        for (int i : g.support()) {
            for (int j = i + 1; j <= n_; ++j) {
                Monomial swapped = (g / Monomial::variable(n_, i)).multiply_variable(j);
                if (!contains(swapped)) {
                    if (violation)
                        *violation = "swap " + g.debug_string() + ": y" + std::to_string(i) +
                                     " -> y" + std::to_string(j) + " leaves the ideal";
                    return false;
                }
            }
        }
    }
    return true;
}

bool MonomialIdeal::is_squarefree_strongly_stable(std::string* violation) const {
    if (!is_squarefree()) {
        if (violation) *violation = "ideal is not squarefree";
        return false;
    }
    for (const auto& g : gens_) {
        for (int i : g.support()) {
            for (int j = i + 1; j <= n_; ++j) {
                if (g.exponent(j) > 0) continue;
                Monomial swapped = (g / Monomial::variable(n_, i)).multiply_variable(j);
                if (!contains(swapped)) {
                    if (violation)
                        *violation = "swap " + g.debug_string() + ": y" + std::to_string(i) +
                                     " -> y" + std::to_string(j) + " leaves the ideal";
                    return false;
                }
            }
        }
    }
    return true;
}

long MonomialIdeal::slice_dimension(int degree) const {
    long count = 0;
    for (const auto& m : monomials_of_degree(n_, degree))
        if (contains(m)) ++count;
    return count;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int degree) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(n_, degree))
        if (!contains(m)) out.push_back(m);
    return out;
}

bool operator<(const StandardPair& a, const StandardPair& b) {
    int sa = std::popcount(a.sigma), sb = std::popcount(b.sigma);
    if (sa != sb) return sa > sb;
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    if (a.coset.degree() != b.coset.degree()) return a.coset.degree() < b.coset.degree();
    return revlex_greater(a.coset, b.coset);
}

namespace {

// m*N^sigma is free of the ideal iff no generator, with its sigma part
// deleted, divides m.
bool admissible(const std::vector<Monomial>& gens, const Monomial& coset, Subset sigma, int n) {
    for (const auto& g : gens) {
        bool divides = true;
        for (int i = 1; i <= n && divides; ++i) {
            if (sigma & (Subset(1) << (i - 1))) continue;
            if (g.exponent(i) > coset.exponent(i)) divides = false;
        }
        if (divides) return false;
    }
    return true;
}

} // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal) {
    if (!ideal.is_proper()) throw ContractError("standard pairs require a proper ideal");
    int n = ideal.n();
    const auto& gens = ideal.min_gens();

    // Coordinatewise bound: outside sigma a standard coset never needs an
    // exponent at or above the largest generator exponent in that variable.
    std::vector<int> bound(static_cast<std::size_t>(n), 0);
    for (const auto& g : gens)
        for (int i = 1; i <= n; ++i)
            bound[i - 1] = std::max(bound[i - 1], g.exponent(i));

    // An admissible pair is maximal iff no single-variable extension
    // (drop the j-exponent from the coset, add j to sigma) is admissible:
    // any strictly larger admissible pair contains such an extension.
    std::vector<StandardPair> maximal;
    for (Subset sigma = 0; sigma < (Subset(1) << n); ++sigma) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        while (true) {
            Monomial coset = Monomial::from_exponents(n, exps);
            if (admissible(gens, coset, sigma, n)) {
                bool is_maximal = true;
                for (int j = 1; j <= n && is_maximal; ++j) {
                    if (sigma & (Subset(1) << (j - 1))) continue;
                    Monomial reduced = coset;
                    reduced.set_exponent(j, 0);
                    if (admissible(gens, reduced, sigma | (Subset(1) << (j - 1)), n))
                        is_maximal = false;
                }
                if (is_maximal) maximal.push_back({coset, sigma});
            }
            // advance odometer over variables outside sigma
            int i = 0;
            while (i < n) {
                if (sigma & (Subset(1) << i)) {
                    ++i;
                    continue;
                }
                if (exps[i] < bound[i]) {
                    ++exps[i];
                    break;
                }
                exps[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

DegreeReport degree_report(const std::vector<StandardPair>& pairs, int n) {
    (void)n;
    DegreeReport report;
    for (const auto& p : pairs) {
        report.multiplicities[p.sigma]++;
        report.dim = std::max(report.dim, std::popcount(p.sigma));
        if (p.coset.is_one()) report.minimal_primes.push_back(p.sigma);
    }
    std::sort(report.minimal_primes.begin(), report.minimal_primes.end());
    report.arithdeg = static_cast<long>(pairs.size());
    for (const auto& [sigma, mult] : report.multiplicities) {
        if (std::popcount(sigma) == report.dim) report.degree += mult;
        bool minimal = std::find(report.minimal_primes.begin(), report.minimal_primes.end(),
                                 sigma) != report.minimal_primes.end();
        if (minimal) report.geomdeg += mult;
    }
    return report;
}

DegreeReport degree_report(const MonomialIdeal& ideal) {
    return degree_report(standard_pairs(ideal), ideal.n());
}

} // namespace shiftlab

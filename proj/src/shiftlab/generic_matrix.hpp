#ifndef SHIFTLAB_GENERIC_MATRIX_HPP
#define SHIFTLAB_GENERIC_MATRIX_HPP

#include <cstdint>

#include "linalg.hpp"
#include "polynomial.hpp"

namespace shiftlab {

// An invertible change of coordinates y_i -> sum_j entry(i,j) y_j, together
// with the seed it was sampled from.
template <class K>
class GenericMatrix {
public:
    GenericMatrix(Matrix<K> entries, std::uint64_t seed)
        : entries_(std::move(entries)), seed_(seed) {
        if (!invertible(entries_)) throw ContractError("matrix is singular");
    }

    static GenericMatrix identity(int n) {
        Matrix<K> m(n, std::vector<K>(n, K::zero()));
        for (int i = 0; i < n; ++i) m[i][i] = K::one();
        return GenericMatrix(std::move(m), 0);
    }

    int n() const { return static_cast<int>(entries_.size()); }
    std::uint64_t seed() const { return seed_; }
    const K& entry(int i, int j) const { return entries_[i - 1][j - 1]; }
    const Matrix<K>& entries() const { return entries_; }

    GenericMatrix inverted() const { return GenericMatrix(inverse(entries_), seed_); }

    // image of y_i as a linear form
    Polynomial<K> image_of_variable(int i) const {
        std::vector<typename Polynomial<K>::Term> ts;
        for (int j = 1; j <= n(); ++j)
            if (!entry(i, j).is_zero())
                ts.emplace_back(Monomial::variable(n(), j), entry(i, j));
        return Polynomial<K>::from_terms(n(), std::move(ts));
    }

private:
    Matrix<K> entries_;
    std::uint64_t seed_;
};

// Deterministic in the seed; entries uniform over nonzero field elements,
// resampled until invertible (singularity is vanishingly rare).
template <class K>
GenericMatrix<K> random_generic_matrix(int n, std::uint64_t seed) {
    if (n < 1) throw ContractError("matrix dimension must be positive");
    Rng rng(splitmix64(seed));
    for (int attempt = 0; attempt < 100; ++attempt) {
        Matrix<K> m(n, std::vector<K>(n, K::zero()));
        for (auto& row : m)
            for (auto& e : row) e = K::sample_nonzero(rng);
        if (invertible(m)) return GenericMatrix<K>(std::move(m), seed);
    }
    throw ContractError("failed to sample an invertible matrix in 100 attempts");
}

// Ring homomorphism determined by y_i -> u(y_i), applied term by term.
template <class K>
Polynomial<K> apply_linear_map(const GenericMatrix<K>& u, const Polynomial<K>& f) {
    if (f.n() != u.n()) throw ContractError("variable counts differ");
    int n = f.n();
    Polynomial<K> result(n);
    for (const auto& [m, c] : f.terms()) {
        Polynomial<K> term = Polynomial<K>::term(Monomial::one(n), c);
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e < m.exponent(i); ++e) term = term * u.image_of_variable(i);
        result += term;
    }
    return result;
}

} // namespace shiftlab

#endif

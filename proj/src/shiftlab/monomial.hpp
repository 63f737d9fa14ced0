#ifndef SHIFTLAB_MONOMIAL_HPP
#define SHIFTLAB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "common.hpp"

namespace shiftlab {

// A monomial in y_1..y_n as a dense exponent vector. Indices are 1-based
// and y_n is the largest variable under the order used everywhere here.
class Monomial {
public:
    static constexpr int kMaxVars = 16;

    Monomial() : n_(0), deg_(0) { exp_.fill(0); }

    static Monomial one(int n) { return Monomial(checked_n(n)); }

    static Monomial variable(int n, int i) {
        Monomial m(checked_n(n));
        m.set_exponent(i, 1);
        return m;
    }

    static Monomial from_exponents(int n, const std::vector<int>& exps);

    int n() const { return n_; }
    int degree() const { return deg_; }

    int exponent(int i) const { return exp_[i - 1]; }

    void set_exponent(int i, int e) {
        if (i < 1 || i > n_) throw ContractError("variable index out of range");
        if (e < 0 || e > 255) throw ContractError("exponent out of range");
        deg_ = static_cast<std::uint16_t>(deg_ - exp_[i - 1] + e);
        exp_[i - 1] = static_cast<std::uint8_t>(e);
    }

    bool is_one() const { return deg_ == 0; }
    bool is_squarefree() const;

    std::vector<int> support() const;
    int min_support() const;  // 0 when m = 1
    int max_support() const;  // 0 when m = 1

    bool divides(const Monomial& m) const;

    Monomial operator*(const Monomial& o) const;
    // exact division; o must divide *this
    Monomial operator/(const Monomial& o) const;

    Monomial multiply_variable(int i, int count = 1) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::size_t hash() const {
        return static_cast<std::size_t>(fnv1a(exp_.data(), n_, 0xcbf29ce484222325ULL ^ n_));
    }

    std::string debug_string() const;

private:
    explicit Monomial(int n) : n_(static_cast<std::uint8_t>(n)), deg_(0) { exp_.fill(0); }

    static int checked_n(int n) {
        if (n < 0 || n > kMaxVars) throw ContractError("variable count out of range");
        return n;
    }

    friend std::strong_ordering revlex_compare(const Monomial&, const Monomial&);
    friend Monomial lcm(const Monomial&, const Monomial&);
    friend Monomial gcd(const Monomial&, const Monomial&);
    friend bool coprime(const Monomial&, const Monomial&);

    std::array<std::uint8_t, kMaxVars> exp_;
    std::uint8_t n_;
    std::uint16_t deg_;
};

// Degree reverse lexicographic order with y_n > y_{n-1} > ... > y_1.
// Higher total degree wins; on equal degrees the monomial with the smaller
// exponent at the smallest differing index is the larger one.
std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b);

inline bool revlex_greater(const Monomial& a, const Monomial& b) {
    return revlex_compare(a, b) == std::strong_ordering::greater;
}

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// A squarefree monomial over Z-indexed variables, as a strictly increasing
// support list. Images of the squarefree map can have indices <= 0.
struct SqfMonomial {
    std::vector<int> support;  // strictly increasing

    int degree() const { return static_cast<int>(support.size()); }
    bool in_range(int lo, int hi) const {
        return support.empty() || (support.front() >= lo && support.back() <= hi);
    }
    friend bool operator==(const SqfMonomial& a, const SqfMonomial& b) {
        return a.support == b.support;
    }
};

// Same order on squarefree Z-indexed monomials: degree first, then the one
// missing the smallest differing index is larger.
std::strong_ordering revlex_compare(const SqfMonomial& a, const SqfMonomial& b);

// The degree- and order-preserving bijection onto squarefree monomials:
// list the indices of m with multiplicity in weakly decreasing order
// i_1 >= i_2 >= ... >= i_r; the image has support {i_k - (k-1)}.
SqfMonomial phi(const Monomial& m);

// Inverse of phi on squarefree inputs with the stated support shape.
Monomial phi_inverse(const SqfMonomial& s, int n);

// All monomials in y_1..y_n of the given total degree, unordered.
std::vector<Monomial> monomials_of_degree(int n, int degree);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace shiftlab

#endif

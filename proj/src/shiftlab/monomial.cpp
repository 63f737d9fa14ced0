#include "monomial.hpp"

#include <algorithm>

namespace shiftlab {

Monomial Monomial::from_exponents(int n, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != n)
        throw ContractError("exponent vector length does not match variable count");
    Monomial m(checked_n(n));
    for (int i = 1; i <= n; ++i) m.set_exponent(i, exps[i - 1]);
    return m;
}

bool Monomial::is_squarefree() const {
    for (int i = 0; i < n_; ++i)
        if (exp_[i] > 1) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < n_; ++i)
        if (exp_[i] > 0) s.push_back(i + 1);
    return s;
}

int Monomial::min_support() const {
    for (int i = 0; i < n_; ++i)
        if (exp_[i] > 0) return i + 1;
    return 0;
}

int Monomial::max_support() const {
    for (int i = n_ - 1; i >= 0; --i)
        if (exp_[i] > 0) return i + 1;
    return 0;
}

bool Monomial::divides(const Monomial& m) const {
    if (n_ != m.n_) throw ContractError("variable counts differ");
    if (deg_ > m.deg_) return false;
    for (int i = 0; i < n_; ++i)
        if (exp_[i] > m.exp_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (n_ != o.n_) throw ContractError("variable counts differ");
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
        int e = exp_[i] + o.exp_[i];
        if (e > 255) throw ContractError("exponent overflow");
        r.exp_[i] = static_cast<std::uint8_t>(e);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw ContractError("inexact monomial division");
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - o.exp_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
}

Monomial Monomial::multiply_variable(int i, int count) const {
    Monomial r = *this;
    r.set_exponent(i, r.exponent(i) + count);
    return r;
}

std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw ContractError("cannot compare monomials in different variable counts");
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    for (int i = 0; i < a.n_; ++i) {
        if (a.exp_[i] != b.exp_[i])
            return a.exp_[i] < b.exp_[i] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw ContractError("variable counts differ");
    Monomial r = a;
    int deg = 0;
    for (int i = 0; i < a.n_; ++i) {
        r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        deg += r.exp_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(deg);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw ContractError("variable counts differ");
    Monomial r = a;
    int deg = 0;
    for (int i = 0; i < a.n_; ++i) {
        r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
        deg += r.exp_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(deg);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw ContractError("variable counts differ");
    for (int i = 0; i < a.n_; ++i)
        if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
    return true;
}

std::string Monomial::debug_string() const {
    if (is_one()) return "1";
    std::string s;
    for (int i = n_; i >= 1; --i) {
        int e = exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "y" + std::to_string(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::strong_ordering revlex_compare(const SqfMonomial& a, const SqfMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // The smallest index in the symmetric difference decides: whoever does
    // NOT contain it has the smaller exponent there, hence is larger.
    std::size_t ia = 0, ib = 0;
    while (ia < a.support.size() && ib < b.support.size()) {
        int va = a.support[ia], vb = b.support[ib];
        if (va == vb) {
            ++ia;
            ++ib;
            continue;
        }
        return va < vb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

SqfMonomial phi(const Monomial& m) {
    std::vector<int> desc;
    desc.reserve(m.degree());
    for (int i = m.n(); i >= 1; --i)
        for (int k = 0; k < m.exponent(i); ++k) desc.push_back(i);
    SqfMonomial out;
    out.support.resize(desc.size());
    for (std::size_t k = 0; k < desc.size(); ++k)
        out.support[desc.size() - 1 - k] = desc[k] - static_cast<int>(k);
    return out;
}

Monomial phi_inverse(const SqfMonomial& s, int n) {
    Monomial m = Monomial::one(n);
    // support listed increasing; the k-th largest index j_k came from j_k + (k-1)
    int k = 0;
    for (auto it = s.support.rbegin(); it != s.support.rend(); ++it, ++k) {
        int idx = *it + k;
        if (idx < 1 || idx > n) throw ContractError("phi preimage leaves the variable range");
        m = m.multiply_variable(idx);
    }
    return m;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
    std::vector<Monomial> out;
    // lexicographic backtracking over exponent vectors
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == n) {
            if (remaining == 0) {
                std::vector<int> exps(e.begin(), e.end());
                out.push_back(Monomial::from_exponents(n, exps));
            }
            return;
        }
        if (i == n - 1) {
            e[i] = remaining;
            rec(n, 0);
            e[i] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[i] = v;
            rec(i + 1, remaining - v);
        }
        e[i] = 0;
    };
    if (n == 0) {
        if (degree == 0) out.push_back(Monomial::one(0));
        return out;
    }
    rec(0, degree);
    return out;
}

} // namespace shiftlab

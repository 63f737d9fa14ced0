#ifndef SHIFTLAB_POLYNOMIAL_HPP
#define SHIFTLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace shiftlab {

// Sparse polynomial over the coefficient field K. Terms are kept sorted in
// strictly decreasing monomial order, so terms().front() is the leading term.
template <class K>
class Polynomial {
public:
    using Term = std::pair<Monomial, K>;

    Polynomial() : n_(0) {}
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial term(const Monomial& m, const K& c) {
        Polynomial p(m.n());
        if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }

    static Polynomial from_terms(int n, std::vector<Term> terms) {
        Polynomial p(n);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.front().first;
    }
    const K& leading_coefficient() const {
        require_nonzero();
        return terms_.front().second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(n_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        add_scaled(o, K::one(), Monomial::one(n_));
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        add_scaled(o, -K::one(), Monomial::one(n_));
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_) throw ContractError("variable counts differ");
        Polynomial r(a.n_);
        for (const auto& [m, c] : a.terms_) r.add_scaled(b, c, m);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // *this += c * m * o; the workhorse of division and S-polynomials.
    void add_scaled(const Polynomial& o, const K& c, const Monomial& m) {
        if (o.n_ != n_) throw ContractError("variable counts differ");
        if (c.is_zero() || o.is_zero()) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size()) {
                merged.push_back(std::move(terms_[i++]));
                continue;
            }
            Monomial mm = o.terms_[j].first * m;
            if (i == terms_.size()) {
                K cc = c * o.terms_[j].second;
                if (!cc.is_zero()) merged.emplace_back(std::move(mm), std::move(cc));
                ++j;
                continue;
            }
            auto cmp = revlex_compare(terms_[i].first, mm);
            if (cmp == std::strong_ordering::greater) {
                merged.push_back(std::move(terms_[i++]));
            } else if (cmp == std::strong_ordering::less) {
                K cc = c * o.terms_[j].second;
                if (!cc.is_zero()) merged.emplace_back(std::move(mm), std::move(cc));
                ++j;
            } else {
                K cc = terms_[i].second + c * o.terms_[j].second;
                if (!cc.is_zero()) merged.emplace_back(std::move(mm), std::move(cc));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(merged);
    }

    void scale(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [m, coeff] : terms_) coeff *= c;
    }

    void make_monic() {
        if (is_zero()) return;
        K lead = leading_coefficient();
        scale(lead.inv());
    }

    void remove_leading() {
        require_nonzero();
        terms_.erase(terms_.begin());
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw ContractError("zero polynomial has no leading term");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return revlex_greater(a.first, b.first);
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!t.second.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    int n_;
    std::vector<Term> terms_;
};

// --- field-agnostic input form ---------------------------------------------

struct InputCoeff {
    long long num = 0;
    long long den = 1;
};

// Parsed polynomials are stored with exact integer/fraction coefficients and
// converted to a concrete field when a computation starts.
struct InputPoly {
    int n = 0;
    std::vector<std::pair<Monomial, InputCoeff>> terms;

    template <class K>
    Polynomial<K> lift() const {
        std::vector<typename Polynomial<K>::Term> ts;
        ts.reserve(terms.size());
        for (const auto& [m, c] : terms)
            ts.emplace_back(m, K::from_int(c.num) / K::from_int(c.den));
        return Polynomial<K>::from_terms(n, std::move(ts));
    }
};

// Variable naming for text I/O. Names are listed from y_1 upward, so the
// last name is the largest variable.
class VarNames {
public:
    VarNames() = default;
    explicit VarNames(std::vector<std::string> names);
    static VarNames letters(int n);   // a, b, c, ...
    static VarNames indexed(int n);   // y1, y2, ...

    int n() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i - 1]; }
    // returns 0 when unknown
    int index_of(const std::string& name) const;
    bool single_letters() const { return single_letters_; }

private:
    std::vector<std::string> names_;
    bool single_letters_ = false;
};

// Canonical text form: terms in decreasing order joined by " + "/" - ",
// variables within a term in decreasing index order. parse(print(f)) == f
// and print is a fixed point on its own output.
std::string print_monomial(const Monomial& m, const VarNames& names);
std::string print_sqf(const SqfMonomial& m, const VarNames& names);

template <class K>
std::string print_polynomial(const Polynomial<K>& f, const VarNames& names) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (m.is_one()) {
            out += cs;
        } else {
            if (cs != "1") {
                out += cs;
                if (!names.single_letters()) out += "*";
            }
            out += print_monomial(m, names);
        }
    }
    return out;
}

// Parses one polynomial. Coefficients are (optionally signed) integers with
// an optional /denominator (resolved by field division on lift).
InputPoly parse_polynomial(const std::string& text, const VarNames& names, int line = 0);

// An ideal as read from disk: a `vars:` header followed by one polynomial
// per line. '#' starts a comment.
struct IdealInput {
    VarNames names;
    std::vector<InputPoly> generators;

    int n() const { return names.n(); }
    bool all_monomials() const;
};

IdealInput parse_ideal_text(const std::string& text);
std::string print_ideal_text(const IdealInput& ideal);

} // namespace shiftlab

#endif

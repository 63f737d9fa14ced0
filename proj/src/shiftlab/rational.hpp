#ifndef SHIFTLAB_RATIONAL_HPP
#define SHIFTLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "common.hpp"

namespace shiftlab {

// Exact rational coefficients, the slow certification mode. Same interface
// as Fp so the algebra templates instantiate for both.
class Rat {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rat() = default;
    explicit Rat(rep v) : v_(std::move(v)) {}

    static Rat zero() { return Rat(); }
    static Rat one() { return from_int(1); }
    static Rat from_int(long long x) { return Rat(rep(x)); }
    static Rat sample_nonzero(Rng& rng) {
        // Generic integer entries; 16 bits of entropy per entry is plenty
        // for the Zariski-openness argument at desk scale.
        return from_int(1 + static_cast<long long>(rng.below(65535)));
    }

    bool is_zero() const { return v_ == 0; }
    const rep& value() const { return v_; }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ContractError("division by zero in Q");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    Rat inv() const {
        if (is_zero()) throw ContractError("division by zero in Q");
        return Rat(rep(1) / v_);
    }

    std::string to_string() const { return v_.str(); }

private:
    rep v_;
};

} // namespace shiftlab

#endif

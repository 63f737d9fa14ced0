#ifndef SHIFTLAB_FP_HPP
#define SHIFTLAB_FP_HPP

#include <cstdint>
#include <string>

#include "common.hpp"

namespace shiftlab {

// Prime-field element. The modulus is a process-wide session setting: all
// F_p computations in one session share a single prime. It must fit in 31
// bits so products fit in uint64.
class Fp {
public:
    Fp() : v_(0) {}
    explicit Fp(std::uint32_t v) : v_(v % modulus_) {}

    static void set_modulus(std::uint32_t p) {
        if (!is_prime_u32(p) || p < 3 || p >= (1u << 31))
            throw ContractError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
        modulus_ = p;
    }
    static std::uint32_t modulus() { return modulus_; }

    static Fp zero() { return Fp(); }
    static Fp one() { return from_int(1); }
    static Fp from_int(long long x) {
        long long r = x % static_cast<long long>(modulus_);
        if (r < 0) r += modulus_;
        Fp e;
        e.v_ = static_cast<std::uint32_t>(r);
        return e;
    }
    static Fp sample_nonzero(Rng& rng) {
        Fp e;
        e.v_ = 1 + static_cast<std::uint32_t>(rng.below(modulus_ - 1));
        return e;
    }

    bool is_zero() const { return v_ == 0; }
    std::uint32_t value() const { return v_; }

    Fp operator-() const {
        Fp e;
        e.v_ = v_ == 0 ? 0 : modulus_ - v_;
        return e;
    }
    Fp& operator+=(Fp o) {
        v_ += o.v_;
        if (v_ >= modulus_) v_ -= modulus_;
        return *this;
    }
    Fp& operator-=(Fp o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
        return *this;
    }
    Fp& operator*=(Fp o) {
        v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % modulus_);
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inv() const {
        if (v_ == 0) throw ContractError("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, t1 = 1;
        std::int64_t r = modulus_, r1 = v_;
        while (r1 != 0) {
            std::int64_t q = r / r1;
            std::int64_t tmp = t - q * t1;
            t = t1;
            t1 = tmp;
            tmp = r - q * r1;
            r = r1;
            r1 = tmp;
        }
        if (t < 0) t += modulus_;
        Fp e;
        e.v_ = static_cast<std::uint32_t>(t);
        return e;
    }

    // Balanced representation: values above p/2 print as negatives, so
    // small integer inputs round-trip through text.
    std::string to_string() const {
        if (v_ > modulus_ / 2)
            return "-" + std::to_string(modulus_ - v_);
        return std::to_string(v_);
    }

private:
    std::uint32_t v_;
    static inline std::uint32_t modulus_ = 32003;
};

} // namespace shiftlab

#endif

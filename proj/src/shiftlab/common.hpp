#ifndef SHIFTLAB_COMMON_HPP
#define SHIFTLAB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shiftlab {

// Error taxonomy mirrored by the C API status codes and CLI exit codes.

// Malformed input text; carries a 1-based position when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0, int column = 0)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
    }
    int line_, column_;
};

// A precondition documented in the public API was violated by the caller.
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Generic-coordinate runs disagreed; the result cannot be trusted.
class UncertifiedError : public std::runtime_error {
public:
    explicit UncertifiedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two routes that must agree by theorem disagreed; signals a bug or an
// uncertified intermediate that slipped through.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// --- deterministic randomness -------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Small deterministic generator; identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x1234567887654321ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

// FNV-1a, used to derive per-object seeds.
inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

// --- small numerics -------------------------------------------------------

// C(a, b) with the usual convention: 0 when b < 0 or b > a (a >= 0 assumed).
inline long long binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    if (b > a - b) b = a - b;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace shiftlab

#endif

// Exact arbitrary-precision arithmetic used throughout: every eigenvalue,
// Gaussian coefficient and term value is an ExactInt; envelope ratios are
// exact rationals. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qeig {

using ExactInt = mpz_class;
using Rat = mpq_class;

// base^exp for a (possibly negative) machine-integer base.
inline ExactInt pow_int(long base, unsigned long exp) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && (exp & 1u)) r = -r;
    return r;
}

inline ExactInt abs_int(const ExactInt& x) { return x < 0 ? ExactInt(-x) : x; }

inline int sign_of(const ExactInt& x) { return mpz_sgn(x.get_mpz_t()); }

// n choose 2, as a plain long (arguments here are small indices).
inline long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Ordinary binomial coefficient.
inline ExactInt binomial(unsigned long n, unsigned long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const ExactInt& x) { return x.get_str(); }

// FNV-1a over a byte string; used for checkpoint witness hashes (stable,
// not cryptographic).
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

}  // namespace qeig

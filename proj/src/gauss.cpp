#include "qeig/gauss.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qeig {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

ExactInt gauss(long n, long k, long q) {
    if (n < 0 || k < 0) throw std::invalid_argument("gauss: n and k must be nonnegative");
    if (q < 2) throw std::invalid_argument("gauss: base q must be >= 2");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    ExactInt acc = 1;
    ExactInt num_pow = pow_int(q, static_cast<unsigned long>(n - k));  // q^{n-k+i} rolls forward
    ExactInt den_pow = 1;                                              // q^i rolls forward
    for (long i = 1; i <= k; ++i) {
        num_pow *= q;
        den_pow *= q;
        acc *= num_pow - 1;
        mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), ExactInt(den_pow - 1).get_mpz_t());
    }
    return acc;
}

ExactInt gauss_signed(long m, long l, long b) {
    if (m < 0 || l < 0) throw std::invalid_argument("gauss_signed: m and l must be nonnegative");
    if (b > -2) throw std::invalid_argument("gauss_signed: base b must be <= -2");
    if (l > m) return 0;
    ExactInt acc = 1;
    // Descending numerator order: after t factors the prefix equals [m t]_b,
    // an integer, so each division is exact.
    for (long i = 1; i <= l; ++i) {
        acc *= pow_int(b, static_cast<unsigned long>(m - i + 1)) - 1;
        ExactInt den = pow_int(b, static_cast<unsigned long>(i)) - 1;
        mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
    }
    return acc;
}

namespace {

struct Key {
    long n, k, base;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& key) const {
        std::uint64_t h = static_cast<std::uint64_t>(key.n) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(key.k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(key.base + (1 << 20)) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

thread_local std::unordered_map<Key, ExactInt, KeyHash> g_cache;

}  // namespace

const ExactInt& gauss_cached(long n, long k, long q) {
    Key key{n, k, q};
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
    return g_cache.emplace(key, gauss(n, k, q)).first->second;
}

const ExactInt& gauss_signed_cached(long m, long l, long b) {
    Key key{m, l, b};
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
    return g_cache.emplace(key, gauss_signed(m, l, b)).first->second;
}

GaussBoundsVerdict check_gauss_bounds(long n, long k, long q) {
    GaussBoundsVerdict v;
    v.n = n;
    v.k = k;
    v.q = q;
    v.value = gauss(n, k, q);
    v.power = pow_int(q, static_cast<unsigned long>(k * (n - k)));

    v.part[0].applies = true;
    v.part[0].holds = v.value >= v.power;

    v.part[1].applies = (0 < k && k < n);
    if (v.part[1].applies) v.part[1].holds = q * v.value >= (q + 1) * v.power;

    v.part[2].applies = (q >= 3);
    if (v.part[2].applies) v.part[2].holds = v.value < 2 * v.power;

    v.part[3].applies = (k == 0 || k == 1 || k == n - 1 || k == n);
    if (v.part[3].applies) v.part[3].holds = (q - 1) * v.value < q * v.power;

    return v;
}

}  // namespace qeig

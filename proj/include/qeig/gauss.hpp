// Gaussian (q-)binomial coefficients at positive base q >= 2 and at negative
// base b = -q, together with the four coefficient estimates used by the
// envelope bounds. All arithmetic is exact; inequality checks with
// fractional constants are done by cross-multiplication.
#pragma once

#include <optional>
#include <string>

#include "qeig/bigint.hpp"

namespace qeig {

// [n k]_q = prod_{i=1..k} (q^{n-k+i}-1)/(q^i-1); 0 when k > n.
// Every prefix of the product is itself a Gaussian coefficient, so the
// division after each factor is exact.
ExactInt gauss(long n, long k, long q);

// [m l]_b with b = -q <= -2; 0 when l > m; sign is (-1)^{(m+1)l} when nonzero.
ExactInt gauss_signed(long m, long l, long b);

// Cached front-ends. Coefficients recur across thousands of eigenvalue
// evaluations within a sweep; the cache is per-thread, so concurrent
// workers never contend.
const ExactInt& gauss_cached(long n, long k, long q);
const ExactInt& gauss_signed_cached(long m, long l, long b);

// One clause of the coefficient estimate: does the hypothesis apply to
// (n,k,q), and if so does the inequality hold.
struct BoundClause {
    bool applies = false;
    bool holds = false;
};

// Verdict for the four estimates:
//   (i)   [n k]_q >= q^{k(n-k)}                    (0 <= k <= n, q >= 2)
//   (ii)  [n k]_q >= (1+1/q) q^{k(n-k)}            (0 < k < n,  q >= 2)
//   (iii) [n k]_q <  2 q^{k(n-k)}                  (0 <= k <= n, q >= 3)
//   (iv)  [n k]_q <  q/(q-1) q^{k(n-k)}            (k in {0,1,n-1,n}, q >= 2)
struct GaussBoundsVerdict {
    long n = 0, k = 0, q = 0;
    ExactInt value;      // [n k]_q
    ExactInt power;      // q^{k(n-k)}
    BoundClause part[4]; // (i)..(iv)
    bool all_hold() const {
        for (const auto& p : part)
            if (p.applies && !p.holds) return false;
        return true;
    }
};

GaussBoundsVerdict check_gauss_bounds(long n, long k, long q);

}  // namespace qeig

// Term-level decomposition of the eigenvalue sums for the three q-analog
// families, the alternating-series bound, and exact verification of the
// sandwich and envelope estimates. Exponent profiles are the concave
// quadratics g_h, b_h, q_h; their coefficients are half-integers, so they
// are kept as exact rationals (their values at integer h are integers).
#pragma once

#include <vector>

#include "qeig/params.hpp"
#include "qeig/spectra.hpp"
#include "qeig/verdict.hpp"

namespace qeig {

// g(h) = -h^2/2 + b h + c with vertex h_0 = b. The truncation bound h_max
// always sits strictly below the vertex, so the last term dominates.
struct ExponentProfile {
    Family family;
    Rat a, b, c;
    Rat vertex() const { return b; }
    Rat eval(long h) const { return a * Rat(h) * Rat(h) + b * Rat(h) + c; }
};

ExponentProfile exponent_profile(const SchemeParams& params, long i, long j);

struct Term {
    long h;
    ExactInt value;
    Rat exponent;  // profile value at h (an integer for integer h)
};

struct TermDecomposition {
    SchemeParams params;
    long i = 0, j = 0;
    long h_min = 0, h_max = 0;
    std::vector<Term> terms;  // nonzero terms in increasing h

    ExactInt sum() const;
};

// Decompose the eigenvalue sum of a q-analog family (Grassmann uses the
// truncated second expression; Bilinear/Hermitian run h = 0..min{j,d-i}).
// Hamming has no q-power term structure and is rejected.
TermDecomposition decompose(const SchemeParams& params, long i, long j);

// Bound for a finite alternating series with terms strictly increasing in
// absolute value: the sum has the sign of the last term and its absolute
// value lies in [|a_n| - |a_{n-1}|, |a_n|].
struct AlternatingBounds {
    enum class Error { None, Empty, NotAlternating, NotIncreasing };
    Error error = Error::None;
    int sign = 0;
    ExactInt lower, upper;
    long violation_index = -1;  // index where the premise failed

    bool ok() const { return error == Error::None; }
};

AlternatingBounds alternating_bounds(const std::vector<ExactInt>& terms);

// |T_{h-1}| < |T_h| for consecutive terms plus, for Grassmann/Bilinear, the
// sandwich |T_max| - |T_max-1| <= |eigenvalue| <= |T_max|. Exceptional
// parameter sets are tagged EXCLUDED, mirroring the lemma hypotheses:
// Grassmann (n,q) = (2d,2); Bilinear q = 2 with d = e; Hermitian outside
// q >= 2, d >= 6, j >= 2, 1 <= i <= d-3.
Verdict check_term_monotonicity(const SchemeParams& params, long i, long j);

// Envelope bounds on |eigenvalue|, exact rational comparison by
// cross-multiplication:
//   Grassmann, q >= 3:  4/9 q^c < |G| < 4 q^c with c = g_{h_max}, except
//     n = 2d with d-j <= i where 5/32 <= |G|/|T_{d-j}| <= 1 applies;
//   Bilinear, q >= 3:   1/4 q^s < |B| < 2 q^s with s = b_{h_max};
//   Hermitian, q >= 2, d >= 6, j >= 2, 1 <= i <= d-3:
//     j <= d-i-1:  43/78   <= |Q|/|T_max| <= 113/78
//     j  = d-i:    691/1296 <= |Q|/|T_max| <= 1901/1296
//     j >= d-i+1:  31/216  <= |Q|/|T_max| <= 401/216
// Tuples outside a hypothesis are EXCLUDED.
Verdict check_envelope_bounds(const SchemeParams& params, long i, long j);

// (1 - q^{-m}) q^m <= |(-q)^m - 1| <= (1 + q^{-m}) q^m, i.e.
// q^m - 1 <= |b^m - 1| <= q^m + 1, checked exactly.
Verdict check_base_power_estimate(long q, long m);

}  // namespace qeig

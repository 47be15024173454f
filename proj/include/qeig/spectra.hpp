// Closed-form eigenvalues of the four schemes and full eigenmatrix assembly.
//
// Sign convention for the Hermitian family: Q_j(i) is evaluated exactly as
// the defining sum
//
//   Q_j(i) = (-1)^j sum_{h=0}^{min(j,d-i)} (-q)^{C(j-h,2)+hd} [d-h d-j]_b [d-i h]_b,
//
// with base b = -q Gaussian coefficients. This convention is the one the
// brute-force oracle confirms: at (d,q) = (2,2) the 16-vertex rank-1 graph
// has spectrum {5, 1, -3} and the sum yields Q_1(1) = -3, Q_1(2) = 1. The
// compact closed form sometimes quoted for Q_1 evaluates to the opposite
// sign; the defining sum is authoritative here, and sign(Q_1(i)) = (-1)^i
// for 1 <= i <= d.
#pragma once

#include <vector>

#include "qeig/params.hpp"

namespace qeig {

enum class GrassmannForm { Eq1, Eq2 };

// Truncation window of the Grassmann second expression: outside
// [h_min, h_max] every term carries a vanishing Gaussian factor.
inline long grassmann_h_min(long i, long j) { return i > j ? i - j : 0; }
inline long grassmann_h_max(long i, long j, long d) { return i < d - j ? i : d - j; }
// Bilinear and Hermitian sums truncate at min{j, d-i} (h_min = 0).
inline long rank_family_h_max(long i, long j, long d) { return j < d - i ? j : d - i; }

// Single terms of the truncated sums (the T_h of the term-level analysis).
ExactInt grassmann_term(long n, long d, long q, long i, long j, long h);
ExactInt bilinear_term(long d, long e, long q, long i, long j, long h);
ExactInt hermitian_term(long d, long q, long i, long j, long h);

// Eigenvalue P_{ij} of the distance-j graph on the i-th eigenspace.
// Both Grassmann forms return equal values; Eq2 (with its truncation) is
// the default, Eq1 is retained as a cross-check path.
ExactInt grassmann_eigenvalue(long n, long d, long q, long j, long i,
                              GrassmannForm form = GrassmannForm::Eq2);
ExactInt bilinear_eigenvalue(long d, long e, long q, long j, long i);
ExactInt hermitian_eigenvalue(long d, long q, long j, long i);
ExactInt hamming_eigenvalue(long d, long q, long j, long i);

// Dispatch on the family of `params`.
ExactInt eigenvalue(const SchemeParams& params, long j, long i);

// (d+1) x (d+1) table with entry(i,j) = P_ij. Column j = 0 is all ones and
// the row i = 0 holds the valencies, which sum to the vertex count.
struct Eigenmatrix {
    SchemeParams params;
    std::vector<std::vector<ExactInt>> entries;

    long size() const { return static_cast<long>(entries.size()); }
    const ExactInt& at(long i, long j) const { return entries[i][j]; }
};

Eigenmatrix eigenmatrix(const SchemeParams& params);

}  // namespace qeig

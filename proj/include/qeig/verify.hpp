// Parameter-grid verification of the monotonicity theorems, smallest-
// eigenvalue results, sign laws and open-conjecture scans, plus the
// lemma-level bound suites. Each check enumerates a finite grid in a
// canonical deterministic order and emits a VerdictReport; FAIL rows carry
// the complete eigenvalue row so any failure reproduces from the report
// with a single eigenmatrix invocation.
#pragma once

#include <optional>

#include "qeig/sweep.hpp"

namespace qeig {

// Default grids keep an exact-arithmetic run in the seconds-to-minutes
// range; larger grids are reachable through the CLI flags.
struct GrassmannGrid {
    long q_min = 2, q_max = 5;
    long d_min = 1, d_max = 12;
    long n_span = 8;  // n runs 2d .. 2d + n_span
};

struct ExceptionalGrid {
    long d_min = 2, d_max = 14;  // q = 2, n = 2d throughout
};

struct BilinearGrid {
    long q_min = 2, q_max = 5;
    long d_min = 1, d_max = 12;
    long e_span = 4;  // e runs d .. d + e_span
};

struct HermitianGrid {
    long q_min = 2, q_max = 3;
    long d_min = 2, d_max = 10;
};

// Caps for attaching oracle connectivity to the Hamming scan: beyond them
// connectivity is reported as unknown.
inline constexpr long kDefaultHammingVertexCap = 100000;
inline constexpr long kDefaultConnWorkCap = 100000000;

struct HammingGrid {
    long q_min = 2, q_max = 5;
    long d_min = 1, d_max = 16;
    long vertex_cap = kDefaultHammingVertexCap;
    long conn_work_cap = kDefaultConnWorkCap;  // union-find budget v * k_j
};

// Strict decrease of |G_j(i)| in i for every (q,n,d,j); the (n,q) = (2d,2)
// tuples are EXCLUDED and routed to the exceptional scan.
VerdictReport verify_grassmann_monotone(const GrassmannGrid& grid, const SweepOptions& opt = {});

// The (n,q) = (2d,2) scan: negativity of G_j(d-j) for (d,j) = (5,3) and for
// d >= 6, 2 <= j <= d-2; minimality of G_j(d-j) for d >= 6, 3 <= j <= d-2.
// Claims proved for 7 <= j <= d-5 report PASS/FAIL; the open ranges
// j in {2,...,6, d-4, d-3, d-2} report OBSERVED (flagged if violated).
VerdictReport verify_grassmann_exceptional(const ExceptionalGrid& grid, const SweepOptions& opt = {});

// B_j(d-j+1) is the unique-index minimum, |B_j(i)| strictly decreases, and
// sign B_j(i) = (-1)^{max(0, j+i-d)}; q = 2 with d = e is EXCLUDED.
VerdictReport verify_bilinear_min(const BilinearGrid& grid, const SweepOptions& opt = {});

// Per (q,d,j): the conjectured argmin index (1 for odd j, d-j+2 for even
// j >= 2, ties allowed), |Q_j(i)| < |Q_j(1)| for i >= 2 when d >= 3, and
// |Q_j(i)| > |Q_j(i+1)| with the exception set q = 2, i = d-1, j = d or
// even excluded and |Q_j(d-2)| > |Q_j(d)| checked there instead.
VerdictReport verify_hermitian_suite(const HermitianGrid& grid, const SweepOptions& opt = {});

// Open-conjecture scan: distinct values among {K_j(i)}, with connectivity
// attached from the oracle where the vertex and work caps allow (otherwise
// "unknown"). Tuples with distinct count <= d/2 AND a connected graph are
// flagged prominently; every status is OBSERVED, never FAIL.
VerdictReport scan_hamming_distinct(const HammingGrid& grid, const SweepOptions& opt = {});

// Eq. form agreement: both Grassmann expressions agree on every (i,j).
VerdictReport cross_check_forms(const GrassmannGrid& grid, const SweepOptions& opt = {});

// Lemma-level suites, keyed by id:
//   gauss-bounds        coefficient estimates (four clauses)
//   alternating-series  randomized alternating-sum property
//   grassmann-sandwich  term monotonicity + sandwich, Grassmann
//   grassmann-envelope  4/9 q^c .. 4 q^c envelope (5/32 clause at n = 2d)
//   bilinear-sandwich   term monotonicity + sandwich + sign, Bilinear
//   bilinear-envelope   1/4 q^s .. 2 q^s envelope
//   hermitian-terms     term monotonicity on the Hermitian hypothesis box
//   hermitian-envelope  43/78, 691/1296, 31/216 clause envelopes
//   hermitian-signs     last-term sign (-1)^{ij+C(j-h_max,2)} and the
//                       opposite-sign pattern at h_max = d-i
//   base-estimate       q^m - 1 <= |(-q)^m - 1| <= q^m + 1
//   exponent-profile    consecutive-exponent gap and q^{g_h} <= |T_h| < 8 q^{g_h}
//   grassmann-q2-ratios k |T_h| <= |G| <= |T_h| and |T_h| >= l |T_h'| at q = 2
//   bilinear-q2-ratios  the analogous q = 2 case bounds with e >= d+1
struct LemmaGridOverrides {
    std::optional<long> q_min, q_max, d_max, n_span, e_span, m_max;
    std::optional<long> count;  // alternating-series sample count
    std::optional<unsigned long> seed;
};

VerdictReport lemma_check(const std::string& lemma_id, const LemmaGridOverrides& over = {},
                          const SweepOptions& opt = {});
const std::vector<std::string>& lemma_ids();

}  // namespace qeig

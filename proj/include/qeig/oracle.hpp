// Validation of the closed-form eigenmatrices against schemes constructed
// explicitly: intersection numbers counted from base vertices, the left
// eigenvector check row_i(P) . L_j = P_ij . row_i(P), rank-based eigenvalue
// multiplicities, and distance-graph connectivity.
#pragma once

#include <vector>

#include "qeig/scheme.hpp"
#include "qeig/spectra.hpp"
#include "qeig/verdict.hpp"

namespace qeig {

struct InconsistentCounts : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResidualSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// L[j] is the (d+1) x (d+1) intersection matrix with L[j][k][m] = p^k_{jm};
// its eigenvalue multiset is the j-th eigenmatrix column. L[0] is the
// identity and every row of L[j] sums to the valency k_j.
struct IntersectionMatrixSet {
    long d = 0;
    std::vector<std::vector<std::vector<long>>> L;
    std::vector<long> valencies;  // k_j, from the base-vertex class sizes
};

// Counts p^k_{ij} from a fixed base vertex and verifies the counts are
// identical from `samples` further random base pairs (schemes are
// homogeneous); throws InconsistentCounts on any mismatch, which signals a
// relation bug.
IntersectionMatrixSet intersection_matrices(const SchemeInstance& scheme, int samples = 3);

// PASS iff every row of P is a common left eigenvector of all intersection
// matrices, with eigenvalues P_ij, and the multiplicities
// m_i = v / sum_j P_ij^2 / k_j are positive integers summing to v.
// On failure the witness reports the first violated (i, j) with both sides.
Verdict validate_eigenmatrix(const Eigenmatrix& P, const IntersectionMatrixSet& L);

// Eigenvalue multiset of the distance-j adjacency matrix. For each distinct
// candidate value in column j of the formula eigenmatrix the multiplicity
// is v - rank(A_j - lambda I), a rank over the rationals: computed by
// modular elimination and certified exact by the annihilation identity
// prod_lambda (A_j - lambda I) = 0 in integer arithmetic (which forces the
// rational nullities to sum to v; the modular nullities can only
// overestimate, so equality pins them). Throws ResidualSpectrum when the
// candidate set cannot account for all of Q^v.
struct SpectrumEntry {
    ExactInt value;
    long multiplicity;
};
std::vector<SpectrumEntry> spectrum_multiset(const SchemeInstance& scheme, long j,
                                             const Eigenmatrix& P,
                                             long cap = kDefaultSpectrumCap);

// Union-find over the distance-j edges.
struct Connectivity {
    bool connected = false;
    long component_count = 0;
};
Connectivity connectivity(const SchemeInstance& scheme, long j);

}  // namespace qeig

// Brute-force construction of scheme instances at small parameters:
// canonical vertex enumeration plus the pairwise relation.
//   Grassmann: reduced-row-echelon d x n matrices over F_q; two subspaces
//     are j-related when dim(U cap W) = d - j, i.e. rank([U;W]) = d + j.
//   Bilinear: all d x e matrices over F_q; relation = rank of difference.
//   Hermitian: d x d matrices over F_{q^2} with A[l][k] = conj(A[k][l])
//     (diagonal in the fixed subfield); relation = rank of difference.
//   Hamming: words in {0..q-1}^d; relation = Hamming distance.
#pragma once

#include <functional>
#include <vector>

#include "qeig/field.hpp"
#include "qeig/params.hpp"

namespace qeig {

struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string& what, const ExactInt& count, long cap)
        : std::runtime_error(what + ": vertex count " + count.get_str() + " exceeds cap " +
                             std::to_string(cap)) {}
};

// Default vertex cap for building a scheme; overridable via the
// QEIG_ORACLE_CAP environment variable and per-call arguments.
long oracle_vertex_cap();
constexpr long kDefaultOracleCap = 100000;
// Default cap for dense spectrum work.
constexpr long kDefaultSpectrumCap = 5000;

class SchemeInstance {
  public:
    const SchemeParams& params() const { return params_; }
    long vertex_count() const { return vcount_; }
    long classes() const { return params_.d; }  // relation indices run 0..d

    // Class index in 0..d of the (unordered) vertex pair.
    int relation(long u, long v) const;

    // Entries of vertex u (matrix row-major, or word), for debugging output.
    std::vector<Field::elem> vertex(long u) const;

    static SchemeInstance build(const SchemeParams& params, long cap = oracle_vertex_cap());

    // Fixture-scale disk cache. Format (binary, little-endian sizes):
    //   line 1: "qeig-scheme/1"
    //   line 2: one JSON object {family, n, d, e, q, v, vlen}
    //   v*vlen raw vertex bytes, then v*v relation-table bytes.
    // Saving is limited to v <= kSchemeCacheCap since the relation table is
    // materialized densely.
    void save(const std::string& path) const;
    static SchemeInstance load(const std::string& path);

  private:
    SchemeParams params_;
    const Field* field_ = nullptr;  // null for Hamming
    long vcount_ = 0;
    int vlen_ = 0;        // entries per vertex
    int rel_rows_ = 0;    // scratch matrix shape for rank-based relations
    int rel_cols_ = 0;
    std::vector<Field::elem> data_;
    std::vector<std::uint8_t> rel_table_;  // populated for loaded instances
};

constexpr long kSchemeCacheCap = 4096;

}  // namespace qeig

// Explicit small finite fields with table-driven arithmetic, for the
// brute-force scheme constructions. Supports F_q for q in {2,3,4,5,9,25}:
// prime fields plus the quadratic extensions F_4 = F_2[t]/(t^2+t+1),
// F_9 = F_3[t]/(t^2+1) and F_25 = F_5[t]/(t^2+3). On a quadratic extension
// the conjugation x -> x^p is an involutory automorphism fixing exactly the
// prime subfield.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qeig {

struct UnsupportedField : std::runtime_error {
    explicit UnsupportedField(long q)
        : std::runtime_error("unsupported field order " + std::to_string(q) +
                             " (supported: 2, 3, 4, 5, 9, 25)") {}
};

class Field {
  public:
    using elem = std::uint8_t;

    // Shared immutable instance for a supported order; throws UnsupportedField.
    static const Field& get(long q);

    long order() const { return q_; }
    long characteristic() const { return p_; }
    long degree() const { return deg_; }

    elem add(elem a, elem b) const { return add_[idx(a, b)]; }
    elem sub(elem a, elem b) const { return add_[idx(a, neg_[b])]; }
    elem mul(elem a, elem b) const { return mul_[idx(a, b)]; }
    elem neg(elem a) const { return neg_[a]; }
    elem inv(elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[a];
    }
    // x -> x^p (identity on prime fields).
    elem conj(elem a) const { return conj_[a]; }
    bool fixed_by_conj(elem a) const { return conj_[a] == a; }

    // Elements of the subfield fixed by conjugation, ascending.
    const std::vector<elem>& fixed_elements() const { return fixed_; }

  private:
    Field(long p, long deg, long c0, long c1);
    std::size_t idx(elem a, elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

    long p_, deg_, q_;
    std::vector<elem> add_, mul_, neg_, inv_, conj_;
    std::vector<elem> fixed_;
};

// Rank of a rows x cols matrix over the field, row-major storage. The
// matrix is consumed (eliminated in place).
int field_rank(const Field& f, std::vector<Field::elem>& m, int rows, int cols);

}  // namespace qeig

// Scheme families and their integer parameters.
#pragma once

#include <stdexcept>
#include <string>

#include "qeig/bigint.hpp"

namespace qeig {

enum class Family { Grassmann, Bilinear, Hermitian, Hamming };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws std::invalid_argument

// Tagged parameter set. Field usage by family:
//   Grassmann  G_q(n,d):  n, d, q  with n >= 2d >= 2
//   Bilinear   H_q(d,e):  d, e, q  with 1 <= d <= e
//   Hermitian  Q_q(d):    d, q     with d >= 1
//   Hamming    H(d,q):    d, q     with d >= 1
// q >= 2 always. The closed-form engines accept any integer q (prime power
// or not); only the brute-force oracle is limited by field constructibility.
struct SchemeParams {
    Family family = Family::Hamming;
    long n = 0;
    long d = 0;
    long e = 0;
    long q = 0;

    static SchemeParams grassmann(long n, long d, long q) { return {Family::Grassmann, n, d, 0, q}; }
    static SchemeParams bilinear(long d, long e, long q) { return {Family::Bilinear, 0, d, e, q}; }
    static SchemeParams hermitian(long d, long q) { return {Family::Hermitian, 0, d, 0, q}; }
    static SchemeParams hamming(long d, long q) { return {Family::Hamming, 0, d, 0, q}; }

    // Throws std::invalid_argument naming the offending parameter and its
    // valid domain. A domain violation is always a usage error, never a
    // silent wrong value.
    void validate() const;

    // Number of vertices of the scheme: [n d]_q, q^{de}, q^{d^2}, q^d.
    ExactInt vertex_count() const;

    std::string describe() const;  // e.g. "grassmann(n=4,d=2,q=2)"
};

}  // namespace qeig

#include "qeig/spectra.hpp"

#include "qeig/gauss.hpp"

namespace qeig {

namespace {

void check_indices(const SchemeParams& p, long j, long i) {
    p.validate();
    if (i < 0 || i > p.d)
        throw std::invalid_argument("i = " + std::to_string(i) + " out of domain: require 0 <= i <= d");
    if (j < 0 || j > p.d)
        throw std::invalid_argument("j = " + std::to_string(j) + " out of domain: require 0 <= j <= d");
}

}  // namespace

ExactInt grassmann_term(long n, long d, long q, long i, long j, long h) {
    ExactInt t = pow_int(q, static_cast<unsigned long>(j * (j - i + h) + binom2(i - h)));
    t *= gauss_cached(i, h, q);
    t *= gauss_cached(d - h, j, q);
    t *= gauss_cached(n - d - i + h, n - d - j, q);
    if ((i - h) & 1) t = -t;
    return t;
}

ExactInt bilinear_term(long d, long e, long q, long i, long j, long h) {
    ExactInt t = pow_int(q, static_cast<unsigned long>(e * h + binom2(j - h)));
    t *= gauss_cached(d - h, d - j, q);
    t *= gauss_cached(d - i, h, q);
    if ((j - h) & 1) t = -t;
    return t;
}

ExactInt hermitian_term(long d, long q, long i, long j, long h) {
    const long b = -q;
    ExactInt t = pow_int(b, static_cast<unsigned long>(binom2(j - h) + h * d));
    t *= gauss_signed_cached(d - h, d - j, b);
    t *= gauss_signed_cached(d - i, h, b);
    if (j & 1) t = -t;
    return t;
}

ExactInt grassmann_eigenvalue(long n, long d, long q, long j, long i, GrassmannForm form) {
    check_indices(SchemeParams::grassmann(n, d, q), j, i);
    ExactInt sum = 0;
    if (form == GrassmannForm::Eq1) {
        for (long h = 0; h <= j; ++h) {
            if (h > d - i) continue;  // vanishing [d-i h] factor
            ExactInt t = pow_int(q, static_cast<unsigned long>(h * i + binom2(j - h)));
            t *= gauss_cached(d - i, h, q);
            t *= gauss_cached(d - h, j - h, q);
            t *= gauss_cached(n - d - i + h, h, q);
            if ((j - h) & 1) t = -t;
            sum += t;
        }
    } else {
        for (long h = grassmann_h_min(i, j); h <= grassmann_h_max(i, j, d); ++h)
            sum += grassmann_term(n, d, q, i, j, h);
    }
    return sum;
}

ExactInt bilinear_eigenvalue(long d, long e, long q, long j, long i) {
    check_indices(SchemeParams::bilinear(d, e, q), j, i);
    ExactInt sum = 0;
    for (long h = 0; h <= rank_family_h_max(i, j, d); ++h) sum += bilinear_term(d, e, q, i, j, h);
    return sum;
}

ExactInt hermitian_eigenvalue(long d, long q, long j, long i) {
    check_indices(SchemeParams::hermitian(d, q), j, i);
    ExactInt sum = 0;
    for (long h = 0; h <= rank_family_h_max(i, j, d); ++h) sum += hermitian_term(d, q, i, j, h);
    return sum;
}

ExactInt hamming_eigenvalue(long d, long q, long j, long i) {
    check_indices(SchemeParams::hamming(d, q), j, i);
    ExactInt sum = 0;
    long h_lo = j - (d - i) > 0 ? j - (d - i) : 0;
    long h_hi = i < j ? i : j;
    for (long h = h_lo; h <= h_hi; ++h) {
        ExactInt t = pow_int(q - 1, static_cast<unsigned long>(j - h));
        t *= binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(h));
        t *= binomial(static_cast<unsigned long>(d - i), static_cast<unsigned long>(j - h));
        if (h & 1) t = -t;
        sum += t;
    }
    return sum;
}

ExactInt eigenvalue(const SchemeParams& p, long j, long i) {
    switch (p.family) {
        case Family::Grassmann: return grassmann_eigenvalue(p.n, p.d, p.q, j, i);
        case Family::Bilinear: return bilinear_eigenvalue(p.d, p.e, p.q, j, i);
        case Family::Hermitian: return hermitian_eigenvalue(p.d, p.q, j, i);
        case Family::Hamming: return hamming_eigenvalue(p.d, p.q, j, i);
    }
    return 0;
}

Eigenmatrix eigenmatrix(const SchemeParams& params) {
    params.validate();
    Eigenmatrix m;
    m.params = params;
    m.entries.assign(params.d + 1, std::vector<ExactInt>(params.d + 1));
    for (long i = 0; i <= params.d; ++i)
        for (long j = 0; j <= params.d; ++j) m.entries[i][j] = eigenvalue(params, j, i);
    return m;
}

}  // namespace qeig

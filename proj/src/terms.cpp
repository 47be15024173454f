#include "qeig/terms.hpp"

#include "qeig/gauss.hpp"

namespace qeig {

using nlohmann::json;

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Excluded: return "EXCLUDED";
        case Status::Observed: return "OBSERVED";
    }
    return "?";
}

Status status_from_name(const std::string& name) {
    if (name == "PASS") return Status::Pass;
    if (name == "FAIL") return Status::Fail;
    if (name == "EXCLUDED") return Status::Excluded;
    if (name == "OBSERVED") return Status::Observed;
    throw std::invalid_argument("unknown status '" + name + "'");
}

ExponentProfile exponent_profile(const SchemeParams& p, long i, long j) {
    p.validate();
    ExponentProfile prof;
    prof.family = p.family;
    prof.a = Rat(-1, 2);
    // The linear coefficient is an odd half-integer (already in lowest
    // terms); the constant term is a plain integer.
    switch (p.family) {
        case Family::Grassmann:
            prof.b = Rat(2 * (p.n - p.d - j) + 1, 2);
            prof.c = Rat(j * (p.d - j) + (p.n - p.d) * (j - i) + i * (i - 1) / 2);
            break;
        case Family::Bilinear:
            prof.b = Rat(2 * (p.e - i) + 1, 2);
            prof.c = Rat(j * p.d - j * (j + 1) / 2);
            break;
        case Family::Hermitian:
            prof.b = Rat(2 * (p.d - i) + 1, 2);
            prof.c = Rat(j * p.d - j * (j + 1) / 2);
            break;
        case Family::Hamming:
            throw std::invalid_argument("no exponent profile for the Hamming family");
    }
    return prof;
}

ExactInt TermDecomposition::sum() const {
    ExactInt s = 0;
    for (const auto& t : terms) s += t.value;
    return s;
}

TermDecomposition decompose(const SchemeParams& p, long i, long j) {
    p.validate();
    if (i < 0 || i > p.d || j < 0 || j > p.d)
        throw std::invalid_argument("decompose: indices out of domain 0 <= i,j <= d");
    if (p.family == Family::Hamming)
        throw std::invalid_argument("decompose: the Hamming family has no q-power term decomposition");

    TermDecomposition dec;
    dec.params = p;
    dec.i = i;
    dec.j = j;
    if (p.family == Family::Grassmann) {
        dec.h_min = grassmann_h_min(i, j);
        dec.h_max = grassmann_h_max(i, j, p.d);
    } else {
        dec.h_min = 0;
        dec.h_max = rank_family_h_max(i, j, p.d);
    }
    ExponentProfile prof = exponent_profile(p, i, j);
    for (long h = dec.h_min; h <= dec.h_max; ++h) {
        ExactInt value;
        switch (p.family) {
            case Family::Grassmann: value = grassmann_term(p.n, p.d, p.q, i, j, h); break;
            case Family::Bilinear: value = bilinear_term(p.d, p.e, p.q, i, j, h); break;
            default: value = hermitian_term(p.d, p.q, i, j, h); break;
        }
        if (value == 0) continue;  // vanishing Gaussian factor
        dec.terms.push_back(Term{h, value, prof.eval(h)});
    }
    return dec;
}

AlternatingBounds alternating_bounds(const std::vector<ExactInt>& terms) {
    AlternatingBounds r;
    if (terms.empty()) {
        r.error = AlternatingBounds::Error::Empty;
        return r;
    }
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (sign_of(terms[k]) == 0 ||
            (k > 0 && sign_of(terms[k]) == sign_of(terms[k - 1]))) {
            r.error = AlternatingBounds::Error::NotAlternating;
            r.violation_index = static_cast<long>(k);
            return r;
        }
        if (k > 0 && !(abs_int(terms[k]) > abs_int(terms[k - 1]))) {
            r.error = AlternatingBounds::Error::NotIncreasing;
            r.violation_index = static_cast<long>(k);
            return r;
        }
    }
    const ExactInt& last = terms.back();
    r.sign = sign_of(last);
    r.upper = abs_int(last);
    r.lower = terms.size() > 1 ? ExactInt(r.upper - abs_int(terms[terms.size() - 2])) : r.upper;
    return r;
}

namespace {

json terms_witness(const TermDecomposition& dec) {
    json terms = json::array();
    for (const auto& t : dec.terms)
        terms.push_back({{"h", t.h}, {"value", to_string(t.value)}});
    return {{"params", dec.params.describe()},
            {"i", dec.i},
            {"j", dec.j},
            {"h_min", dec.h_min},
            {"h_max", dec.h_max},
            {"terms", terms}};
}

// q^{2r} for a rational r with denominator dividing 2; comparisons against
// q^r are done with both sides squared to clear the halves.
ExactInt pow_q_twice(long q, const Rat& r) {
    Rat two_r = r * 2;
    two_r.canonicalize();
    if (two_r.get_den() != 1 || two_r < 0)
        throw std::logic_error("exponent is not a nonnegative half-integer");
    return pow_int(q, two_r.get_num().get_ui());
}

}  // namespace

Verdict check_term_monotonicity(const SchemeParams& p, long i, long j) {
    TermDecomposition dec = decompose(p, i, j);
    Verdict v;
    v.witness = terms_witness(dec);

    switch (p.family) {
        case Family::Grassmann:
            if (p.n == 2 * p.d && p.q == 2) {
                v.status = Status::Excluded;
                v.note = "(n,q) = (2d,2)";
                return v;
            }
            break;
        case Family::Bilinear:
            if (p.q == 2 && p.d == p.e) {
                v.status = Status::Excluded;
                v.note = "q = 2 with d = e";
                return v;
            }
            break;
        case Family::Hermitian:
            if (!(p.d >= 6 && j >= 2 && 1 <= i && i <= p.d - 3)) {
                v.status = Status::Excluded;
                v.note = "outside hypothesis d >= 6, j >= 2, 1 <= i <= d-3";
                return v;
            }
            break;
        default:
            break;
    }

    for (std::size_t k = 1; k < dec.terms.size(); ++k) {
        if (!(abs_int(dec.terms[k].value) > abs_int(dec.terms[k - 1].value))) {
            v.status = Status::Fail;
            v.note = "|T_h| not strictly increasing at h = " + std::to_string(dec.terms[k].h);
            return v;
        }
    }

    if (p.family != Family::Hermitian) {
        ExactInt eig = abs_int(dec.sum());
        ExactInt upper = abs_int(dec.terms.back().value);
        ExactInt lower =
            dec.terms.size() > 1 ? ExactInt(upper - abs_int(dec.terms[dec.terms.size() - 2].value)) : upper;
        v.witness["eigenvalue_abs"] = to_string(eig);
        v.witness["sandwich"] = {to_string(lower), to_string(upper)};
        if (!(lower <= eig && eig <= upper)) {
            v.status = Status::Fail;
            v.note = "sandwich violated";
            return v;
        }
    }

    v.status = Status::Pass;
    return v;
}

Verdict check_envelope_bounds(const SchemeParams& p, long i, long j) {
    TermDecomposition dec = decompose(p, i, j);
    Verdict v;
    v.witness = terms_witness(dec);

    auto ratio_clause = [&](const char* clause, long lo_num, long lo_den, long hi_num, long hi_den) {
        // lo_num/lo_den * |T_max| <= |eig| <= hi_num/hi_den * |T_max|
        ExactInt eig = abs_int(dec.sum());
        ExactInt tmax = abs_int(dec.terms.back().value);
        v.clause = clause;
        v.witness["eigenvalue_abs"] = to_string(eig);
        v.witness["t_max_abs"] = to_string(tmax);
        bool lo = lo_den * eig >= lo_num * tmax;
        bool hi = hi_den * eig <= hi_num * tmax;
        v.status = (lo && hi) ? Status::Pass : Status::Fail;
        if (!lo) v.note = "lower envelope violated";
        if (!hi) v.note = "upper envelope violated";
    };

    switch (p.family) {
        case Family::Grassmann: {
            if (p.q < 3 || j < 1) {
                v.status = Status::Excluded;
                v.note = "hypothesis requires q >= 3 and 1 <= j <= d";
                return v;
            }
            if (p.n == 2 * p.d && p.d - j <= i) {
                ratio_clause("n = 2d, d-j <= i: 5/32 <= |G|/|T_{d-j}| <= 1", 5, 32, 1, 1);
                return v;
            }
            // 4/9 q^c < |G| < 4 q^c with c = g_{h_max}, compared with both
            // sides squared to clear half-exponents.
            Rat c = exponent_profile(p, i, j).eval(grassmann_h_max(i, j, p.d));
            ExactInt q2c = pow_q_twice(p.q, c);
            ExactInt eig = abs_int(dec.sum());
            v.clause = "4/9 q^c < |G| < 4 q^c";
            v.witness["eigenvalue_abs"] = to_string(eig);
            v.witness["q_pow_2c"] = to_string(q2c);
            bool lo = 81 * eig * eig > 16 * q2c;
            bool hi = eig * eig < 16 * q2c;
            v.status = (lo && hi) ? Status::Pass : Status::Fail;
            if (!lo) v.note = "lower envelope violated";
            if (!hi) v.note = "upper envelope violated";
            return v;
        }
        case Family::Bilinear: {
            if (p.q < 3 || j < 1) {
                v.status = Status::Excluded;
                v.note = "hypothesis requires q >= 3 and 1 <= j <= d";
                return v;
            }
            Rat s = exponent_profile(p, i, j).eval(rank_family_h_max(i, j, p.d));
            ExactInt q2s = pow_q_twice(p.q, s);
            ExactInt eig = abs_int(dec.sum());
            v.clause = "1/4 q^s < |B| < 2 q^s";
            v.witness["eigenvalue_abs"] = to_string(eig);
            v.witness["q_pow_2s"] = to_string(q2s);
            bool lo = 16 * eig * eig > q2s;
            bool hi = eig * eig < 4 * q2s;
            v.status = (lo && hi) ? Status::Pass : Status::Fail;
            if (!lo) v.note = "lower envelope violated";
            if (!hi) v.note = "upper envelope violated";
            return v;
        }
        case Family::Hermitian: {
            if (!(p.d >= 6 && j >= 2 && 1 <= i && i <= p.d - 3)) {
                v.status = Status::Excluded;
                v.note = "outside hypothesis d >= 6, j >= 2, 1 <= i <= d-3";
                return v;
            }
            if (j <= p.d - i - 1)
                ratio_clause("j <= d-i-1: 43/78 <= |Q|/|T_max| <= 113/78", 43, 78, 113, 78);
            else if (j == p.d - i)
                ratio_clause("j = d-i: 691/1296 <= |Q|/|T_max| <= 1901/1296", 691, 1296, 1901, 1296);
            else
                ratio_clause("j >= d-i+1: 31/216 <= |Q|/|T_max| <= 401/216", 31, 216, 401, 216);
            return v;
        }
        default:
            throw std::invalid_argument("no envelope bounds for the Hamming family");
    }
}

Verdict check_base_power_estimate(long q, long m) {
    Verdict v;
    if (q < 2 || m < 1) {
        v.status = Status::Excluded;
        v.note = "requires q >= 2 and m >= 1";
        return v;
    }
    ExactInt qm = pow_int(q, static_cast<unsigned long>(m));
    ExactInt bm1 = abs_int(pow_int(-q, static_cast<unsigned long>(m)) - 1);
    v.witness = {{"q", q}, {"m", m}, {"abs_b_m_minus_1", to_string(bm1)}, {"q_m", to_string(qm)}};
    v.status = (qm - 1 <= bm1 && bm1 <= qm + 1) ? Status::Pass : Status::Fail;
    return v;
}

}  // namespace qeig

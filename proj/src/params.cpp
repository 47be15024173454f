#include "qeig/params.hpp"

#include <sstream>

#include "qeig/gauss.hpp"

namespace qeig {

const char* family_name(Family f) {
    switch (f) {
        case Family::Grassmann: return "grassmann";
        case Family::Bilinear: return "bilinear";
        case Family::Hermitian: return "hermitian";
        case Family::Hamming: return "hamming";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "grassmann") return Family::Grassmann;
    if (name == "bilinear") return Family::Bilinear;
    if (name == "hermitian") return Family::Hermitian;
    if (name == "hamming") return Family::Hamming;
    throw std::invalid_argument("unknown family '" + name +
                                "' (valid: grassmann, bilinear, hermitian, hamming)");
}

void SchemeParams::validate() const {
    if (q < 2) throw std::invalid_argument("q = " + std::to_string(q) + " out of domain: require q >= 2");
    if (d < 1) throw std::invalid_argument("d = " + std::to_string(d) + " out of domain: require d >= 1");
    switch (family) {
        case Family::Grassmann:
            if (n < 2 * d)
                throw std::invalid_argument("n = " + std::to_string(n) +
                                            " out of domain: require n >= 2d = " + std::to_string(2 * d));
            break;
        case Family::Bilinear:
            if (e < d)
                throw std::invalid_argument("e = " + std::to_string(e) +
                                            " out of domain: require e >= d = " + std::to_string(d));
            break;
        case Family::Hermitian:
        case Family::Hamming:
            break;
    }
}

ExactInt SchemeParams::vertex_count() const {
    switch (family) {
        case Family::Grassmann: return gauss(n, d, q);
        case Family::Bilinear: return pow_int(q, static_cast<unsigned long>(d * e));
        case Family::Hermitian: return pow_int(q, static_cast<unsigned long>(d * d));
        case Family::Hamming: return pow_int(q, static_cast<unsigned long>(d));
    }
    return 0;
}

std::string SchemeParams::describe() const {
    std::ostringstream os;
    os << family_name(family) << '(';
    switch (family) {
        case Family::Grassmann: os << "n=" << n << ",d=" << d << ",q=" << q; break;
        case Family::Bilinear: os << "d=" << d << ",e=" << e << ",q=" << q; break;
        case Family::Hermitian:
        case Family::Hamming: os << "d=" << d << ",q=" << q; break;
    }
    os << ')';
    return os.str();
}

}  // namespace qeig

#include "qeig/field.hpp"

namespace qeig {

Field::Field(long p, long deg, long c0, long c1) : p_(p), deg_(deg), q_(deg == 1 ? p : p * p) {
    // Elements of F_{p^2} are a + b t with t^2 = -c0 - c1 t, encoded a + p b.
    auto lo = [&](elem x) { return static_cast<long>(x) % p_; };
    auto hi = [&](elem x) { return static_cast<long>(x) / p_; };
    auto enc = [&](long a, long b) {
        return static_cast<elem>(((a % p_ + p_) % p_) + p_ * ((b % p_ + p_) % p_));
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    conj_.resize(q_);

    for (long x = 0; x < q_; ++x) {
        neg_[x] = enc(-lo(x), -hi(x));
        for (long y = 0; y < q_; ++y) {
            add_[x * q_ + y] = enc(lo(x) + lo(y), hi(x) + hi(y));
            long a = lo(x), b = hi(x), c = lo(y), d = hi(y);
            // (a + bt)(c + dt) = ac + bd t^2 + (ad + bc) t
            mul_[x * q_ + y] = enc(a * c - b * d * c0, a * d + b * c - b * d * c1);
        }
    }
    for (long x = 1; x < q_; ++x)
        for (long y = 1; y < q_; ++y)
            if (mul_[x * q_ + y] == 1) {
                inv_[x] = static_cast<elem>(y);
                break;
            }
    for (long x = 0; x < q_; ++x) {
        elem r = static_cast<elem>(x);
        for (long t = 1; t < p_; ++t) r = mul_[r * q_ + x];  // x^p
        conj_[x] = r;
        if (conj_[x] == x) fixed_.push_back(static_cast<elem>(x));
    }
}

const Field& Field::get(long q) {
    static const Field f2(2, 1, 0, 0);
    static const Field f3(3, 1, 0, 0);
    static const Field f4(2, 2, 1, 1);   // t^2 + t + 1
    static const Field f5(5, 1, 0, 0);
    static const Field f9(3, 2, 1, 0);   // t^2 + 1
    static const Field f25(5, 2, 3, 0);  // t^2 + 3
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        case 5: return f5;
        case 9: return f9;
        case 25: return f25;
        default: throw UnsupportedField(q);
    }
}

int field_rank(const Field& f, std::vector<Field::elem>& m, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int rr = r; rr < rows; ++rr)
            if (m[rr * cols + c] != 0) {
                piv = rr;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int cc = c; cc < cols; ++cc) std::swap(m[r * cols + cc], m[piv * cols + cc]);
        Field::elem iv = f.inv(m[r * cols + c]);
        for (int cc = c; cc < cols; ++cc) m[r * cols + cc] = f.mul(iv, m[r * cols + cc]);
        for (int rr = r + 1; rr < rows; ++rr) {
            Field::elem factor = m[rr * cols + c];
            if (factor == 0) continue;
            for (int cc = c; cc < cols; ++cc)
                m[rr * cols + cc] = f.sub(m[rr * cols + cc], f.mul(factor, m[r * cols + cc]));
        }
        ++r;
    }
    return r;
}

}  // namespace qeig

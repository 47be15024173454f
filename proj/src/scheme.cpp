#include "qeig/scheme.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace qeig {

long oracle_vertex_cap() {
    if (const char* env = std::getenv("QEIG_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultOracleCap;
}

namespace {

// Advance a mixed-radix counter (all digits base `radix`); false on wrap.
bool odometer(std::vector<int>& digits, int radix) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (++digits[t] < radix) return true;
        digits[t] = 0;
    }
    return false;
}

void enumerate_grassmann(const SchemeParams& p, const Field& f, std::vector<Field::elem>& out) {
    const int n = static_cast<int>(p.n), d = static_cast<int>(p.d);
    std::vector<int> pivots(d);
    for (int r = 0; r < d; ++r) pivots[r] = r;
    auto next_combination = [&]() {
        int t = d - 1;
        while (t >= 0 && pivots[t] == n - d + t) --t;
        if (t < 0) return false;
        ++pivots[t];
        for (int s = t + 1; s < d; ++s) pivots[s] = pivots[s - 1] + 1;
        return true;
    };
    std::vector<Field::elem> mat(d * n);
    do {
        std::vector<bool> is_pivot(n, false);
        for (int r = 0; r < d; ++r) is_pivot[pivots[r]] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < d; ++r)
            for (int c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);
        std::vector<int> digits(free_pos.size(), 0);
        do {
            std::fill(mat.begin(), mat.end(), Field::elem{0});
            for (int r = 0; r < d; ++r) mat[r * n + pivots[r]] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                mat[free_pos[t].first * n + free_pos[t].second] = static_cast<Field::elem>(digits[t]);
            out.insert(out.end(), mat.begin(), mat.end());
        } while (odometer(digits, static_cast<int>(f.order())));
    } while (next_combination());
}

void enumerate_bilinear(const SchemeParams& p, const Field& f, std::vector<Field::elem>& out) {
    std::vector<int> digits(p.d * p.e, 0);
    do {
        for (int x : digits) out.push_back(static_cast<Field::elem>(x));
    } while (odometer(digits, static_cast<int>(f.order())));
}

void enumerate_hermitian(const SchemeParams& p, const Field& f, std::vector<Field::elem>& out) {
    const int d = static_cast<int>(p.d);
    const auto& diag_elems = f.fixed_elements();
    std::vector<int> diag(d, 0), upper(d * (d - 1) / 2, 0);
    std::vector<Field::elem> mat(d * d);
    do {
        std::vector<int> up = upper;
        do {
            int t = 0;
            for (int r = 0; r < d; ++r) {
                mat[r * d + r] = diag_elems[diag[r]];
                for (int c = r + 1; c < d; ++c) {
                    Field::elem x = static_cast<Field::elem>(up[t++]);
                    mat[r * d + c] = x;
                    mat[c * d + r] = f.conj(x);
                }
            }
            out.insert(out.end(), mat.begin(), mat.end());
        } while (odometer(up, static_cast<int>(f.order())));
    } while (odometer(diag, static_cast<int>(diag_elems.size())));
}

void enumerate_hamming(const SchemeParams& p, std::vector<Field::elem>& out) {
    std::vector<int> digits(p.d, 0);
    do {
        for (int x : digits) out.push_back(static_cast<Field::elem>(x));
    } while (odometer(digits, static_cast<int>(p.q)));
}

}  // namespace

SchemeInstance SchemeInstance::build(const SchemeParams& params, long cap) {
    params.validate();
    SchemeInstance s;
    s.params_ = params;
    ExactInt count = params.vertex_count();
    if (count > cap) throw CapExceeded(params.describe(), count, cap);
    s.vcount_ = count.get_si();

    switch (params.family) {
        case Family::Grassmann:
            s.field_ = &Field::get(params.q);
            s.vlen_ = static_cast<int>(params.d * params.n);
            s.rel_rows_ = static_cast<int>(2 * params.d);
            s.rel_cols_ = static_cast<int>(params.n);
            s.data_.reserve(static_cast<std::size_t>(s.vcount_) * s.vlen_);
            enumerate_grassmann(params, *s.field_, s.data_);
            break;
        case Family::Bilinear:
            s.field_ = &Field::get(params.q);
            s.vlen_ = static_cast<int>(params.d * params.e);
            s.rel_rows_ = static_cast<int>(params.d);
            s.rel_cols_ = static_cast<int>(params.e);
            s.data_.reserve(static_cast<std::size_t>(s.vcount_) * s.vlen_);
            enumerate_bilinear(params, *s.field_, s.data_);
            break;
        case Family::Hermitian:
            s.field_ = &Field::get(params.q * params.q);
            s.vlen_ = static_cast<int>(params.d * params.d);
            s.rel_rows_ = static_cast<int>(params.d);
            s.rel_cols_ = static_cast<int>(params.d);
            s.data_.reserve(static_cast<std::size_t>(s.vcount_) * s.vlen_);
            enumerate_hermitian(params, *s.field_, s.data_);
            break;
        case Family::Hamming:
            s.vlen_ = static_cast<int>(params.d);
            s.data_.reserve(static_cast<std::size_t>(s.vcount_) * s.vlen_);
            enumerate_hamming(params, s.data_);
            break;
    }
    if (static_cast<long>(s.data_.size()) != s.vcount_ * s.vlen_)
        throw std::logic_error("vertex enumeration size mismatch for " + params.describe());
    return s;
}

int SchemeInstance::relation(long u, long v) const {
    if (!rel_table_.empty()) return rel_table_[static_cast<std::size_t>(u) * vcount_ + v];
    const Field::elem* a = data_.data() + static_cast<std::size_t>(u) * vlen_;
    const Field::elem* b = data_.data() + static_cast<std::size_t>(v) * vlen_;
    if (params_.family == Family::Hamming) {
        int dist = 0;
        for (int t = 0; t < vlen_; ++t) dist += (a[t] != b[t]);
        return dist;
    }
    thread_local std::vector<Field::elem> scratch;
    if (params_.family == Family::Grassmann) {
        scratch.assign(a, a + vlen_);
        scratch.insert(scratch.end(), b, b + vlen_);
        scratch.resize(static_cast<std::size_t>(rel_rows_) * rel_cols_);
        return field_rank(*field_, scratch, rel_rows_, rel_cols_) - static_cast<int>(params_.d);
    }
    scratch.resize(vlen_);
    for (int t = 0; t < vlen_; ++t) scratch[t] = field_->sub(a[t], b[t]);
    return field_rank(*field_, scratch, rel_rows_, rel_cols_);
}

std::vector<Field::elem> SchemeInstance::vertex(long u) const {
    const Field::elem* a = data_.data() + static_cast<std::size_t>(u) * vlen_;
    return std::vector<Field::elem>(a, a + vlen_);
}

namespace {
constexpr const char* kCacheHeader = "qeig-scheme/1";
}

void SchemeInstance::save(const std::string& path) const {
    if (vcount_ > kSchemeCacheCap)
        throw CapExceeded("scheme cache " + params_.describe(), ExactInt(vcount_), kSchemeCacheCap);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open cache file " + path);
    nlohmann::json meta = {{"family", family_name(params_.family)}, {"n", params_.n},
                           {"d", params_.d},                        {"e", params_.e},
                           {"q", params_.q},                        {"v", vcount_},
                           {"vlen", vlen_}};
    out << kCacheHeader << '\n' << meta.dump() << '\n';
    out.write(reinterpret_cast<const char*>(data_.data()), static_cast<std::streamsize>(data_.size()));
    std::vector<std::uint8_t> table(static_cast<std::size_t>(vcount_) * vcount_);
    for (long u = 0; u < vcount_; ++u)
        for (long v = 0; v < vcount_; ++v)
            table[static_cast<std::size_t>(u) * vcount_ + v] =
                static_cast<std::uint8_t>(relation(u, v));
    out.write(reinterpret_cast<const char*>(table.data()), static_cast<std::streamsize>(table.size()));
    if (!out) throw std::runtime_error("failed writing cache file " + path);
}

SchemeInstance SchemeInstance::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open cache file " + path);
    std::string header, meta_line;
    std::getline(in, header);
    if (header != kCacheHeader)
        throw std::runtime_error("unrecognized scheme cache header in " + path + ": '" + header +
                                 "' (expected " + kCacheHeader + ")");
    std::getline(in, meta_line);
    nlohmann::json meta = nlohmann::json::parse(meta_line);

    SchemeInstance s;
    s.params_.family = family_from_name(meta.at("family").get<std::string>());
    s.params_.n = meta.at("n").get<long>();
    s.params_.d = meta.at("d").get<long>();
    s.params_.e = meta.at("e").get<long>();
    s.params_.q = meta.at("q").get<long>();
    s.params_.validate();
    s.vcount_ = meta.at("v").get<long>();
    s.vlen_ = meta.at("vlen").get<int>();
    s.data_.resize(static_cast<std::size_t>(s.vcount_) * s.vlen_);
    s.rel_table_.resize(static_cast<std::size_t>(s.vcount_) * s.vcount_);
    in.read(reinterpret_cast<char*>(s.data_.data()), static_cast<std::streamsize>(s.data_.size()));
    in.read(reinterpret_cast<char*>(s.rel_table_.data()),
            static_cast<std::streamsize>(s.rel_table_.size()));
    if (!in || in.gcount() != static_cast<std::streamsize>(s.rel_table_.size()))
        throw std::runtime_error("truncated scheme cache file " + path);
    return s;
}

}  // namespace qeig

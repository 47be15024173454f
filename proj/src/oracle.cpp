#include "qeig/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qeig {

using nlohmann::json;

namespace {

// One base pair per class: N[j][m] = #{w : rel(u,w) = j and rel(w,v) = m}
// for a fixed pair (u,v) in class k.
std::vector<std::vector<long>> count_from_pair(const SchemeInstance& s, long u, long v) {
    const long d = s.classes();
    std::vector<std::vector<long>> N(d + 1, std::vector<long>(d + 1, 0));
    for (long w = 0; w < s.vertex_count(); ++w) ++N[s.relation(u, w)][s.relation(w, v)];
    return N;
}

long find_mate(const SchemeInstance& s, long u, int k, long start) {
    const long v = s.vertex_count();
    for (long off = 0; off < v; ++off) {
        long w = (start + off) % v;
        if (s.relation(u, w) == k) return w;
    }
    throw InconsistentCounts("no vertex in relation " + std::to_string(k) + " from vertex " +
                             std::to_string(u) + " in " + s.params().describe());
}

}  // namespace

IntersectionMatrixSet intersection_matrices(const SchemeInstance& scheme, int samples) {
    const long d = scheme.classes();
    const long v = scheme.vertex_count();

    std::vector<std::vector<std::vector<long>>> N(d + 1);
    for (int k = 0; k <= d; ++k) N[k] = count_from_pair(scheme, 0, find_mate(scheme, 0, k, 0));

    // Homogeneity: the counts must not depend on the base pair.
    std::mt19937_64 rng(0x5eedu);
    for (int t = 0; t < samples; ++t) {
        long u = static_cast<long>(rng() % static_cast<unsigned long long>(v));
        for (int k = 0; k <= d; ++k) {
            long w = find_mate(scheme, u, k, static_cast<long>(rng() % static_cast<unsigned long long>(v)));
            if (count_from_pair(scheme, u, w) != N[k])
                throw InconsistentCounts("intersection numbers differ between base pairs for class " +
                                         std::to_string(k) + " in " + scheme.params().describe());
        }
    }

    IntersectionMatrixSet set;
    set.d = d;
    set.valencies.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
        long kj = 0;
        for (int m = 0; m <= d; ++m) kj += N[0][j][m];
        set.valencies[j] = kj;
    }
    set.L.assign(d + 1, std::vector<std::vector<long>>(d + 1, std::vector<long>(d + 1, 0)));
    for (int j = 0; j <= d; ++j)
        for (int k = 0; k <= d; ++k)
            for (int m = 0; m <= d; ++m) set.L[j][k][m] = N[k][j][m];

    // Structural sanity: L_0 = I and constant row sums k_j.
    for (int k = 0; k <= d; ++k)
        for (int m = 0; m <= d; ++m)
            if (set.L[0][k][m] != (k == m ? 1 : 0))
                throw InconsistentCounts("L_0 is not the identity in " + scheme.params().describe());
    for (int j = 0; j <= d; ++j)
        for (int k = 0; k <= d; ++k) {
            long sum = std::accumulate(set.L[j][k].begin(), set.L[j][k].end(), 0L);
            if (sum != set.valencies[j])
                throw InconsistentCounts("row sums of L_" + std::to_string(j) +
                                         " do not equal the valency in " + scheme.params().describe());
        }
    return set;
}

Verdict validate_eigenmatrix(const Eigenmatrix& P, const IntersectionMatrixSet& L) {
    Verdict v;
    const long d = L.d;
    if (P.size() != d + 1) throw std::invalid_argument("eigenmatrix and intersection set dimensions differ");

    for (long i = 0; i <= d; ++i) {
        for (long j = 0; j <= d; ++j) {
            for (long m = 0; m <= d; ++m) {
                ExactInt lhs = 0;
                for (long k = 0; k <= d; ++k) lhs += P.at(i, k) * L.L[j][k][m];
                ExactInt rhs = P.at(i, j) * P.at(i, m);
                if (lhs != rhs) {
                    v.status = Status::Fail;
                    v.note = "row " + std::to_string(i) + " is not a left eigenvector of L_" +
                             std::to_string(j);
                    v.witness = {{"i", i},          {"j", j},
                                 {"m", m},          {"lhs", to_string(lhs)},
                                 {"rhs", to_string(rhs)}};
                    return v;
                }
            }
        }
    }

    // Multiplicities m_i = v / sum_j P_ij^2 / k_j must be positive integers
    // summing to v.
    ExactInt vcount = P.params.vertex_count();
    json mults = json::array();
    ExactInt total = 0;
    for (long i = 0; i <= d; ++i) {
        Rat denom = 0;
        for (long j = 0; j <= d; ++j) {
            Rat term(P.at(i, j) * P.at(i, j), ExactInt(L.valencies[j]));
            term.canonicalize();
            denom += term;
        }
        Rat mi = Rat(vcount) / denom;
        mi.canonicalize();
        if (mi.get_den() != 1 || mi <= 0) {
            v.status = Status::Fail;
            v.note = "multiplicity m_" + std::to_string(i) + " is not a positive integer";
            v.witness = {{"i", i}, {"m_i", mi.get_str()}};
            return v;
        }
        mults.push_back(mi.get_num().get_str());
        total += mi.get_num();
    }
    if (total != vcount) {
        v.status = Status::Fail;
        v.note = "multiplicities do not sum to the vertex count";
        v.witness = {{"sum", to_string(total)}, {"v", to_string(vcount)}};
        return v;
    }

    v.status = Status::Pass;
    v.witness = {{"multiplicities", mults}, {"v", to_string(vcount)}};
    return v;
}

namespace {

// Rank of an integer matrix modulo a word-size prime.
long rank_mod_p(std::vector<std::uint64_t> m, long nsize, std::uint64_t p) {
    long r = 0;
    for (long c = 0; c < nsize && r < nsize; ++c) {
        long piv = -1;
        for (long rr = r; rr < nsize; ++rr)
            if (m[rr * nsize + c] % p != 0) {
                piv = rr;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long cc = 0; cc < nsize; ++cc) std::swap(m[r * nsize + cc], m[piv * nsize + cc]);
        // Normalize pivot row to 1.
        std::uint64_t pivval = m[r * nsize + c] % p;
        std::uint64_t inv = 1, base = pivval, e = p - 2;  // Fermat inverse
        while (e) {
            if (e & 1) inv = (__uint128_t(inv) * base) % p;
            base = (__uint128_t(base) * base) % p;
            e >>= 1;
        }
        for (long cc = c; cc < nsize; ++cc)
            m[r * nsize + cc] = (__uint128_t(m[r * nsize + cc] % p) * inv) % p;
        for (long rr = r + 1; rr < nsize; ++rr) {
            std::uint64_t f = m[rr * nsize + c] % p;
            if (!f) continue;
            for (long cc = c; cc < nsize; ++cc) {
                std::uint64_t sub = (__uint128_t(f) * m[r * nsize + cc]) % p;
                m[rr * nsize + cc] = (m[rr * nsize + cc] + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<SpectrumEntry> spectrum_multiset(const SchemeInstance& scheme, long j,
                                             const Eigenmatrix& P, long cap) {
    const long v = scheme.vertex_count();
    const long d = scheme.classes();
    if (j < 0 || j > d) throw std::invalid_argument("spectrum_multiset: j out of range");
    if (v > cap) throw CapExceeded("spectrum_multiset " + scheme.params().describe(), ExactInt(v), cap);

    // Dense 0/1 adjacency of the distance-j graph (the identity for j = 0).
    std::vector<std::int8_t> adj(static_cast<std::size_t>(v) * v, 0);
    for (long a = 0; a < v; ++a) {
        if (j == 0) adj[a * v + a] = 1;
        for (long b = a + 1; b < v; ++b)
            if (scheme.relation(a, b) == j) adj[a * v + b] = adj[b * v + a] = 1;
    }

    std::vector<ExactInt> candidates;
    for (long i = 0; i <= d; ++i) {
        ExactInt lambda = P.at(i, j);
        if (std::find(candidates.begin(), candidates.end(), lambda) == candidates.end())
            candidates.push_back(lambda);
    }

    // Annihilation certificate: prod_lambda (A - lambda I) must vanish.
    // With that, A is diagonalizable with spectrum inside the candidate
    // set, so the rational nullities sum to v exactly. Entries stay within
    // |entry| <= C (vC)^{t-1}; guarded against int128 overflow.
    {
        ExactInt maxc = 0;
        for (const auto& c : candidates) maxc = std::max(maxc, abs_int(c));
        ExactInt bound = (maxc + 1);
        for (std::size_t t = 1; t < candidates.size(); ++t) bound *= v * (maxc + 1);
        if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 120)
            throw CapExceeded("spectrum_multiset annihilation bound for " + scheme.params().describe(),
                              bound, cap);

        std::vector<__int128> M(static_cast<std::size_t>(v) * v, 0);
        long lam0 = candidates[0].get_si();
        for (long a = 0; a < v; ++a)
            for (long b = 0; b < v; ++b) M[a * v + b] = adj[a * v + b] - (a == b ? lam0 : 0);
        std::vector<__int128> next(static_cast<std::size_t>(v) * v, 0);
        for (std::size_t t = 1; t < candidates.size(); ++t) {
            long lam = candidates[t].get_si();
            for (long a = 0; a < v; ++a) {
                for (long b = 0; b < v; ++b) {
                    __int128 acc = 0;
                    const __int128* row = &M[a * v];
                    for (long k = 0; k < v; ++k)
                        if (adj[k * v + b]) acc += row[k];
                    acc -= row[b] * lam;
                    next[a * v + b] = acc;
                }
            }
            M.swap(next);
        }
        for (const __int128& x : M)
            if (x != 0)
                throw ResidualSpectrum("annihilation product nonzero for " + scheme.params().describe() +
                                       ", j = " + std::to_string(j) +
                                       " (candidate eigenvalue set incomplete)");
    }

    static const std::uint64_t primes[] = {2147483647ull, 2147483629ull, 2147483587ull};
    std::vector<long> nullity(candidates.size(), v);
    for (std::uint64_t p : primes) {
        long total = 0;
        for (std::size_t t = 0; t < candidates.size(); ++t) {
            std::vector<std::uint64_t> m(static_cast<std::size_t>(v) * v);
            ExactInt lam_mod = candidates[t] % ExactInt(static_cast<unsigned long>(p));
            if (lam_mod < 0) lam_mod += static_cast<unsigned long>(p);
            std::uint64_t lam = lam_mod.get_ui();
            for (long a = 0; a < v; ++a)
                for (long b = 0; b < v; ++b)
                    m[a * v + b] = (a == b) ? (adj[a * v + b] + p - lam) % p : adj[a * v + b];
            nullity[t] = std::min(nullity[t], v - rank_mod_p(std::move(m), v, p));
            total += nullity[t];
        }
        if (total == v) break;  // modular nullities certified equal to the rational ones
    }
    long total = std::accumulate(nullity.begin(), nullity.end(), 0L);
    if (total != v)
        throw ResidualSpectrum("multiplicities sum to " + std::to_string(total) + " instead of " +
                               std::to_string(v) + " for " + scheme.params().describe() +
                               ", j = " + std::to_string(j));

    std::vector<SpectrumEntry> result;
    for (std::size_t t = 0; t < candidates.size(); ++t)
        result.push_back({candidates[t], nullity[t]});
    std::sort(result.begin(), result.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
    return result;
}

Connectivity connectivity(const SchemeInstance& scheme, long j) {
    const long v = scheme.vertex_count();
    std::vector<std::int32_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](long a, long b) {
        std::int32_t ra = find(static_cast<std::int32_t>(a));
        std::int32_t rb = find(static_cast<std::int32_t>(b));
        if (ra != rb) parent[ra] = rb;
    };

    if (scheme.params().family == Family::Hamming) {
        // Words are enumerated big-endian in base q, so neighbors come from
        // digit arithmetic instead of pairwise distance scans.
        const long d = scheme.params().d, q = scheme.params().q;
        if (j == 0) return {v == 1, v};
        std::vector<long> place(d);
        place[d - 1] = 1;
        for (long t = d - 2; t >= 0; --t) place[t] = place[t + 1] * q;
        std::vector<int> pos(j);
        for (long t = 0; t < j; ++t) pos[t] = static_cast<int>(t);
        auto next_combination = [&]() {
            long t = j - 1;
            while (t >= 0 && pos[t] == d - j + t) --t;
            if (t < 0) return false;
            ++pos[t];
            for (long s = t + 1; s < j; ++s) pos[s] = pos[s - 1] + 1;
            return true;
        };
        if (q == 2) {
            // Binary words: the j-flip neighbor is an XOR with a weight-j mask.
            do {
                long mask = 0;
                for (long t = 0; t < j; ++t) mask += place[pos[t]];
                for (long u = 0; u < v; ++u) unite(u, u ^ mask);
            } while (next_combination());
        } else {
            // Per-position digit tables keep the inner loop to adds.
            std::vector<std::vector<std::int8_t>> dig(d, std::vector<std::int8_t>(v));
            for (long t = 0; t < d; ++t)
                for (long u = 0; u < v; ++u) dig[t][u] = static_cast<std::int8_t>((u / place[t]) % q);
            do {
                std::vector<int> delta(j, 1);
                do {
                    for (long u = 0; u < v; ++u) {
                        long w = u;
                        for (long t = 0; t < j; ++t) {
                            int old_dig = dig[pos[t]][u];
                            int new_dig = old_dig + delta[t];
                            if (new_dig >= q) new_dig -= q;
                            w += (new_dig - old_dig) * place[pos[t]];
                        }
                        unite(u, w);
                    }
                    // advance delta over {1..q-1}^j
                    long t = j - 1;
                    while (t >= 0 && delta[t] == q - 1) delta[t--] = 1;
                    if (t < 0) break;
                    ++delta[t];
                } while (true);
            } while (next_combination());
        }
    } else {
        for (long a = 0; a < v; ++a)
            for (long b = a + 1; b < v; ++b)
                if (scheme.relation(a, b) == j) unite(a, b);
    }

    long comps = 0;
    for (long x = 0; x < v; ++x)
        if (find(static_cast<std::int32_t>(x)) == x) ++comps;
    return {comps == 1, comps};
}

}  // namespace qeig

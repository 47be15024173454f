#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qeig/oracle.hpp"

using namespace qeig;

TEST_CASE("finite field tables") {
    for (long q : {2L, 3L, 4L, 5L, 9L, 25L}) {
        const Field& f = Field::get(q);
        CHECK(f.order() == q);
        for (long a = 0; a < q; ++a) {
            CHECK(f.add(static_cast<Field::elem>(a), f.neg(static_cast<Field::elem>(a))) == 0);
            if (a != 0)
                CHECK(f.mul(static_cast<Field::elem>(a), f.inv(static_cast<Field::elem>(a))) == 1);
            // conjugation is involutory
            CHECK(f.conj(f.conj(static_cast<Field::elem>(a))) == a);
            for (long b = 0; b < q; ++b) {
                auto ea = static_cast<Field::elem>(a), eb = static_cast<Field::elem>(b);
                CHECK(f.mul(ea, eb) == f.mul(eb, ea));
                CHECK(f.conj(f.mul(ea, eb)) == f.mul(f.conj(ea), f.conj(eb)));
                CHECK(f.conj(f.add(ea, eb)) == f.add(f.conj(ea), f.conj(eb)));
            }
        }
        // conjugation fixes exactly the prime subfield
        long fixed = static_cast<long>(f.fixed_elements().size());
        CHECK(fixed == (f.degree() == 2 ? f.characteristic() : q));
    }
    CHECK_THROWS_AS(Field::get(16), UnsupportedField);
    CHECK_THROWS_AS(Field::get(6), UnsupportedField);
}

TEST_CASE("scheme construction") {
    SUBCASE("vertex counts") {
        CHECK(SchemeInstance::build(SchemeParams::grassmann(4, 2, 2)).vertex_count() == 35);
        CHECK(SchemeInstance::build(SchemeParams::hermitian(2, 2)).vertex_count() == 16);
        CHECK(SchemeInstance::build(SchemeParams::hamming(3, 2)).vertex_count() == 8);
        CHECK(SchemeInstance::build(SchemeParams::bilinear(2, 3, 2)).vertex_count() == 64);
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(SchemeInstance::build(SchemeParams::hamming(10, 2), 100), CapExceeded);
    }
    SUBCASE("relation is reflexive-zero and symmetric; class sizes match valencies") {
        for (const SchemeParams& p :
             {SchemeParams::grassmann(4, 2, 2), SchemeParams::bilinear(2, 2, 3),
              SchemeParams::hermitian(2, 3), SchemeParams::hamming(3, 3)}) {
            SchemeInstance s = SchemeInstance::build(p);
            Eigenmatrix P = eigenmatrix(p);
            std::vector<long> sizes(p.d + 1, 0);
            for (long v = 0; v < s.vertex_count(); ++v) {
                int r = s.relation(0, v);
                CHECK(r == s.relation(v, 0));
                ++sizes[r];
            }
            CHECK(s.relation(3 % s.vertex_count(), 3 % s.vertex_count()) == 0);
            for (long j = 0; j <= p.d; ++j) CHECK(ExactInt(sizes[j]) == P.at(0, j));
        }
    }
}

TEST_CASE("intersection matrices") {
    SchemeInstance s = SchemeInstance::build(SchemeParams::bilinear(2, 2, 2));
    IntersectionMatrixSet L = intersection_matrices(s);
    SUBCASE("L_0 identity, row sums equal the valency") {
        for (long k = 0; k <= 2; ++k)
            for (long m = 0; m <= 2; ++m) CHECK(L.L[0][k][m] == (k == m ? 1 : 0));
        CHECK(L.valencies[1] == 9);  // rank-1 count of 2x2 matrices over F_2
        for (long k = 0; k <= 2; ++k) {
            long sum = 0;
            for (long m = 0; m <= 2; ++m) sum += L.L[1][k][m];
            CHECK(sum == 9);
        }
    }
}

TEST_CASE("validate_eigenmatrix") {
    SUBCASE("hamming (2,2) passes") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::hamming(2, 2));
        IntersectionMatrixSet L = intersection_matrices(s);
        Eigenmatrix P = eigenmatrix(SchemeParams::hamming(2, 2));
        CHECK(validate_eigenmatrix(P, L).status == Status::Pass);
    }
    SUBCASE("hermitian (2,2) passes with spectrum {5, 1, -3}") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::hermitian(2, 2));
        IntersectionMatrixSet L = intersection_matrices(s);
        Eigenmatrix P = eigenmatrix(SchemeParams::hermitian(2, 2));
        CHECK(validate_eigenmatrix(P, L).status == Status::Pass);
        auto spec = spectrum_multiset(s, 1, P);
        REQUIRE(spec.size() == 3);
        CHECK(spec[0].value == 5);
        CHECK(spec[0].multiplicity == 1);
        CHECK(spec[1].value == 1);
        CHECK(spec[1].multiplicity == 10);
        CHECK(spec[2].value == -3);
        CHECK(spec[2].multiplicity == 5);
    }
    SUBCASE("a perturbed eigenmatrix fails at the perturbed entry") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::hamming(2, 2));
        IntersectionMatrixSet L = intersection_matrices(s);
        Eigenmatrix P = eigenmatrix(SchemeParams::hamming(2, 2));
        P.entries[1][1] += 1;
        Verdict v = validate_eigenmatrix(P, L);
        CHECK(v.status == Status::Fail);
        CHECK(v.witness["i"] == 1);
    }
}

TEST_CASE("spectrum multisets") {
    SUBCASE("hamming (2,2): j=1 is the 4-cycle, j=0 the identity") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::hamming(2, 2));
        Eigenmatrix P = eigenmatrix(SchemeParams::hamming(2, 2));
        auto spec = spectrum_multiset(s, 1, P);
        REQUIRE(spec.size() == 3);
        CHECK(spec[0].value == 2);
        CHECK(spec[0].multiplicity == 1);
        CHECK(spec[1].value == 0);
        CHECK(spec[1].multiplicity == 2);
        CHECK(spec[2].value == -2);
        CHECK(spec[2].multiplicity == 1);
        auto id = spectrum_multiset(s, 0, P);
        REQUIRE(id.size() == 1);
        CHECK(id[0].value == 1);
        CHECK(id[0].multiplicity == 4);
    }
    SUBCASE("grassmann (4,2,2) j=1: values {18, 3, -3}, multiplicities {1, 14, 20}") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::grassmann(4, 2, 2));
        Eigenmatrix P = eigenmatrix(SchemeParams::grassmann(4, 2, 2));
        auto spec = spectrum_multiset(s, 1, P);
        REQUIRE(spec.size() == 3);
        CHECK(spec[0].value == 18);
        CHECK(spec[0].multiplicity == 1);
        CHECK(spec[1].value == 3);
        CHECK(spec[1].multiplicity == 14);
        CHECK(spec[2].value == -3);
        CHECK(spec[2].multiplicity == 20);
    }
    SUBCASE("a wrong candidate set raises ResidualSpectrum") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::hamming(2, 2));
        Eigenmatrix P = eigenmatrix(SchemeParams::hamming(2, 2));
        P.entries[1][1] = 7;  // 0 disappears from the candidate column
        CHECK_THROWS_AS(spectrum_multiset(s, 1, P), ResidualSpectrum);
    }
}

TEST_CASE("scheme cache round-trip") {
    std::string path = "/tmp/qeig_test_scheme.bin";
    std::remove(path.c_str());
    SchemeInstance built = SchemeInstance::build(SchemeParams::hermitian(2, 2));
    built.save(path);
    SchemeInstance loaded = SchemeInstance::load(path);
    CHECK(loaded.params().describe() == built.params().describe());
    REQUIRE(loaded.vertex_count() == built.vertex_count());
    for (long u = 0; u < built.vertex_count(); ++u)
        for (long v = 0; v < built.vertex_count(); ++v)
            CHECK(loaded.relation(u, v) == built.relation(u, v));
    // loaded instances feed the validators like freshly built ones
    CHECK(validate_eigenmatrix(eigenmatrix(SchemeParams::hermitian(2, 2)),
                               intersection_matrices(loaded))
              .status == Status::Pass);

    // a bad header is rejected
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "qeig-scheme/999\n{}\n";
    }
    CHECK_THROWS_WITH_AS(SchemeInstance::load(path), doctest::Contains("header"),
                         std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("connectivity") {
    SUBCASE("hamming (2,2): distance-2 graph is a perfect matching") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::hamming(2, 2));
        Connectivity c = connectivity(s, 2);
        CHECK_FALSE(c.connected);
        CHECK(c.component_count == 2);
        CHECK(connectivity(s, 1).connected);
    }
    SUBCASE("hamming (3,2): hypercube connected") {
        CHECK(connectivity(SchemeInstance::build(SchemeParams::hamming(3, 2)), 1).connected);
    }
    SUBCASE("grassmann (4,2,2): both distance graphs connected") {
        SchemeInstance s = SchemeInstance::build(SchemeParams::grassmann(4, 2, 2));
        CHECK(connectivity(s, 1).connected);
        CHECK(connectivity(s, 2).connected);
    }
}

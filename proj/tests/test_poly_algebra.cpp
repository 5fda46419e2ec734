#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tc/pae.hpp"

using namespace tc;

namespace {

double comm_defect(const PaeGenerators& g) {
    const double np = frob_norm(g.a_plus);
    const double d = frob_norm(commutator(g.a0, g.a_plus) - g.a_plus);
    return np > 0.0 ? d / np : d;
}

double struct_defect(const PaeGenerators& g) {
    std::vector<double> pd(g.dim);
    for (int i = 0; i < g.dim; ++i) pd[i] = g.poly.eval(g.a0(i, i).real());
    const Mat p = Mat::diag(pd);
    const double np = frob_norm(p);
    const double d = frob_norm(g.a_plus * g.a_minus - p);
    return np > 0.0 ? d / np : d;
}

}  // namespace

TEST_CASE("structure polynomial of a zone") {
    SUBCASE("double root on the M = 2r boundary") {
        const auto p = tc_structure_polynomial(4, half(4));
        CHECK(p.c0 == -1.0);
        REQUIRE(p.roots.size() == 3);
        CHECK(p.roots[0] == doctest::Approx(-1.0));
        CHECK(p.roots[1] == doctest::Approx(-1.0));
        CHECK(p.roots[2] == doctest::Approx(4.0));
    }
    SUBCASE("nearby zone roots and bounding pair") {
        const auto p = tc_structure_polynomial(1, half(4));
        CHECK(p.roots[0] == doctest::Approx(-2.5));
        CHECK(p.roots[1] == doctest::Approx(0.5));
        CHECK(p.roots[2] == doctest::Approx(2.5));
        CHECK(classify_zone(1, half(4)).dim == 2);
    }
    SUBCASE("remote zone roots") {
        const auto p = tc_structure_polynomial(12, half(4));
        CHECK(p.roots[0] == doctest::Approx(-5.0));
        CHECK(p.roots[1] == doctest::Approx(3.0));
        CHECK(p.roots[2] == doctest::Approx(8.0));
        CHECK(classify_zone(12, half(4)).dim == 5);
    }
    CHECK_THROWS_AS(tc_structure_polynomial(-1, half(2)), std::invalid_argument);
    CHECK_THROWS_AS(tc_structure_polynomial(3, half(-2)), std::invalid_argument);

    // evaluation is the root product
    const auto p = tc_structure_polynomial(7, half(3));
    CHECK(p.eval(1.25) ==
          doctest::Approx(-1.0 * (1.25 - p.roots[0]) * (1.25 - p.roots[1]) * (1.25 - p.roots[2])));
}

TEST_CASE("zone classification and irrep classes") {
    const ZoneLabel nearby = classify_zone(1, half(4));
    CHECK(nearby.kind == ZoneKind::Nearby);
    CHECK(nearby.dim == 2);
    CHECK(nearby.irrep.k_minus == 1);
    CHECK(nearby.irrep.k_plus == 1);

    const ZoneLabel inter = classify_zone(4, half(4));
    CHECK(inter.kind == ZoneKind::Intermediate);
    CHECK(inter.dim == 5);
    CHECK(inter.irrep.str() == "R(2,1,5)");

    const ZoneLabel remote = classify_zone(12, half(4));
    CHECK(remote.kind == ZoneKind::Remote);
    CHECK(remote.dim == 5);
    CHECK(remote.irrep.str() == "R(1,1,5)");

    // unordered pair comparison
    CHECK(isomorphic({2, 1, 5}, {1, 2, 5}));
    CHECK(!isomorphic({2, 1, 5}, {1, 1, 5}));
    CHECK(!isomorphic({1, 1, 4}, {1, 1, 5}));
}

TEST_CASE("zone dimension equals the bounding root gap (sweep)") {
    for (int M = 0; M <= 60; ++M)
        for (int r2 = 0; r2 <= 20; ++r2) {
            const HalfInt r = HalfInt::from_twice(r2);
            const auto p = tc_structure_polynomial(M, r);
            const long gap = std::lround(p.roots[2] - p.roots[1]);
            CHECK(classify_zone(M, r).dim == std::min(M + 1, r2 + 1));
            CHECK(classify_zone(M, r).dim == gap);
        }
}

TEST_CASE("boson realization anchored at a right-open root") {
    // Heisenberg-Weyl: truncated creation operator with sqrt(n) entries.
    const auto g = realize_pae_right(StructurePolynomial::heisenberg_weyl(), 0, 5);
    for (int n = 0; n < 5; ++n) CHECK(g.a0(n, n).real() == doctest::Approx(double(n)));
    for (int n = 0; n + 1 < 5; ++n)
        CHECK(g.a_plus(n + 1, n).real() == doctest::Approx(std::sqrt(n + 1.0)));
    CHECK(comm_defect(g) < 1e-14);
    CHECK(struct_defect(g) < 1e-14);
}

TEST_CASE("spin realizations") {
    // Holstein-Primakoff for spin-1/2: a+a- = diag(0, 1).
    const auto g = realize_pae_right(StructurePolynomial::su2(half(1)), 0, 2);
    const Mat prod = g.a_plus * g.a_minus;
    CHECK(prod(0, 0).real() == doctest::Approx(0.0));
    CHECK(prod(1, 1).real() == doctest::Approx(1.0));
    CHECK(std::abs(prod(0, 1)) + std::abs(prod(1, 0)) < 1e-15);

    // annihilator-style realization anchored at q2 = r + 1 for r = 1
    const auto l = realize_pae_left(StructurePolynomial::su2(half(2)), 1, 3);
    CHECK(l.a0(0, 0).real() == doctest::Approx(1.0));
    CHECK(l.a0(1, 1).real() == doctest::Approx(0.0));
    CHECK(l.a0(2, 2).real() == doctest::Approx(-1.0));
    CHECK(comm_defect(l) < 1e-14);
    CHECK(struct_defect(l) < 1e-14);

    // one-dimensional irreps carry zero ladders
    CHECK(frob_norm(realize_pae_right(StructurePolynomial::su2(half(0)), 0, 1).a_plus) == 0.0);
    CHECK(frob_norm(realize_pae_left(tc_structure_polynomial(3, half(0)), 2, 1).a_plus) == 0.0);
}

TEST_CASE("zone ladder realization anchored at the top root") {
    // M=12, r=2: a0 spectrum (M+r)/2 - n = 7..3
    const auto g = realize_pae_left(tc_structure_polynomial(12, half(4)), 2, 5);
    for (int n = 0; n < 5; ++n) CHECK(g.a0(n, n).real() == doctest::Approx(7.0 - n));
    CHECK(comm_defect(g) < 1e-13);
    CHECK(struct_defect(g) < 1e-13);
    CHECK(frob_norm(g.a_minus - g.a_plus.adjoint()) == 0.0);
}

TEST_CASE("realization rejects a negative structure polynomial window") {
    // spin-1 polynomial is negative to the right of q2 = 2
    CHECK_THROWS_AS(realize_pae_right(StructurePolynomial::su2(half(2)), 1, 3), std::domain_error);
}

TEST_CASE("isomorphism map reproduces the remote-zone closed form") {
    const int M = 12;
    const HalfInt r = half(4);
    const SpinOps s = spin_ops(r);
    PaeGenerators spin{s.s3, s.sp, s.sm, s.dim, StructurePolynomial::su2(r), 0, Realization::Right};

    const auto mapped = isomorphism_map(spin, tc_structure_polynomial(M, r), 2, MapOrientation::Reversed);
    // M0 = (M - r)/2 - S3, M+ = S- sqrt(M - r + 1 - S3)
    for (int i = 0; i < mapped.dim; ++i) {
        const double m = -r.value() + i;
        CHECK(mapped.a0(i, i).real() == doctest::Approx((M - r.value()) / 2.0 - m).epsilon(1e-14));
    }
    Mat expect(mapped.dim);
    for (int i = 0; i < mapped.dim; ++i)
        for (int j = 0; j < mapped.dim; ++j)
            expect(i, j) = s.sm(i, j) * std::sqrt(M - r.value() + 1.0 - (-r.value() + j));
    CHECK(max_abs(mapped.a_plus - expect) < 1e-13);
    CHECK(frob_norm(mapped.a_minus - mapped.a_plus.adjoint()) < 1e-13);
}

TEST_CASE("isomorphism map reproduces the nearby-zone closed form") {
    const int M = 1;
    const HalfInt r = half(4);  // r = 2, nearby zone of dimension 2
    const HalfInt rt = half(M);
    const SpinOps s = spin_ops(rt);
    PaeGenerators spin{s.s3, s.sp, s.sm, s.dim, StructurePolynomial::su2(rt), 0, Realization::Right};

    const auto mapped = isomorphism_map(spin, tc_structure_polynomial(M, r), 2, MapOrientation::Reversed);
    // M0 = r/2 - S3, M+ = S- sqrt((4r - M)/2 + 1 - S3)
    for (int i = 0; i < mapped.dim; ++i) {
        const double m = -rt.value() + i;
        CHECK(mapped.a0(i, i).real() == doctest::Approx(r.value() / 2.0 - m).epsilon(1e-14));
    }
    CHECK(mapped.a_plus(0, 1).real() ==
          doctest::Approx(std::sqrt((4.0 * r.value() - M) / 2.0 + 1.0 - 0.5)));
}

TEST_CASE("identity isomorphism is exact") {
    const auto p = tc_structure_polynomial(9, half(3));
    const auto g = realize_pae_left(p, 2, 4);
    const auto same = isomorphism_map(g, p, 2, MapOrientation::Direct);
    CHECK(max_abs(same.a0 - g.a0) < 1e-12);
    CHECK(max_abs(same.a_plus - g.a_plus) < 1e-12);
    CHECK(max_abs(same.a_minus - g.a_minus) < 1e-12);
}

TEST_CASE("isomorphism rejects incompatible irreps") {
    // the M = 2r zone has class R(2,1,d); no spin image exists
    const auto p = tc_structure_polynomial(4, half(4));
    const auto g = realize_pae_left(p, 2, 5);
    CHECK_THROWS_AS(isomorphism_map(g, StructurePolynomial::su2(half(4)), 0, MapOrientation::Reversed),
                    std::invalid_argument);
}

TEST_CASE("round trip through the spin algebra returns the zone generators") {
    for (int M : {3, 8, 19, 30})
        for (int r2 : {1, 2, 4, 7}) {
            if (M == r2) continue;  // boundary zones have no spin image
            const HalfInt r = HalfInt::from_twice(r2);
            const auto p = tc_structure_polynomial(M, r);
            const int d = classify_zone(M, r).dim;
            const auto g = realize_pae_left(p, 2, d);
            const HalfInt rt = HalfInt::from_twice(std::min(M, r2));
            const auto spin = isomorphism_map(g, StructurePolynomial::su2(rt), 0, MapOrientation::Reversed);
            CHECK(frob_norm(spin.a_minus - spin.a_plus.adjoint()) < 1e-12);
            const auto back = isomorphism_map(spin, p, 2, MapOrientation::Reversed);
            CHECK(max_abs(back.a0 - g.a0) < 1e-10);
            CHECK(max_abs(back.a_plus - g.a_plus) < 1e-10);
            CHECK(max_abs(back.a_minus - g.a_minus) < 1e-10);
        }
}

TEST_CASE("remote-zone square root stays positive over the spin spectrum") {
    for (int r2 = 1; r2 <= 8; ++r2)
        for (int M = r2 + 1; M <= 40; ++M) {
            const double r = 0.5 * r2;
            for (int m2 = -r2; m2 <= r2; m2 += 2) CHECK(M - r + 1.0 - 0.5 * m2 > 0.0);
        }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tc/eigen.hpp"
#include "tc/pae.hpp"
#include "tc/perturbation.hpp"
#include "tc/tc_model.hpp"

using namespace tc;

TEST_CASE("Rabi frequency branches") {
    CHECK(rabi_frequency(5, half(3)) == doctest::Approx(4.0));
    CHECK(alpha_param(5, half(3)) == doctest::Approx(0.25));
    CHECK(rabi_frequency(1, half(2)) == doctest::Approx(2.0 * std::sqrt(2.0)));

    // both branch formulas coincide on the M = 2r boundary
    for (int r2 : {1, 2, 5, 9}) {
        const HalfInt r = HalfInt::from_twice(r2);
        const int M = r2;
        CHECK(rabi_nearby(M, r) == doctest::Approx(rabi_remote(M, r)).epsilon(1e-14));
        CHECK(rabi_frequency(M, r) == doctest::Approx(2.0 * std::sqrt(0.5 * r2 + 0.5)));
    }

    // effective spin r~ = min(M/2, r)
    CHECK(effective_spin(3, half(8)).twice == 3);
    CHECK(effective_spin(9, half(4)).twice == 4);
}

TEST_CASE("third-order spectrum closed forms") {
    // single atom: exact at all orders
    for (int M : {1, 5, 42}) {
        const auto lv = third_order_spectrum(M, half(1));
        CHECK(lv[0].energy == doctest::Approx(-std::sqrt(double(M))).epsilon(1e-15));
        CHECK(lv[1].energy == doctest::Approx(std::sqrt(double(M))).epsilon(1e-15));
    }

    // frozen spot values: 6 (1 + 1/256), 2 (1 - 9/256) for (M=5, r=3/2)
    const auto lv = third_order_spectrum(5, half(3));
    CHECK(lv[3].energy == doctest::Approx(6.0 * (1.0 + 1.0 / 256.0)).epsilon(1e-15));
    CHECK(lv[2].energy == doctest::Approx(2.0 * (1.0 - 9.0 / 256.0)).epsilon(1e-15));

    // (M=3, r=3): 3 sqrt5 (1 + 1/400), sqrt5 (1 - 9/400)
    const auto nb = third_order_spectrum(3, half(6));
    CHECK(nb[3].energy == doctest::Approx(3.0 * std::sqrt(5.0) * 1.0025).epsilon(1e-15));
    CHECK(nb[2].energy == doctest::Approx(std::sqrt(5.0) * 0.9775).epsilon(1e-15));

    // spectrum is odd in m, exactly
    for (int M : {4, 11})
        for (int r2 : {3, 6}) {
            const auto v = third_order_spectrum(M, HalfInt::from_twice(r2));
            const int d = static_cast<int>(v.size());
            for (int i = 0; i < d; ++i) {
                CHECK(v[i].m.twice == -v[d - 1 - i].m.twice);
                CHECK(v[i].energy == -v[d - 1 - i].energy);
            }
        }
}

TEST_CASE("series terms") {
    SUBCASE("spin-1/2: odd terms vanish and the doublet is exact") {
        const SeriesTerms st = series_terms(half(1), 0.37);
        CHECK(frob_norm(st.v1) == 0.0);
        CHECK(frob_norm(st.v3) == 0.0);
        // (Omega/2) * sum equals the exact doublet matrix off-diagonal 1
        const Mat sum = st.sum();
        CHECK(sum(0, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(sum(1, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("alpha = 0 leaves the transverse spin") {
        const SpinOps s = spin_ops(half(4));
        const SeriesTerms st = series_terms(half(4), 0.0);
        CHECK(max_abs(st.sum() - (s.sp + s.sm)) < 1e-15);
    }
    SUBCASE("matches zone matrix entries to fourth order") {
        // (M=5, r=3/2): residual is the alpha^4 tail of the square root,
        // measured at 10.5 (alpha/4)^4 Omega_R.
        const double alpha = alpha_param(5, half(3));
        const double omega_r = rabi_frequency(5, half(3));
        const ZoneMatrix z = zone_matrix(5, half(3));
        auto residual = [&](double a) {
            const Mat sum = series_terms(half(3), a).sum();
            double worst = 0.0;
            for (int n = 0; n < 3; ++n) {
                // exact dimensionless entry sqrt(1 - a (m + 1/2)) * spin element
                const double m = -1.5 + n;
                const double spin_el = std::sqrt(1.5 * 2.5 - m * (m + 1.0));
                const double exact = std::sqrt(1.0 - a * (m + 0.5)) * spin_el;
                worst = std::max(worst, std::abs(sum(n, n + 1).real() - exact));
            }
            return worst;
        };
        const double res = residual(alpha);
        CHECK(res * omega_r / 2.0 < 11.0 * std::pow(alpha / 4.0, 4.0) * omega_r);
        // quartic decay under alpha halving
        CHECK(res / residual(alpha / 2.0) > 12.0);
        // and the full matrix against the zone tridiagonal
        Mat scaled = series_terms(half(3), alpha).sum();
        scaled *= cplx(omega_r / 2.0, 0.0);
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double want = 0.0;
                if (i == j + 1) want = z.t.off[j];
                if (j == i + 1) want = z.t.off[i];
                worst = std::max(worst, std::abs(scaled(i, j).real() - want));
            }
        CHECK(worst < 11.0 * std::pow(alpha / 4.0, 4.0) * omega_r);
    }
}

TEST_CASE("transform chain") {
    SUBCASE("zero-order rotation alone diagonalizes at alpha -> 0") {
        const SpinOps s = spin_ops(half(4));
        const Mat u0 = dressing_u0(5);
        const Mat rot = u0 * series_terms(half(4), 0.0).sum() * u0.adjoint();
        CHECK(offdiag_norm(rot) < 1e-12);
        for (int i = 0; i < 5; ++i) CHECK(rot(i, i).real() == doctest::Approx(2.0 * (i - 2.0)).epsilon(1e-12));
    }
    SUBCASE("spin-1 zone: residual is third order, diagonal is the bare splitting") {
        const TransformChain c = transform_chain(half(2), 0.1);
        const double omega_r = 2.0 / std::sqrt(0.1);
        CHECK(c.offdiag_residual < 4e-6);  // measured 3.7e-6, pure alpha^3
        CHECK(std::abs(c.diagonal_energy[0] + omega_r) < 2e-6);
        CHECK(std::abs(c.diagonal_energy[1]) < 1e-14);
        CHECK(std::abs(c.diagonal_energy[2] - omega_r) < 2e-6);
        // cubic decay
        const TransformChain h = transform_chain(half(2), 0.05);
        CHECK(c.offdiag_residual / h.offdiag_residual > 7.0);
        CHECK(c.offdiag_residual / h.offdiag_residual < 9.0);
    }
    SUBCASE("diagonal matches the closed-form spectrum to fourth order") {
        for (double alpha : {0.2, 0.1, 0.05}) {
            const TransformChain c = transform_chain(half(4), alpha);
            const double omega_r = 2.0 / std::sqrt(alpha);
            const auto lv = third_order_levels(half(4), omega_r);
            for (int i = 0; i < 5; ++i)
                CHECK(std::abs(c.diagonal_energy[i] - lv[i].energy) <
                      0.35 * std::pow(alpha, 4.0) * omega_r);
        }
    }
    SUBCASE("conjugation preserves the spectrum") {
        const double alpha = 0.15;
        const Mat sum = series_terms(half(4), alpha).sum();
        // the series is symmetric tridiagonal; the conjugated form is dense
        SymTridiag t;
        t.diag.resize(5);
        t.off.resize(4);
        for (int i = 0; i < 5; ++i) t.diag[i] = sum(i, i).real();
        for (int i = 0; i < 4; ++i) t.off[i] = sum(i, i + 1).real();
        const auto before = tridiag_eigenvalues(t);

        const TransformChain c = transform_chain(half(4), alpha);
        std::vector<double> a(25);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a[i * 5 + j] = c.conjugated(i, j).real();
        const auto after = sym_eigen(a, 5).values;
        for (int i = 0; i < 5; ++i) CHECK(std::abs(before[i] - after[i]) < 1e-10);
    }
}

TEST_CASE("commutator identities") {
    // spin-1/2: D1 and B both vanish identically
    {
        const SpinOps s = spin_ops(half(1));
        const Mat sx = 0.5 * (s.sp + s.sm);
        CHECK(frob_norm(anticommutator(s.s3, sx)) < 1e-15);
        const Mat d1 = 0.5 * (anticommutator(s.s3, s.sp) - anticommutator(s.s3, s.sm));
        CHECK(frob_norm(d1) < 1e-15);
    }
    for (int r2 : {1, 2, 4, 7}) {
        const CommutatorReport rep = commutator_identities_check(HalfInt::from_twice(r2));
        for (double e : rep.rel_err) CHECK(e < 1e-10);
    }
}

TEST_CASE("spectrum comparison against the exact oracle") {
    // single-atom zones are exact
    for (int M : {1, 30, 200}) CHECK(compare_spectra(M, half(1)).max_abs_dev < 1e-12);

    // error is much larger on the boundary zone than deep in the remote region
    const double d12 = compare_spectra(12, half(12)).max_abs_dev;
    const double d40 = compare_spectra(40, half(12)).max_abs_dev;
    CHECK(d12 / d40 > 10.0);

    // the expansion parameter satisfies alpha (r~ - 1/2) < 1 on every zone:
    // nearby zones would need M >= 2r+1 to break it, remote ones M <= 2r-1
    for (int M = 0; M <= 50; ++M)
        for (int r2 = 0; r2 <= 24; ++r2) CHECK(expansion_converges(M, HalfInt::from_twice(r2)));

    // deviation decays monotonically in M past the boundary region
    for (int r2 = 1; r2 <= 12; ++r2) {
        double prev = -1.0;
        for (int M = r2 + 2; M <= 60; ++M) {
            const double dev = compare_spectra(M, HalfInt::from_twice(r2)).max_abs_dev;
            if (prev >= 0.0) CHECK(dev <= prev + 1e-12);
            prev = dev;
        }
    }

    // branch sweep: the boundary zone is branch-independent
    const auto rows = branch_deviation_sweep_serial(half(6), 6, 6);
    CHECK(rows[0].dev_nearby == doctest::Approx(rows[0].dev_remote).epsilon(1e-12));

    // parallel sweep is bitwise identical to the serial one
    const auto ser = branch_deviation_sweep_serial(half(6), 0, 25);
    const auto par = branch_deviation_sweep(half(6), 0, 25);
    REQUIRE(ser.size() == par.size());
    for (size_t i = 0; i < ser.size(); ++i) {
        CHECK(ser[i].M == par[i].M);
        const bool nearby_same = (std::isnan(ser[i].dev_nearby) && std::isnan(par[i].dev_nearby)) ||
                                 ser[i].dev_nearby == par[i].dev_nearby;
        const bool remote_same = (std::isnan(ser[i].dev_remote) && std::isnan(par[i].dev_remote)) ||
                                 ser[i].dev_remote == par[i].dev_remote;
        CHECK(nearby_same);
        CHECK(remote_same);
    }
}

#include <doctest.h>

#include <cmath>

#include "sshcond/reference.hpp"
#include "sshcond/specfun.hpp"

using namespace sshcond;
using namespace sshcond::specfun;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("gamma: closed values, poles, reference agreement") {
    const double sq = std::sqrt(pi);
    CHECK(rel(gamma_complex(0.5), sq) < 1e-14);
    CHECK(rel(gamma_complex(-0.5), -2.0 * sq) < 1e-14);
    CHECK(rel(gamma_complex(6.0), 120.0) < 1e-14);
    CHECK_THROWS_AS(gamma_complex(0.0), PoleError);
    CHECK_THROWS_AS(gamma_complex(-3.0), PoleError);
    CHECK(rel(gamma_complex(cplx{1.5, 2.0}), reference::gamma_stirling(cplx{1.5, 2.0})) < 1e-12);
    // spread across the region the transform formulas use
    for (double re : {-4.2, -1.3, 0.1, 2.7, 9.4, 24.0})
        for (double im : {-6.0, -0.8, 0.4, 3.0, 15.0})
            CHECK(rel(gamma_complex(cplx{re, im}), reference::gamma_stirling(cplx{re, im})) <
                  1e-12);
}

TEST_CASE("gamma: recurrence and reflection on a deterministic grid") {
    for (double re : {-7.3, -2.1, 0.3, 1.9, 6.6, 13.2})
        for (double im : {-9.0, -1.1, 0.7, 4.2, 11.0}) {
            const cplx z{re, im};
            CHECK(rel(gamma_complex(z + 1.0), z * gamma_complex(z)) < 1e-12);
            CHECK(rel(gamma_complex(z) * gamma_complex(1.0 - z), pi / std::sin(pi * z)) < 1e-11);
        }
}

TEST_CASE("zeta: known values and the eta-sum oracle") {
    CHECK(rel(zeta_complex(2.0), pi * pi / 6.0) < 1e-12);
    CHECK(rel(zeta_complex(1.5), 2.612375348685488) < 1e-10);
    const cplx s{1.2, 0.7};
    const cplx eta = reference::eta_direct_sum(s);
    CHECK(rel(zeta_complex(s), eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)))) < 1e-8);
    CHECK_THROWS_AS(zeta_complex(1.0), PoleError);
    CHECK_THROWS_AS(zeta_complex(cplx{-0.5, 0.0}), RegionError);
}

TEST_CASE("zeta at half: identity values and Hurwitz-sum oracle") {
    CHECK(rel(zeta_half(2.0), pi * pi / 2.0) < 1e-12);
    CHECK(rel(zeta_half(3.0), 7.0 * zeta_complex(3.0)) < 1e-13);
    CHECK(rel(zeta_half(1.5), (std::pow(2.0, 1.5) - 1.0) * 2.612375348685488) < 1e-10);
    for (double g : {1.15, 1.4, 1.65, 1.9})
        for (double im : {0.0, -0.5, 0.8}) {
            const cplx t{g, im};
            CHECK(rel(zeta_half(t), reference::hurwitz_half_sum(t)) < 1e-9);
        }
    // residue at theta = 1 is 1: (theta-1) zeta_half -> 1
    for (double h : {1e-3, 1e-5})
        CHECK(std::abs((cplx{h, 0.0}) * zeta_half(1.0 + h) - 1.0) < 5e-3);
}

TEST_CASE("2F1(3/2,1;5/2;z): series, closed value, cut") {
    CHECK(std::abs(hyp2f1_threehalf(cplx{0.0, 0.0}) - 1.0) < 1e-15);
    CHECK(rel(hyp2f1_threehalf(0.5), reference::gauss_2f1_series(1.5, 1.0, 2.5, 0.5)) < 1e-13);
    CHECK(hyp2f1_threehalf(0.5).real() == doctest::Approx(1.478703).epsilon(1e-6));
    CHECK_THROWS_AS(hyp2f1_threehalf(cplx{1.2, 0.0}), BranchCutError);
    CHECK_THROWS_AS(hyp2f1_threehalf(cplx{1.0, 0.0}), BranchCutError);

    // z = -1 against the Euler-accelerated alternating Gauss series
    auto term = [](int n) -> cplx { return 3.0 / (2.0 * n + 3.0); };
    const cplx accel = reference::euler_alternating_sum(term);
    CHECK(rel(hyp2f1_threehalf(-1.0), accel) < 1e-10);
}

TEST_CASE("2F1(1,1;3/2;z): series, negative axis, near the branch point") {
    CHECK(std::abs(hyp2f1_onehalfth(cplx{0.0, 0.0}) - 1.0) < 1e-15);
    // (1/sqrt 2) asinh(1)
    const double want = std::asinh(1.0) / std::sqrt(2.0);
    CHECK(rel(hyp2f1_onehalfth(-1.0), want) < 1e-13);
    auto term = [](int n) -> cplx {
        double t = 1.0;
        for (int m = 1; m <= n; ++m) t *= m / (m + 0.5);
        return t;
    };
    CHECK(rel(hyp2f1_onehalfth(-1.0), reference::euler_alternating_sum(term)) < 1e-10);
    // slow series still converges at z = 0.99; value is large and positive
    const cplx v = hyp2f1_onehalfth(0.99);
    CHECK(rel(v, reference::gauss_2f1_series(1.0, 1.0, 1.5, 0.99, 20000)) < 1e-8);
    CHECK(std::real(v) > 10.0);
    CHECK_THROWS_AS(hyp2f1_onehalfth(cplx{1.0, 0.0}), BranchCutError);
}

TEST_CASE("2F1 closed forms match the Gauss series on the |z| <= 0.8 disk") {
    for (double r : {0.15, 0.45, 0.8})
        for (int j = 0; j < 8; ++j) {
            const cplx z = std::polar(r, 2.0 * pi * (j + 0.37) / 8.0);
            CHECK(rel(hyp2f1_threehalf(z), reference::gauss_2f1_series(1.5, 1.0, 2.5, z)) <
                  1e-10);
            CHECK(rel(hyp2f1_onehalfth(z), reference::gauss_2f1_series(1.0, 1.0, 1.5, z)) <
                  1e-10);
        }
}

TEST_CASE("contiguous relation ties the two closed forms together") {
    // (3/2)(1-z) F(3/2,1;3/2;z) - (3/2) F(1/2,1;3/2;z) + (z/2) F(3/2,1;5/2;z) = 0
    for (double r : {0.2, 0.55, 0.85})
        for (int j = 0; j < 10; ++j) {
            const cplx z = std::polar(r, 2.0 * pi * (j + 0.21) / 10.0);
            const cplx w = std::sqrt(z);
            const cplx lhs = 1.5 * (1.0 - z) / (1.0 - z) - 1.5 * std::atanh(w) / w +
                             0.5 * z * hyp2f1_threehalf(z);
            CHECK(std::abs(lhs) < 1e-11);
        }
}

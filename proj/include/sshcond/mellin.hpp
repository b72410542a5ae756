#ifndef SSHCOND_MELLIN_HPP
#define SSHCOND_MELLIN_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sshcond/quadrature.hpp"
#include "sshcond/reference.hpp"
#include "sshcond/specfun.hpp"
#include "sshcond/types.hpp"

namespace sshcond {
namespace mellin {

/// Dual variables (lambda, nu, theta) conjugate to (eps1, eps2, eps3).
struct MellinPoint {
    cplx lambda{}, nu{}, theta{};
};

/// Convergence polyhedron of the triple transform:
///   g1 < 1,  0 < g2,  1 < g3 < 2,  1/2 + g2 < g3/2 - g1 < 1
/// with (g1, g2, g3) the real parts of (lambda, nu, theta). The chain of
/// constraints implies g1 > -1/2 and g2 < 1/2.
inline bool in_region_d(const MellinPoint& p) {
    const double g1 = std::real(p.lambda);
    const double g2 = std::real(p.nu);
    const double g3 = std::real(p.theta);
    return (g1 < 1.0) && (0.0 < g2 && g2 < 1.0) && (1.0 < g3 && g3 < 2.0) &&
           (0.5 + g2 < 0.5 * g3 - g1) && (0.5 * g3 - g1 < 1.0);
}

namespace detail {

inline cplx rgamma(cplx z) {
    if (specfun::detail::near_nonpositive_integer(z)) return cplx{0.0, 0.0};
    return 1.0 / specfun::gamma_complex(z);
}

inline void require_regular(cplx z, const char* factor) {
    if (specfun::detail::near_nonpositive_integer(z))
        throw PoleError(std::string("Gamma pole in factor ") + factor);
}

}  // namespace detail

/// Closed form of the triple Mellin transform:
///   -2^{-2nu-2lambda-1} pi^{1/2-theta} zeta(theta,1/2)/sin(pi theta/2)
///   * G(1-l) G(l+1-t/2) G(1-n) G(n) G(t/2-l-n-1/2) / (G(t/2-l-n) G(2-t/2)).
/// The Fermi factor carries exp(e3 sqrt(e1 + r)), so the e3 axis
/// contributes (e1+r)^{(theta-1)/2}; every downstream Gamma argument sees
/// theta through (theta+1)/2.
inline cplx transform_closed(const MellinPoint& p) {
    const cplx l = p.lambda, n = p.nu, t = p.theta;
    if (std::abs(t - 1.0) < 1e-12) throw PoleError("zeta pole at theta = 1");
    {
        const cplx half_t = 0.5 * t;
        const double re = std::round(std::real(half_t));
        if (std::abs(half_t - cplx{re, 0.0}) < 1e-13)
            throw PoleError("sin(pi theta/2) zero at even integer theta");
    }
    detail::require_regular(1.0 - l, "Gamma(1-lambda)");
    detail::require_regular(l + 1.0 - 0.5 * t, "Gamma(lambda+1-theta/2)");
    detail::require_regular(1.0 - n, "Gamma(1-nu)");
    detail::require_regular(n, "Gamma(nu)");
    detail::require_regular(0.5 * t - l - n - 0.5, "Gamma(theta/2-lambda-nu-1/2)");

    const cplx pow2 = std::exp((-2.0 * n - 2.0 * l - 1.0) * std::log(2.0));
    const cplx powpi = std::exp((0.5 - t) * std::log(pi));
    const cplx zfac = specfun::zeta_half(t) / std::sin(0.5 * pi * t);
    cplx num = specfun::gamma_complex(1.0 - l) * specfun::gamma_complex(l + 1.0 - 0.5 * t) *
               specfun::gamma_complex(1.0 - n) * specfun::gamma_complex(n) *
               specfun::gamma_complex(0.5 * t - l - n - 0.5);
    num *= detail::rgamma(0.5 * t - l - n) * detail::rgamma(2.0 - 0.5 * t);
    return -pow2 * powpi * zfac * num;
}

/// eps3-axis factor: int_0^inf e3^{-theta} [f(e3) - f(-e3)] de3 evaluated
/// pointwise in u = eps1 + r(z). Substituting x = e3 sqrt(u) gives
///   -(2 pi)^{1-theta} u^{(theta-1)/2} zeta(theta, 1/2) / sin(pi theta / 2)
/// on 1 < Re theta < 2: the u power rides on sqrt(u), half the exponent a
/// linear energy argument would give.
inline cplx factor_eps3_closed(cplx theta, cplx u) {
    const double g = std::real(theta);
    if (!(g > 1.0 && g < 2.0))
        throw RegionError("factor_eps3_closed: need 1 < Re theta < 2");
    return -std::exp((1.0 - theta) * std::log(2.0 * pi)) *
           std::exp(0.5 * (theta - 1.0) * std::log(u)) * specfun::zeta_half(theta) /
           std::sin(0.5 * pi * theta);
}

/// Quadrature oracle for factor_eps3_closed at real u > 0: adaptive
/// integral of -e^{-theta} tanh(e sqrt(u)/2) up to T plus the analytic
/// power tail; tanh differs from 1 by under e^-60 beyond T.
inline cplx factor_eps3_quadrature(cplx theta, double u, const QuadratureSpec& spec = {}) {
    const double su = std::sqrt(u);
    const double T = 60.0 / su;
    auto f = [&](double e) { return std::exp(-theta * std::log(e)) * std::tanh(0.5 * e * su); };
    std::vector<double> brk;
    for (double x = T * 0.5; x > 1e-13 * T; x *= 0.25) brk.push_back(x);
    const QuadResult q = integrate(f, 0.0, T, spec, brk);
    const cplx tail = std::exp((1.0 - theta) * std::log(T)) / (theta - 1.0);
    return -(q.value + tail);
}

/// eps1-axis factor: int_0^inf e1^{-lambda} (e1 + r)^{theta-5/2} de1
///   = r^{theta-lambda-3/2} G(1-lambda) G(lambda-theta+3/2) / G(5/2-theta)
/// for Re lambda < 1, Re(theta - lambda) < 3/2.
inline cplx factor_eps1_closed(cplx lambda, cplx theta, double r) {
    if (!(std::real(lambda) < 1.0 && std::real(theta - lambda) < 1.5))
        throw RegionError("factor_eps1_closed: need Re lambda < 1, Re(theta-lambda) < 3/2");
    return std::exp((theta - lambda - 1.5) * std::log(cplx{r, 0.0})) *
           specfun::gamma_complex(1.0 - lambda) * specfun::gamma_complex(lambda - theta + 1.5) *
           detail::rgamma(2.5 - theta);
}

inline cplx factor_eps1_quadrature(cplx lambda, cplx theta, double r,
                                   const QuadratureSpec& spec = {}) {
    return reference::power_law_integral(lambda, theta - 2.5, r, spec);
}

/// eps2-axis factor: int_0^inf e2^{-nu} (e2 + r)^{-1} de2 = r^{-nu} G(1-nu) G(nu)
/// for 0 < Re nu < 1 (equivalently pi r^{-nu}/sin(pi nu)).
inline cplx factor_eps2_closed(cplx nu, double r) {
    const double g = std::real(nu);
    if (!(g > 0.0 && g < 1.0)) throw RegionError("factor_eps2_closed: need 0 < Re nu < 1");
    return std::exp(-nu * std::log(cplx{r, 0.0})) * specfun::gamma_complex(1.0 - nu) *
           specfun::gamma_complex(nu);
}

inline cplx factor_eps2_quadrature(cplx nu, double r, const QuadratureSpec& spec = {}) {
    return reference::power_law_integral(nu, cplx{-1.0, 0.0}, r, spec);
}

/// z-contour factor Xi(s) = (1/2 pi i) oint z^{s+1/2} (1+z)^{-2s-3} dz on
/// the unit circle, for Re s < -1:
///   -(1/pi) cos(pi s) G(s+3/2) G(-2s-2) / G(-s-1/2).
/// Near half-integer s the cos zero rides a Gamma pole; there the
/// reflection identity cos(pi s) G(s+3/2) = -pi / G(-s-1/2) gives the
/// stable equivalent G(-2s-2)/G(-s-1/2)^2.
inline cplx xi_closed(cplx s) {
    if (!(std::real(s) < -1.0)) throw RegionError("xi_closed: need Re s < -1");
    if (specfun::detail::near_nonpositive_integer(s + 1.5, 0.05)) {
        const cplx g = specfun::gamma_complex(-s - 0.5);
        return specfun::gamma_complex(-2.0 * s - 2.0) / (g * g);
    }
    return -(1.0 / pi) * std::cos(pi * s) * specfun::gamma_complex(s + 1.5) *
           specfun::gamma_complex(-2.0 * s - 2.0) / specfun::gamma_complex(-s - 0.5);
}

/// Branch-cut collapse oracle for Xi:
///   -(1/pi) sin(pi (s + 1/2)) int_0^1 x^{s+1/2} (1-x)^{-2s-3} dx,
/// the x-integral continued past Re s = -3/2 by endpoint subtraction.
inline cplx xi_cut_integral(cplx s, const QuadratureSpec& spec = {}) {
    return -(1.0 / pi) * std::sin(pi * (s + 0.5)) *
           reference::beta_integral(s + 1.5, -2.0 * s - 2.0, spec);
}

/// Direct numerical contour integral of Xi on |z| = 1 with principal
/// branches, z = e^{i phi}. The integrable endpoint singularity at
/// z = -1 is closed analytically: near phi = +-pi the integrand equals
/// (2 sin(u/2))^{-2s-3} with u the distance to the endpoint, and
/// int_0^h expands in powers of u^2 around u^{-2s-2}/(-2s-2).
inline cplx xi_circle_integral(cplx s, const QuadratureSpec& spec = {}) {
    auto f = [&](double phi) {
        const cplx z = std::polar(1.0, phi);
        return std::pow(z, s + 1.5) * std::pow(1.0 + z, -2.0 * s - 3.0);
    };
    const double h = 1e-3;
    std::vector<double> brk;
    for (double w = 1.0; w > 4.0 * h; w *= 0.5) {
        brk.push_back(pi - h - w);
        brk.push_back(-pi + h + w);
    }
    const QuadResult q = integrate(f, -pi + h, pi - h, spec, brk);
    const cplx p2 = -2.0 * s - 2.0;
    const cplx tail = std::exp(p2 * std::log(h)) / p2 +
                      (2.0 * s + 3.0) / 24.0 * std::exp((p2 + 2.0) * std::log(h)) / (p2 + 2.0);
    return (q.value + 2.0 * tail) / (2.0 * pi);
}

/// Relative deviation between transform_closed and the product assembled
/// from the per-axis factors. The eps3 factor turns every later exponent
/// into a function of t_eff = (theta+1)/2, and the leftover contour power
/// is Xi(lambda + nu - t_eff). The assembled product equals the closed
/// form identically through the duplication and reflection formulas, so
/// the deviation measures implementation error only.
inline double assembly_deviation(const MellinPoint& p) {
    if (!in_region_d(p)) throw RegionError("assembly_deviation: point outside region D");
    const cplx l = p.lambda, n = p.nu, t = p.theta;
    const cplx t_eff = 0.5 * (t + 1.0);
    const cplx zfac = -std::exp((1.0 - t) * std::log(2.0 * pi)) * specfun::zeta_half(t) /
                      std::sin(0.5 * pi * t);
    const cplx gfac = specfun::gamma_complex(1.0 - l) * specfun::gamma_complex(l - t_eff + 1.5) *
                      specfun::gamma_complex(1.0 - n) * specfun::gamma_complex(n) *
                      detail::rgamma(2.5 - t_eff);
    const cplx assembled = zfac * gfac * xi_closed(l + n - t_eff);
    const cplx closed = transform_closed(p);
    return std::abs(assembled - closed) / std::abs(closed);
}

/// Residue of the closed transform at the zeta pole theta = 1 (the
/// zero-temperature limit), in closed form:
///   -(1/pi) G(1-l) G(l+1/2) G(1-n) G(n) G(-n-l) / (4^{n+l} G(1/2-l-n)).
inline cplx residue_theta1(cplx lambda, cplx nu) {
    const cplx l = lambda, n = nu;
    return -(1.0 / pi) * specfun::gamma_complex(1.0 - l) * specfun::gamma_complex(l + 0.5) *
           specfun::gamma_complex(1.0 - n) * specfun::gamma_complex(n) *
           specfun::gamma_complex(-n - l) * detail::rgamma(0.5 - l - n) *
           std::exp(-(n + l) * std::log(4.0));
}

/// Truncation box and node density for the numeric forward transform.
/// Axis bounds live in t = log(eps); they default to the decay exponents
/// of the integrand inside region D.
struct SamplingPlan {
    double t_lo[3] = {0, 0, 0};  // order: eps1, eps2, eps3
    double t_hi[3] = {0, 0, 0};
    double pts_per_unit = 3.0;
    double contour_log_vmin = -32.0;  // log of smallest resolved pi/2 - ka
    double contour_pts_per_unit = 6.0;
    double tail_eps = 3e-5;
};

/// Default plan for a region-D point: each tail is truncated where the
/// known power-law decay has fallen below tail_eps.
///
/// The binding constraints are usually not single axes but the two joint
/// corners: eps1 -> 0 with eps3 ~ eps1^{-1/2} and eps2 -> 0 (mass decays
/// like eps1 to the power (g3/2-g1) - g2 - 1/2 per unit of log eps1), and
/// eps1 -> infinity with eps3 ~ eps1^{-1/2} (rate 1 - (g3/2-g1)). Both
/// rates are exactly the margins to the two region-D edges, so box sizes
/// and cost blow up for near-boundary points.
inline SamplingPlan default_plan(const MellinPoint& p, double tail_eps = 3e-5) {
    const double g1 = std::real(p.lambda);
    const double g2 = std::real(p.nu);
    const double g3 = std::real(p.theta);
    const double K = std::log(1.0 / tail_eps);
    SamplingPlan plan;
    plan.tail_eps = tail_eps;
    const double corner_lo = (0.5 * g3 - g1) - g2 - 0.5;
    const double corner_hi = 1.0 - (0.5 * g3 - g1);
    const double r1lo = std::min(1.0 - g1, corner_lo);
    const double r1hi = std::min(g1 + 0.5, corner_hi);
    const double r2lo = std::min(0.5 - g2, corner_lo);
    const double r2hi = g2;
    const double r3lo = std::min(2.0 - g3, corner_hi);
    const double r3hi = std::min(g3 - 1.0, corner_lo);
    const double rates[3][2] = {{r1lo, r1hi}, {r2lo, r2hi}, {r3lo, r3hi}};
    for (int axis = 0; axis < 3; ++axis) {
        plan.t_lo[axis] = -K / rates[axis][0];
        plan.t_hi[axis] = K / rates[axis][1];
    }
    // resolve every momentum scale present in the box: sqrt(eps1),
    // sqrt(eps2) and 1/eps3, with three decades of margin
    plan.contour_log_vmin = std::min({0.5 * plan.t_lo[0], 0.5 * plan.t_lo[1],
                                      -plan.t_hi[2]}) - 7.0;
    return plan;
}

struct ForwardResult {
    cplx value{};
    double tail_estimate = 0.0;
};

namespace detail {

struct Axis {
    std::vector<double> t;
    std::vector<double> w;
};

// composite 8-point Gauss-Legendre on [lo, hi]
inline Axis composite_gl(double lo, double hi, double pts_per_unit) {
    static const double x8[4] = {0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double w8[4] = {0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    Axis ax;
    const int npanel = std::max(1, static_cast<int>(std::ceil((hi - lo) * pts_per_unit / 8.0)));
    const double h = (hi - lo) / npanel;
    for (int p = 0; p < npanel; ++p) {
        const double c = lo + (p + 0.5) * h;
        for (int i = 3; i >= 0; --i) {
            ax.t.push_back(c - 0.5 * h * x8[i]);
            ax.w.push_back(0.5 * h * w8[i]);
        }
        for (int i = 0; i < 4; ++i) {
            ax.t.push_back(c + 0.5 * h * x8[i]);
            ax.w.push_back(0.5 * h * w8[i]);
        }
    }
    return ax;
}

}  // namespace detail

/// Numeric triple Mellin transform of the interband integral: a
/// tensor-product quadrature of I(e1,e2,e3) e2^{-nu} e1^{-lambda}
/// e3^{-theta} over the truncated box, with I evaluated through the same
/// unit-circle integrand as interband_integral on a shared log-spaced
/// momentum rule. Coarse validation oracle; the per-factor sums are
/// reassociated but identical to the naive triple loop.
///
/// Requires p strictly inside region D; the region inequalities already
/// give Re(theta) - 2 Re(lambda) > 1, which keeps the box integral
/// absolutely convergent through the gapless corner eps1 -> 0,
/// eps3 -> infinity.
inline ForwardResult forward_numeric(const MellinPoint& p, const SamplingPlan& plan) {
    if (!in_region_d(p)) throw RegionError("forward_numeric: point outside region D");

    const detail::Axis a1 = detail::composite_gl(plan.t_lo[0], plan.t_hi[0], plan.pts_per_unit);
    const detail::Axis a2 = detail::composite_gl(plan.t_lo[1], plan.t_hi[1], plan.pts_per_unit);
    const detail::Axis a3 = detail::composite_gl(plan.t_lo[2], plan.t_hi[2], plan.pts_per_unit);
    const detail::Axis au = detail::composite_gl(plan.contour_log_vmin, std::log(0.5 * pi),
                                                 plan.contour_pts_per_unit);

    const std::size_t n1 = a1.t.size(), n2 = a2.t.size(), n3 = a3.t.size(), nq = au.t.size();

    // momentum rule: v = pi/2 - ka, r = 4 sin^2 v, node weight w * v from dv = v dw
    std::vector<double> rq(nq), vwq(nq);
    for (std::size_t q = 0; q < nq; ++q) {
        const double v = std::exp(au.t[q]);
        const double sv = std::sin(v);
        rq[q] = 4.0 * sv * sv;
        vwq[q] = au.w[q] * v;
    }

    // eps2 sum is independent of (eps1, eps3): B(q) = sum_j W2_j e2_j^{1-nu} / (e2_j + r_q)
    std::vector<cplx> B(nq, cplx{});
    for (std::size_t j = 0; j < n2; ++j) {
        const double e2 = std::exp(a2.t[j]);
        const cplx wj = a2.w[j] * std::exp((1.0 - p.nu) * a2.t[j]);
        for (std::size_t q = 0; q < nq; ++q) B[q] += wj / (e2 + rq[q]);
    }
    for (std::size_t q = 0; q < nq; ++q) B[q] *= vwq[q];

    std::vector<cplx> A1(n1);
    for (std::size_t i = 0; i < n1; ++i)
        A1[i] = a1.w[i] * std::exp((1.0 - p.lambda) * a1.t[i]);
    std::vector<double> e1(n1);
    for (std::size_t i = 0; i < n1; ++i) e1[i] = std::exp(a1.t[i]);

    cplx total{};
    for (std::size_t k = 0; k < n3; ++k) {
        const double e3 = std::exp(a3.t[k]);
        const cplx A3 = a3.w[k] * std::exp((1.0 - p.theta) * a3.t[k]);
        cplx slice{};
        for (std::size_t i = 0; i < n1; ++i) {
            cplx acc{};
            for (std::size_t q = 0; q < nq; ++q) {
                const double u = e1[i] + rq[q];
                const double su = std::sqrt(u);
                const double T = -std::tanh(0.5 * e3 * su) / (u * su);
                acc += T * B[q];
            }
            slice += A1[i] * acc;
        }
        total += A3 * slice;
    }
    total *= 2.0 / pi;

    ForwardResult out;
    out.value = total;
    out.tail_estimate = 6.0 * plan.tail_eps * std::abs(total);  // truncation by construction
    return out;
}

}  // namespace mellin
}  // namespace sshcond

#endif

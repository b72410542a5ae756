#ifndef SSHCOND_ORACLE_HPP
#define SSHCOND_ORACLE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "sshcond/model.hpp"
#include "sshcond/quadrature.hpp"
#include "sshcond/types.hpp"

namespace sshcond {
namespace oracle {

/// f(e) - f(-e) evaluated without cancellation: -tanh(beta e / 2).
inline double occupancy_difference(double energy, double beta) {
    if (std::isinf(beta)) return energy > 0.0 ? -1.0 : (energy < 0.0 ? 1.0 : 0.0);
    return -std::tanh(0.5 * beta * energy);
}

namespace detail {

// Breakpoints around the momentum u* where 4 eps_+(u)^2 = omega^2; the
// integrand has a Lorentzian peak of width ~1/(tau * bandwidth) there.
inline std::vector<double> resonance_breakpoints(const ModelParams& p, double omega,
                                                 double hi) {
    std::vector<double> brk;
    const double gap = p.g0 - p.g1;
    const double c2 = (omega * omega - 4.0 * gap * gap) / (16.0 * p.g0 * p.g1);
    if (c2 < 0.0 || c2 > 1.0) return brk;
    const double ustar = std::acos(std::sqrt(c2));
    brk.push_back(ustar);
    for (double w = 1e-4; w < 0.8; w *= 4.0) {
        brk.push_back(ustar - w);
        brk.push_back(ustar + w);
    }
    std::erase_if(brk, [hi](double x) { return x <= 0.0 || x >= hi; });
    return brk;
}

inline void reject_path_pole(const ModelParams& p, double omega) {
    const double lo = 2.0 * (p.g0 - p.g1), hi = 2.0 * (p.g0 + p.g1);
    if (p.tau_inv == 0.0 && std::abs(omega) >= lo && std::abs(omega) <= hi)
        throw PoleError("tau_inv = 0 with omega inside the interband range puts a pole "
                        "on the integration path");
}

}  // namespace detail

/// Interband conductivity, units 2*sigma0*a, by adaptive quadrature of
/// the zone integral
///   i (2 sigma0 / pi) a^2 (g0^2-g1^2)^2 (w) int_0^{pi/a}
///     [f(e+) - f(e-)] / ((4 e+^2 - w^2) e+^3) dk,   w = omega + i/tau.
/// The integrand is symmetric about ka = pi/2, so half the zone is
/// integrated and doubled. beta = beta_infinity selects the T = 0
/// occupancy difference -1.
inline QuadResult sigma_interband_bz(const ModelParams& p, double omega,
                                     const QuadratureSpec& spec = {}) {
    p.validate();
    if (p.metallic()) return QuadResult{cplx{0.0, 0.0}, 0.0, true, 0};
    detail::reject_path_pole(p, omega);

    const cplx w{omega, p.tau_inv};
    const cplx w2 = w * w;
    const double gap = p.g0 - p.g1;
    const double gap2 = gap * gap;
    const double fourgg = 4.0 * p.g0 * p.g1;
    auto f = [&](double u) -> cplx {
        const double c = std::cos(u);
        const double e2 = gap2 + fourgg * c * c;
        const double e = std::sqrt(e2);
        const double occ = occupancy_difference(e, p.beta);
        return occ / ((4.0 * e2 - w2) * (e2 * e));
    };
    QuadResult q = integrate(f, 0.0, 0.5 * pi, spec,
                             detail::resonance_breakpoints(p, omega, 0.5 * pi));
    const double gsq = p.g0 * p.g0 - p.g1 * p.g1;
    const cplx pref = cplx{0.0, 2.0 / pi} * gsq * gsq * w;
    q.value *= pref;
    q.error_estimate *= std::abs(pref);
    return q;
}

/// The nondimensional unit-circle integral
///   I = (1/2 pi i) oint [f(z;e1,e3) - f(z;e1,-e3)]
///        / ((e1 + r)^{3/2} (e2 + r)) dz/z,   r(z) = (z+1)^2/z,
/// reduced on |z| = 1 (z = e^{2 i k a}) to a real integral with
/// r = 4 cos^2(ka), again folded onto ka in [0, pi/2].
inline QuadResult interband_integral(const EpsilonTriple& eps, const QuadratureSpec& spec = {}) {
    if (!(eps.eps1 >= 0.0)) throw std::invalid_argument("interband_integral: eps1 < 0");
    if (eps.eps1 == 0.0)
        throw DegeneracyError("interband_integral: eps1 = 0 makes the endpoint "
                              "non-integrable (metallic point)");
    if (std::imag(eps.eps2) == 0.0 && std::real(eps.eps2) >= -4.0 && std::real(eps.eps2) <= 0.0)
        throw PoleError("interband_integral: eps2 on [-4, 0] puts a pole on the path");

    auto f = [&](double x) -> cplx {
        const double c = std::cos(x);
        const double r = 4.0 * c * c;
        const double u = eps.eps1 + r;
        const double su = std::sqrt(u);
        const double occ = std::isinf(eps.eps3) ? -1.0 : -std::tanh(0.5 * eps.eps3 * su);
        return occ / (u * su * (eps.eps2 + r));
    };
    std::vector<double> brk;
    const double rstar = -std::real(eps.eps2);
    if (rstar >= 0.0 && rstar <= 4.0) {
        const double xstar = std::acos(0.5 * std::sqrt(rstar));
        for (double w = 0.0; w < 0.8; w = (w == 0.0 ? 1e-4 : w * 4.0)) {
            if (xstar - w > 0.0 && xstar - w < 0.5 * pi) brk.push_back(xstar - w);
            if (w > 0.0 && xstar + w < 0.5 * pi) brk.push_back(xstar + w);
        }
    }
    QuadResult q = integrate(f, 0.0, 0.5 * pi, spec, brk);
    q.value *= 2.0 / pi;
    q.error_estimate *= 2.0 / pi;
    return q;
}

/// Algebraic map from the nondimensional integral to the conductivity:
/// sigma/(2 sigma0 a) = (i/4) (omega + i/tau) (g0^2-g1^2)^2 (g0 g1)^{-5/2} I.
inline cplx sigma_from_integral(const ModelParams& p, double omega, cplx integral_value) {
    const double gsq = p.g0 * p.g0 - p.g1 * p.g1;
    if (gsq == 0.0) return cplx{0.0, 0.0};
    const cplx w{omega, p.tau_inv};
    return cplx{0.0, 0.25} * w * gsq * gsq * std::pow(p.g0 * p.g1, -2.5) * integral_value;
}

/// Finite-temperature correction sigma(beta) - sigma(T=0), units 2*sigma0*a,
/// computed from its own integral so the exponentially small difference
/// never passes through a floating-point subtraction:
///   (4i/pi) (g0^2-g1^2)^2 w int_0^{pi/2} q(beta e) / ((4e^2 - w^2) e^3) du,
/// q(x) = e^{-x}/(1 + e^{-x}).
inline QuadResult sigma_thermal_correction(const ModelParams& p, double omega,
                                           const QuadratureSpec& spec = {}) {
    p.validate();
    if (p.metallic() || std::isinf(p.beta)) return QuadResult{cplx{0.0, 0.0}, 0.0, true, 0};
    detail::reject_path_pole(p, omega);

    const cplx w{omega, p.tau_inv};
    const cplx w2 = w * w;
    const double gap = p.g0 - p.g1;
    const double gap2 = gap * gap;
    const double fourgg = 4.0 * p.g0 * p.g1;
    auto f = [&](double u) -> cplx {
        const double c = std::cos(u);
        const double e2 = gap2 + fourgg * c * c;
        const double e = std::sqrt(e2);
        const double q = std::exp(-p.beta * e);
        return (q / (1.0 + q)) / ((4.0 * e2 - w2) * (e2 * e));
    };
    // The surviving weight hugs the band minimum at u = pi/2 with width
    // ~sqrt(gap / (2 beta g0 g1)); seed panels there.
    std::vector<double> brk = detail::resonance_breakpoints(p, omega, 0.5 * pi);
    const double vstar = std::sqrt(gap / (2.0 * p.beta * p.g0 * p.g1));
    for (double m = 1.0; m <= 64.0; m *= 4.0) {
        const double x = 0.5 * pi - m * vstar;
        if (x > 0.0) brk.push_back(x);
    }
    QuadResult q = integrate(f, 0.0, 0.5 * pi, spec, brk);
    const double gsq = p.g0 * p.g0 - p.g1 * p.g1;
    const cplx pref = cplx{0.0, 4.0 / pi} * gsq * gsq * w;
    q.value *= pref;
    q.error_estimate *= std::abs(pref);
    return q;
}

}  // namespace oracle
}  // namespace sshcond

#endif

#ifndef SSHCOND_BOUNDS_HPP
#define SSHCOND_BOUNDS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "sshcond/model.hpp"
#include "sshcond/oracle.hpp"
#include "sshcond/types.hpp"

namespace sshcond {
namespace bounds {

/// Piecewise profile entering the low-temperature estimate:
///   R(xi) = 2 xi / (xi^2 + 1) for 0 <= xi < 1, else 1.
/// Value and slope match at xi = 1, so the profile is C^1 on [0, inf).
inline double bound_profile(double xi) {
    if (!(xi >= 0.0)) throw std::invalid_argument("bound_profile: xi must be >= 0");
    if (xi < 1.0) return 2.0 * xi / (xi * xi + 1.0);
    return 1.0;
}

/// Upper bound on |sigma(beta) - sigma(T=0)| / (2 sigma0 a) for real omega:
///   c ((g0+g1)^2 tau / sqrt(g0 g1)) (sqrt(e1-e2)/sqrt(e1))
///     R(2 tau sqrt(g0 g1) sqrt(e1)) e^{-e3 sqrt(e1)}
/// with sqrt(e1-e2) read off |omega + i/tau| = 2 sqrt(g0 g1) sqrt(e1-e2).
/// c is an undetermined O(1) constant supplied by the caller (see
/// calibrate_bound_constant).
inline double correction_bound(const ModelParams& p, double omega, double c) {
    p.validate();
    if (!(c > 0.0)) throw std::invalid_argument("correction_bound: c must be > 0");
    if (std::isinf(p.beta)) return 0.0;
    if (!(p.tau_inv > 0.0))
        throw std::invalid_argument("correction_bound: needs a finite relaxation time");
    const double gg = p.g0 * p.g1;
    const double sgg = std::sqrt(gg);
    const EpsilonTriple e = epsilon_params(p, omega);
    if (e.eps1 == 0.0) return 0.0;  // the prefactor (g0^2-g1^2)^2 vanishes with the gap
    const double sqrt_e1 = std::sqrt(e.eps1);
    const double tau = 1.0 / p.tau_inv;
    const double sqrt_e1me2 = std::hypot(omega, p.tau_inv) / (2.0 * sgg);
    const double sum2 = (p.g0 + p.g1) * (p.g0 + p.g1);
    return c * sum2 * tau / sgg * (sqrt_e1me2 / sqrt_e1) *
           bound_profile(2.0 * tau * sgg * sqrt_e1) * std::exp(-e.eps3 * sqrt_e1);
}

struct RegimeThresholds {
    double eps1_threshold = 1.0;
    double decay_threshold = 10.0;
};

struct RegimeReport {
    double eps1 = 0.0;
    double eps3_sqrt_eps1 = 0.0;
    double bound_value = 0.0;  // correction bound at the small-gap resonance, c = 1
    bool regime_ok = false;
    std::string notes;
};

/// Checks the validity conditions of the zero-temperature asymptote:
/// eps1 below threshold and eps3 sqrt(eps1) above the decay threshold.
inline RegimeReport regime_diagnostics(const ModelParams& p,
                                       const RegimeThresholds& thr = {}) {
    p.validate();
    RegimeReport rep;
    const EpsilonTriple e = epsilon_params(p, 0.0);
    rep.eps1 = e.eps1;
    rep.eps3_sqrt_eps1 = e.eps3 * std::sqrt(e.eps1);
    const bool small_gap = e.eps1 < thr.eps1_threshold;
    const bool cold = rep.eps3_sqrt_eps1 > thr.decay_threshold;
    rep.regime_ok = small_gap && cold;
    const double omega_res = 2.0 * (p.g0 - p.g1);
    if (p.tau_inv > 0.0 && !std::isinf(p.beta) && !p.metallic())
        rep.bound_value = correction_bound(p, omega_res, 1.0);
    if (rep.regime_ok) {
        rep.notes = "within the low-temperature small-gap regime";
    } else {
        rep.notes.clear();
        if (!small_gap) rep.notes += "eps1 not small: gap expansion unreliable";
        if (!cold) {
            if (!rep.notes.empty()) rep.notes += "; ";
            rep.notes += "eps3*sqrt(eps1) not large: thermal correction not negligible";
        }
    }
    return rep;
}

/// Smallest power-of-two multiplier c such that the bound dominates the
/// measured correction on the supplied calibration grid.
inline double calibrate_bound_constant(const std::vector<ModelParams>& presets,
                                       const std::vector<double>& omegas,
                                       const QuadratureSpec& spec = {}) {
    double worst = 0.0;
    for (const ModelParams& p : presets) {
        for (double w : omegas) {
            const double bound1 = correction_bound(p, w, 1.0);
            if (bound1 == 0.0) continue;
            const double measured = std::abs(oracle::sigma_thermal_correction(p, w, spec).value);
            worst = std::max(worst, measured / bound1);
        }
    }
    double c = 1.0;
    while (c < worst) c *= 2.0;
    return c;
}

}  // namespace bounds
}  // namespace sshcond

#endif

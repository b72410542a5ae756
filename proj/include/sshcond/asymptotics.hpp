#ifndef SSHCOND_ASYMPTOTICS_HPP
#define SSHCOND_ASYMPTOTICS_HPP

#include <cmath>
#include <complex>

#include "sshcond/model.hpp"
#include "sshcond/oracle.hpp"
#include "sshcond/specfun.hpp"
#include "sshcond/types.hpp"

namespace sshcond {
namespace asym {

/// The three residue contributions to the zero-temperature integral and
/// their sum. total = i0 + i1 + i2 by construction.
struct AsymptoticTerms {
    cplx i0{}, i1{}, i2{};
    cplx total{};
};

/// Leading small-gap term
///   -(1/pi) (e1 e2)^{-1} { 1 - (e1/3e2) 2F1(3/2,1;5/2; 1 - e1/e2) }.
inline cplx term0(double eps1, cplx eps2) {
    if (!(eps1 > 0.0)) throw DegeneracyError("term0: eps1 must be > 0");
    if (eps2 == 0.0) throw PoleError("term0: eps2 = 0");
    const cplx ratio = eps1 / eps2;
    const cplx F = specfun::hyp2f1_threehalf(1.0 - ratio);
    return -(1.0 / pi) / (eps1 * eps2) * (1.0 - ratio / 3.0 * F);
}

/// First subleading term -(1/24 pi) e2^{-1} 2F1(3/2,1;5/2; 1 - e1/e2).
inline cplx term1(double eps1, cplx eps2) {
    if (!(eps1 > 0.0)) throw DegeneracyError("term1: eps1 must be > 0");
    if (eps2 == 0.0) throw PoleError("term1: eps2 = 0");
    return -(1.0 / (24.0 * pi)) / eps2 * specfun::hyp2f1_threehalf(1.0 - eps1 / eps2);
}

namespace detail {

// term2's displayed form cancels to roughly |8/e2| parts in one near the
// origin; below |e2| = 1/2 it is re-summed from the residues right of the
// inversion line (double poles at nu = 1, 2, ...):
//   (1/(8 pi^{3/2})) e2^{-1} sum_{n>=1} (-1)^{n+1} (e2/4)^n G(n+3/2)/(n+1)!
//     [log(e2/4) - psi(n+2) + psi(n+3/2)]
inline cplx term2_small(cplx eps2) {
    const cplx L = std::log(eps2 / 4.0);
    const double euler = 0.5772156649015328606;
    double psi_int = 1.0 - euler;          // psi(2)
    double psi_half = 2.0 - euler - 2.0 * std::log(2.0);  // psi(3/2)
    double gamma_ratio = 0.75 * std::sqrt(pi) / 2.0;      // G(5/2)/2!
    cplx sum{};
    cplx pw = eps2 / 4.0;
    double sign = 1.0;
    for (int n = 1; n < 60; ++n) {
        psi_int += 1.0 / (n + 1.0);   // psi(n+2)
        psi_half += 1.0 / (n + 0.5);  // psi(n+3/2)
        const cplx inc = sign * pw * gamma_ratio * (L - psi_int + psi_half);
        sum += inc;
        if (std::abs(inc) < 1e-18 * std::abs(sum) && n > 3) break;
        pw *= eps2 / 4.0;
        sign = -sign;
        gamma_ratio *= (n + 1.5) / (n + 2.0);
    }
    return sum / (8.0 * pi * std::sqrt(pi) * eps2);
}

}  // namespace detail

/// Large-gap term
///   (1/16 pi) e2^{-1} { (8/e2 - 1) log(16/e2) + 1 - (8/e2)^2 2F1(1,1;3/2; -4/e2) }.
/// Its 2F1 argument hits the branch point at e2 = -4, the upper band-edge
/// resonance.
inline cplx term2(cplx eps2) {
    if (eps2 == 0.0) throw PoleError("term2: eps2 = 0");
    if (std::abs(eps2 + 4.0) < 1e-12)
        throw BranchCutError("term2: branch point at eps2 = -4");
    if (std::abs(eps2) < 0.5) return detail::term2_small(eps2);
    const cplx t = 8.0 / eps2;
    const cplx F = specfun::hyp2f1_onehalfth(-4.0 / eps2);
    return (1.0 / (16.0 * pi)) / eps2 *
           ((t - 1.0) * std::log(16.0 / eps2) + 1.0 - t * t * F);
}

/// Zero-temperature asymptotics of the interband integral, assembled from
/// the three residue terms. Intended for eps1 << 1; evaluation is exact in
/// the formulas regardless.
inline AsymptoticTerms zero_temperature(double eps1, cplx eps2) {
    AsymptoticTerms out;
    out.i0 = term0(eps1, eps2);
    out.i1 = term1(eps1, eps2);
    out.i2 = term2(eps2);
    out.total = out.i0 + out.i1 + out.i2;
    return out;
}

/// Compact two-line form of the same asymptote. The first line is an
/// algebraic restatement of term0; the second reproduces term2 except for
/// dropping its -log(16/e2) piece; term1 is dropped entirely, so the two
/// routes differ by O(eps1) relative away from the resonances.
inline cplx zero_temperature_compact(double eps1, cplx eps2) {
    if (!(eps1 > 0.0)) throw DegeneracyError("zero_temperature_compact: eps1 must be > 0");
    if (eps2 == 0.0) throw PoleError("zero_temperature_compact: eps2 = 0");
    const cplx ratio = eps1 / eps2;
    cplx line1;
    if (std::abs(1.0 - ratio) < 1e-8) {
        line1 = term0(eps1, eps2);  // removable 0/0 at e2 = e1
    } else {
        const cplx q = eps2 / eps1;
        const cplx root = std::sqrt(1.0 - ratio);
        line1 = -(1.0 / pi) / (eps1 * eps2) / (1.0 - ratio) *
                (1.0 - ratio / root * std::log(std::sqrt(q) + std::sqrt(q - 1.0)));
    }
    const cplx t = 8.0 / eps2;
    const cplx F = specfun::hyp2f1_onehalfth(-4.0 / eps2);
    const cplx line2 =
        -(1.0 / (16.0 * pi)) / eps2 * (-1.0 + t * t * F - t * std::log(16.0 / eps2));
    return line1 + line2;
}

enum class Regime { gap_dominated, damping_dominated };

struct ResonanceLimit {
    cplx sigma{};      // units 2*sigma0*a
    bool regime_ok = true;  // preconditions satisfied; warning flag otherwise
};

/// Near-resonance limit of the conductivity, with the regime-specific
/// simplified radical
///   gap_dominated:     4(g0-g1)^2 - omega^2 - 2 i omega/tau
///   damping_dominated: 1/tau^2 - 2 i omega/tau
/// and sigma/(2 sigma0 a) = C (g0+g1)^2/sqrt(g0 g1) / sqrt(radical).
/// The prefactor differs between the regimes: C = -i/2 in the
/// gap-dominated limit (from I ~ -(1/2) e1^{-3/2} e2^{-1/2}) and
/// C = 1/pi in the damping-dominated limit (from I ~ -(1/pi)/(e1 e2)).
inline ResonanceLimit resonance_limit(const ModelParams& p, double omega, Regime regime) {
    p.validate();
    ResonanceLimit out;
    const double gap = p.g0 - p.g1;
    if (p.metallic() && regime == Regime::gap_dominated) {
        // zero-gap degenerate case: fall back to the damping form, flagged
        regime = Regime::damping_dominated;
        out.regime_ok = false;
    }
    cplx radical, coeff;
    if (regime == Regime::gap_dominated) {
        radical = cplx{4.0 * gap * gap - omega * omega, -2.0 * omega * p.tau_inv};
        coeff = cplx{0.0, -0.5};
    } else {
        radical = cplx{p.tau_inv * p.tau_inv, -2.0 * omega * p.tau_inv};
        coeff = cplx{1.0 / pi, 0.0};
    }
    const double gg = p.g0 * p.g1;
    const double sum2 = (p.g0 + p.g1) * (p.g0 + p.g1);
    out.sigma = coeff * sum2 / std::sqrt(gg) / std::sqrt(radical);

    const EpsilonTriple e = epsilon_params(p, omega);
    const double m2 = std::abs(e.eps2);
    if (regime == Regime::gap_dominated) {
        if (!(10.0 * m2 <= e.eps1 && 10.0 * e.eps1 <= 1.0)) out.regime_ok = false;
    } else {
        if (!(10.0 * e.eps1 <= m2 && 10.0 * m2 <= 1.0)) out.regime_ok = false;
    }
    return out;
}

/// Conductivity from the zero-temperature asymptote, units 2*sigma0*a.
inline cplx sigma_zero_temperature(const ModelParams& p, double omega) {
    if (p.metallic()) return cplx{0.0, 0.0};
    const EpsilonTriple e = epsilon_params(p, omega);
    return oracle::sigma_from_integral(p, omega, zero_temperature(e.eps1, e.eps2).total);
}

}  // namespace asym
}  // namespace sshcond

#endif

#ifndef SSHCOND_SPECFUN_HPP
#define SSHCOND_SPECFUN_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sshcond/types.hpp"

namespace sshcond {
namespace specfun {

namespace detail {

inline bool near_nonpositive_integer(cplx z, double tol = 1e-13) {
    const double re = std::round(std::real(z));
    if (re > 0.5) return false;
    return std::abs(z - cplx{re, 0.0}) < tol;
}

// Lanczos g = 7, 9 terms. Relative accuracy ~1e-14 for moderate |z|.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};

inline cplx gamma_lanczos_half_plane(cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    cplx x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    const cplx t = z + lanczos_g + 0.5;
    const double sqrt_two_pi = 2.5066282746310005024;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace detail

/// Complex Gamma via Lanczos, reflected into Re z < 1/2.
inline cplx gamma_complex(cplx z) {
    if (detail::near_nonpositive_integer(z))
        throw PoleError("Gamma pole at z = " + std::to_string(std::real(z)));
    if (std::real(z) < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return pi / (std::sin(pi * z) * detail::gamma_lanczos_half_plane(1.0 - z));
    }
    return detail::gamma_lanczos_half_plane(z);
}

namespace detail {

// Chebyshev-weighted coefficients for the accelerated alternating series
// (P. Borwein). With n = 50 the truncation error is far below double
// precision for the strip we use, Re s in (0, 2] with |Im s| up to ~20.
inline const std::vector<double>& borwein_d() {
    static const std::vector<double> d = [] {
        const int n = 50;
        std::vector<double> v(n + 1);
        double t = 1.0 / n;  // i = 0 term of the defining sum
        v[0] = 1.0;          // n * t
        for (int i = 1; i <= n; ++i) {
            t *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
            v[i] = v[i - 1] + n * t;
        }
        return v;
    }();
    return d;
}

}  // namespace detail

/// Riemann zeta on Re theta > 0 through the eta series,
/// zeta = eta(theta) / (1 - 2^{1-theta}), with the alternating sum
/// accelerated by Chebyshev weighting. Near theta = 1 the denominator is
/// summed as an expm1-style series so the simple pole stays well
/// conditioned.
inline cplx zeta_complex(cplx theta) {
    if (!(std::real(theta) > 0.0))
        throw RegionError("zeta_complex requires Re theta > 0");
    if (std::abs(theta - 1.0) < 1e-12) throw PoleError("zeta pole at theta = 1");
    const auto& d = detail::borwein_d();
    const int n = static_cast<int>(d.size()) - 1;
    cplx sum{};
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += sign * (d[k] - d[n]) * std::exp(-theta * std::log(k + 1.0));
        sign = -sign;
    }
    const cplx eta = -sum / d[n];
    // 1 - 2^{1-theta} = -expm1((1-theta) ln 2)
    const cplx u = (1.0 - theta) * std::log(2.0);
    cplx one_minus_pow;
    if (std::abs(u) < 0.5) {
        // expm1 for complex argument via exp, accurate enough since |u| small
        // only matters near theta = 1 where u -> 0; use the series there.
        cplx acc = u;
        cplx term = u;
        for (int m = 2; m < 24; ++m) {
            term *= u / static_cast<double>(m);
            acc += term;
        }
        one_minus_pow = -acc;
    } else {
        one_minus_pow = 1.0 - std::exp(u);
    }
    return eta / one_minus_pow;
}

/// Generalized zeta at half argument shift: zeta(theta, 1/2) = (2^theta - 1) zeta(theta).
/// The simple pole at theta = 1 has residue (2 - 1) * 1 = 1.
inline cplx zeta_half(cplx theta) {
    const cplx pow2 = std::exp(theta * std::log(2.0));
    return (pow2 - 1.0) * zeta_complex(theta);
}

namespace detail {

inline void require_off_cut(cplx z, const char* who) {
    if (std::imag(z) == 0.0 && std::real(z) >= 1.0)
        throw BranchCutError(std::string(who) + ": argument on the cut [1, inf)");
}

}  // namespace detail

/// 2F1(3/2, 1; 5/2; z) = (3/z) (z^{-1/2} log((1+sqrt z)/sqrt(1-z)) - 1).
/// Principal branches; series 1 + 3z/5 + 3z^2/7 + ... near the origin.
inline cplx hyp2f1_threehalf(cplx z) {
    detail::require_off_cut(z, "hyp2f1_threehalf");
    if (std::abs(z) < 0.35) {
        cplx sum = 1.0;
        cplx zn = 1.0;
        for (int n = 1; n < 80; ++n) {
            zn *= z;
            const cplx term = 3.0 * zn / (2.0 * n + 3.0);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const cplx w = std::sqrt(z);
    const cplx L = std::log((1.0 + w) / std::sqrt(1.0 - z));
    return (3.0 / z) * (L / w - 1.0);
}

/// 2F1(1, 1; 3/2; z) = (1-z)^{-1/2} asin(sqrt z)/sqrt z. For negative real
/// z the principal branches reproduce (1-z)^{-1/2} asinh(sqrt(-z))/sqrt(-z).
/// The branch point z = 1 carries the large-bandgap resonance.
inline cplx hyp2f1_onehalfth(cplx z) {
    detail::require_off_cut(z, "hyp2f1_onehalfth");
    if (std::abs(z) < 0.35) {
        cplx sum = 1.0;
        cplx term = 1.0;
        for (int n = 1; n < 90; ++n) {
            term *= z * static_cast<double>(n) / (n + 0.5);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const cplx w = std::sqrt(z);
    return std::asin(w) / (w * std::sqrt(1.0 - z));
}

}  // namespace specfun
}  // namespace sshcond

#endif

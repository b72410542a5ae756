#ifndef SSHCOND_MODEL_HPP
#define SSHCOND_MODEL_HPP

#include <array>
#include <cmath>
#include <complex>

#include "sshcond/types.hpp"

namespace sshcond {

/// 2x2 complex matrix, row major.
struct Mat2 {
    cplx m00, m01, m10, m11;

    std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const {
        return {m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]};
    }
};

struct BlochState {
    double k = 0.0;
    int band = +1;  // +1 upper, -1 lower
    double energy = 0.0;
    std::array<cplx, 2> eigenvector{};
};

/// Reduce a momentum to the fundamental zone [0, pi/a).
inline double reduce_to_zone(double k, double a) {
    const double b = pi / a;
    double r = std::fmod(k, b);
    if (r < 0.0) r += b;
    if (r >= b) r = 0.0;  // guard against fmod rounding at the edge
    return r;
}

namespace detail {

inline void require_in_zone(const ModelParams& p, double k) {
    if (!(k >= 0.0 && k < pi / p.a))
        throw std::domain_error("momentum outside [0, pi/a); reduce it first");
}

inline int require_sign(int s) {
    if (s != +1 && s != -1) throw std::invalid_argument("band sign must be +1 or -1");
    return s;
}

}  // namespace detail

/// Band dispersion s * sqrt((g0-g1)^2 + 4 g0 g1 cos^2(ka)).
inline double band_energy(const ModelParams& p, double k, int s) {
    detail::require_in_zone(p, k);
    detail::require_sign(s);
    const double c = std::cos(k * p.a);
    const double gap = p.g0 - p.g1;
    return s * std::sqrt(gap * gap + 4.0 * p.g0 * p.g1 * c * c);
}

/// Off-diagonal Bloch amplitude F(k) = e^{ika} (g0 + g1 e^{-2ika}),
/// with the A-B offset fixed to a by the gauge choice.
inline cplx bloch_amplitude(const ModelParams& p, double k) {
    const cplx i{0.0, 1.0};
    return std::exp(i * (k * p.a)) * (p.g0 + p.g1 * std::exp(-2.0 * i * (k * p.a)));
}

/// Bloch Hamiltonian -[[0, F], [F*, 0]]; Hermitian with eigenvalues
/// band_energy(+-1).
inline Mat2 bloch_hamiltonian(const ModelParams& p, double k) {
    detail::require_in_zone(p, k);
    const cplx F = bloch_amplitude(p, k);
    return Mat2{0.0, -F, -std::conj(F), 0.0};
}

/// Normalized eigenvector (1, -s e^{-i chi})/sqrt(2), e^{i chi} = F/|F|.
inline std::array<cplx, 2> bloch_eigenvector(const ModelParams& p, double k, int s) {
    detail::require_in_zone(p, k);
    detail::require_sign(s);
    const cplx F = bloch_amplitude(p, k);
    const double absF = std::abs(F);
    if (absF < 1e-12 * (p.g0 + p.g1))
        throw DegeneracyError("eigenvector undefined at the metallic point |F(k)| = 0");
    const double inv_sqrt2 = 0.7071067811865475244;
    const cplx phase = std::conj(F) / absF;  // e^{-i chi}
    return {inv_sqrt2, -static_cast<double>(s) * inv_sqrt2 * phase};
}

inline BlochState bloch_state(const ModelParams& p, double k, int s) {
    return BlochState{k, s, band_energy(p, k, s), bloch_eigenvector(p, k, s)};
}

/// Interband velocity matrix element <+|dH/dk|-> = -i a (g0^2-g1^2)/eps_+(k).
/// Purely imaginary; units energy*length.
inline cplx velocity_matrix_element(const ModelParams& p, double k) {
    detail::require_in_zone(p, k);
    const double eps = band_energy(p, k, +1);
    if (eps < 1e-12 * (p.g0 + p.g1))
        throw DegeneracyError("velocity matrix element undefined at the metallic point");
    return cplx{0.0, -p.a * (p.g0 * p.g0 - p.g1 * p.g1) / eps};
}

/// Occupancy (e^{beta e} + 1)^{-1} at mu = 0. Uses the e^{-beta e} branch
/// for e > 0 so beta*e up to ~1e6 neither overflows nor loses the
/// complement identity f(e) + f(-e) = 1.
inline double fermi_dirac(double energy, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("fermi_dirac: beta must be > 0");
    if (std::isinf(beta))
        return energy > 0.0 ? 0.0 : (energy < 0.0 ? 1.0 : 0.5);
    const double x = beta * energy;
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

/// Map (params, omega) to the nondimensional triple. eps2 is built from
/// eps1 - (omega + i/tau)^2 / (4 g0 g1), which keeps eps2 - eps1 exact.
inline EpsilonTriple epsilon_params(const ModelParams& p, double omega) {
    const double gg = p.g0 * p.g1;
    if (!(gg > 0.0)) throw std::invalid_argument("epsilon_params: require g0 g1 > 0");
    EpsilonTriple e;
    const double gap = p.g0 - p.g1;
    e.eps1 = gap * gap / gg;
    const cplx w{omega, p.tau_inv};
    e.eps2 = e.eps1 - w * w / (4.0 * gg);
    e.eps3 = p.beta * std::sqrt(gg);
    return e;
}

}  // namespace sshcond

#endif

#ifndef SSHCOND_TYPES_HPP
#define SSHCOND_TYPES_HPP

#include <array>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace sshcond {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

/// beta value selecting the exact zero-temperature occupancy difference.
constexpr double beta_infinity = std::numeric_limits<double>::infinity();

// Raised when an operation is evaluated at the metallic point g0 = g1
// (or eps1 = 0), where the gap closes and eigenvectors are ill defined.
struct DegeneracyError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when an integrand has a pole on the integration path, or a
// closed-form factor is evaluated at one of its poles.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when dual Mellin variables lie outside the convergence region
// of the integral a closed form represents.
struct RegionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised on a hypergeometric branch cut or branch point.
struct BranchCutError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Physical inputs of the dimerized two-band chain, hbar = 1.
///
/// g0 is the intracell hopping, g1 the intercell hopping, both energies
/// with g0 >= g1 > 0. The fundamental cell has length 2a. tau_inv is the
/// phenomenological relaxation rate 1/tau; beta the inverse temperature
/// (beta_infinity selects T = 0). The chemical potential is pinned at 0
/// (half filling). The intracell offset between the two atoms is gauged
/// away and never enters any computed quantity, so it carries no field.
///
/// Conductivities are always returned in units of 2*sigma0*a, with
/// sigma0 = e^2/4 kept symbolic; the default a = 0.5 makes the lattice
/// constant 2a equal to one.
struct ModelParams {
    double g0 = 0.55;
    double g1 = 0.45;
    double a = 0.5;
    double tau_inv = 0.05;
    double beta = 1.0e3;
    double mu = 0.0;

    void validate() const {
        if (!(g0 >= g1 && g1 > 0.0))
            throw std::invalid_argument("ModelParams: require g0 >= g1 > 0");
        if (!(a > 0.0))
            throw std::invalid_argument("ModelParams: require a > 0");
        if (!(tau_inv >= 0.0))
            throw std::invalid_argument("ModelParams: require tau_inv >= 0");
        if (!(beta > 0.0))
            throw std::invalid_argument("ModelParams: require beta > 0");
        if (mu != 0.0)
            throw std::invalid_argument("ModelParams: mu is fixed at 0");
    }

    bool metallic() const { return g0 == g1; }
};

/// Nondimensional parameter triple:
///   eps1 = (g0-g1)^2/(g0 g1)                  gap-squared ratio
///   eps2 = eps1 - (omega + i/tau)^2/(4 g0 g1) complex detuning
///   eps3 = beta sqrt(g0 g1)                   inverse-temperature scale
struct EpsilonTriple {
    double eps1 = 0.0;
    cplx eps2{};
    double eps3 = 0.0;  // may be beta_infinity
};

/// Tolerances and subdivision limit shared by the adaptive quadratures.
struct QuadratureSpec {
    double rel_tol = 1.0e-10;
    double abs_tol = 1.0e-13;
    int max_subdivisions = 2000;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: invalid tolerances");
    }
};

/// One frequency sample of a sweep. Conductivities are in units 2*sigma0*a.
/// rel_deviation is normalized by the sweep-wide max of |sigma_quad| and is
/// filled in once the sweep completes.
struct ConductivitySample {
    double omega = 0.0;
    cplx sigma_quad{};
    cplx sigma_asym{};
    double rel_deviation = 0.0;
    double quad_error_estimate = 0.0;
    bool quad_converged = true;
};

}  // namespace sshcond

#endif

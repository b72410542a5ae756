#ifndef SSHCOND_REFERENCE_HPP
#define SSHCOND_REFERENCE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "sshcond/quadrature.hpp"
#include "sshcond/types.hpp"

// Slow, independent reference evaluators. These back the validation suite
// and the test oracles; none of them shares an algorithm with the closed
// forms in specfun.hpp, asymptotics.hpp or mellin.hpp.
namespace sshcond {
namespace reference {

/// Truncated Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n.
inline cplx gauss_2f1_series(double a, double b, double c, cplx z, int max_terms = 5000) {
    cplx sum = 1.0;
    cplx term = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        term *= z * (a + n) * (b + n) / ((c + n) * (n + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

/// Euler-transformed alternating sum of sum_k (-1)^k b(k): a stretch of
/// direct terms plus the binomial-weighted forward-difference tail.
inline cplx euler_alternating_sum(const std::function<cplx(int)>& b, int direct = 40,
                                  int depth = 30) {
    cplx sum{};
    double sign = 1.0;
    for (int k = 0; k < direct; ++k) {
        sum += sign * b(k);
        sign = -sign;
    }
    std::vector<cplx> diff(depth);
    for (int j = 0; j < depth; ++j) diff[j] = b(direct + j);
    // tail = (-1)^direct * sum_j (-Delta)^j b(direct) / 2^{j+1}
    double scale = 0.5;
    cplx tail{};
    for (int j = 0; j < depth; ++j) {
        tail += diff[0] * scale;
        scale *= 0.5;
        for (int m = 0; m + 1 < depth - j; ++m) diff[m] = diff[m] - diff[m + 1];
    }
    return sum + sign * tail;
}

/// Direct Dirichlet eta partial sum, paired terms, with the leading
/// integral tail estimate appended.
inline cplx eta_direct_sum(cplx s, long pairs = 500000) {
    cplx sum{};
    for (long k = pairs; k >= 1; --k) {
        const double odd = 2.0 * k - 1.0;
        const double even = 2.0 * k;
        sum += std::exp(-s * std::log(odd)) - std::exp(-s * std::log(even));
    }
    // sum_{k>K} [(2k-1)^{-s} - (2k)^{-s}] ~ (2K)^{-s}/2
    sum += 0.5 * std::exp(-s * std::log(2.0 * pairs));
    return sum;
}

/// Hurwitz sum sum_{n>=0} (n+1/2)^{-theta} with an Euler-Maclaurin tail
/// after N direct terms.
inline cplx hurwitz_half_sum(cplx theta, int N = 4000) {
    cplx sum{};
    for (int n = N - 1; n >= 0; --n) sum += std::exp(-theta * std::log(n + 0.5));
    const double x = N + 0.5;
    const cplx fx = std::exp(-theta * std::log(x));
    // integral + f/2 - f'/12 + f'''/720 - f^(5)/30240
    sum += fx * x / (theta - 1.0);
    sum += 0.5 * fx;
    sum += theta * fx / (12.0 * x);
    sum -= theta * (theta + 1.0) * (theta + 2.0) * fx / (720.0 * x * x * x);
    sum += theta * (theta + 1.0) * (theta + 2.0) * (theta + 3.0) * (theta + 4.0) * fx /
           (30240.0 * std::pow(x, 5));
    return sum;
}

/// Gamma by upward recurrence into |z| >= 25 followed by the Stirling
/// series; independent of the Lanczos path.
inline cplx gamma_stirling(cplx z) {
    int shift = 0;
    while (std::abs(z + static_cast<double>(shift)) < 25.0) ++shift;
    cplx w = z + static_cast<double>(shift);
    static const double bern[8] = {1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,  -1.0 / 30.0,
                                   5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};
    cplx lg = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi);
    cplx wp = w;
    for (int j = 0; j < 8; ++j) {
        lg += bern[j] / ((2.0 * j + 2.0) * (2.0 * j + 1.0) * wp);
        wp *= w * w;
    }
    cplx g = std::exp(lg);
    for (int m = shift - 1; m >= 0; --m) g /= (z + static_cast<double>(m));
    return g;
}

/// int_0^inf e^{-alpha} (e + r)^p de for Re alpha < 1, Re(alpha - p) > 1,
/// r > 0: binomial head series on (0, r/2), adaptive quadrature through
/// the midrange, binomial tail series beyond E.
inline cplx power_law_integral(cplx alpha, cplx p, double r, const QuadratureSpec& spec = {}) {
    const double delta = 0.5 * r;
    const double E = std::max(1e6 * r, 1e6);

    cplx head{};
    {
        cplx coeff = std::exp(p * std::log(r));  // r^p * binom(p,j) r^{-j}, j = 0
        for (int j = 0; j < 120; ++j) {
            const cplx ex = static_cast<double>(j) + 1.0 - alpha;
            const cplx inc = coeff * std::exp(ex * std::log(delta)) / ex;
            head += inc;
            if (std::abs(inc) < 1e-18 * std::abs(head) && j > 4) break;
            coeff *= (p - static_cast<double>(j)) / ((j + 1.0) * r);
        }
    }

    std::vector<double> brk;
    for (double x = delta * 2.0; x < E; x *= 4.0) brk.push_back(x);
    auto f = [&](double e) {
        return std::exp(-alpha * std::log(e) + p * std::log(e + r));
    };
    const QuadResult mid = integrate(f, delta, E, spec, brk);

    cplx tail{};
    {
        cplx coeff = 1.0;  // binom(p,j) r^j, j = 0
        for (int j = 0; j < 12; ++j) {
            const cplx ex = p - alpha - static_cast<double>(j) + 1.0;
            tail += coeff * (-std::exp(ex * std::log(E)) / ex);
            coeff *= (p - static_cast<double>(j)) * r / (j + 1.0);
        }
    }
    return head + mid.value + tail;
}

/// int_0^1 x^{s-1} (1-x)^{t-1} dx continued to Re s <= 0 by subtracting
/// enough terms of the (1-x)^{t-1} expansion at x = 0.
inline cplx beta_integral(cplx s, cplx t, const QuadratureSpec& spec = {}) {
    int J = 0;
    while (std::real(s) + J < 0.75) ++J;
    const int extra = 48;  // series terms for the subtracted remainder
    std::vector<cplx> c(J + extra);
    cplx analytic{};
    {
        cplx cj = 1.0;
        for (int j = 0; j < J + extra; ++j) {
            c[j] = cj;
            if (j < J) analytic += cj / (s + static_cast<double>(j));
            cj *= (static_cast<double>(j) + 1.0 - t) / (j + 1.0);
        }
    }
    auto f = [&](double x) -> cplx {
        cplx val;
        if (x < 0.25) {
            // remainder of the binomial series: no cancellation against the
            // subtracted head, exact zero for polynomial (1-x)^{t-1}
            val = 0.0;
            cplx xj = std::pow(x, J);
            for (int j = J; j < J + extra; ++j) {
                val += c[j] * xj;
                xj *= x;
            }
        } else {
            val = std::exp((t - 1.0) * std::log1p(-x));
            cplx xj = 1.0;
            for (int j = 0; j < J; ++j) {
                val -= c[j] * xj;
                xj *= x;
            }
        }
        return std::exp((s - 1.0) * std::log(x)) * val;
    };
    // Close the x -> 1 end analytically: expand x^{s-1} about 1 and keep
    // enough powers of delta that the remainder is below double precision.
    const double delta = 1e-6;
    cplx tail{};
    {
        cplx bm = 1.0;  // binom(s-1, m) (-1)^m
        for (int m = 0; m < 5; ++m) {
            tail += bm * std::exp((t + static_cast<double>(m)) * std::log(delta)) /
                    (t + static_cast<double>(m));
            bm *= -(s - 1.0 - static_cast<double>(m)) / (m + 1.0);
        }
        // The subtracted head polynomial must be removed from the tail too.
        const double log1md = std::log1p(-delta);
        for (int j = 0; j < J; ++j) {
            const cplx ex = s + static_cast<double>(j);
            tail -= c[j] * (1.0 - std::exp(ex * log1md)) / ex;
        }
    }
    std::vector<double> brk;
    for (double h = 0.5; h > 1e-12; h *= 0.25) brk.push_back(1.0 - h);
    for (double h = 0.25; h > 1e-12; h *= 0.25) brk.push_back(h);
    const QuadResult q = integrate(f, 0.0, 1.0 - delta, spec, brk);
    return analytic + q.value + tail;
}

/// (1/2pi) int_{-T}^{T} F(gamma + i t) dt: vertical-line contour integral
/// used to re-sum residue series independently of their closed forms.
inline cplx mellin_line_integral(const std::function<cplx(cplx)>& F, double gamma_line,
                                 double T = 26.0, const QuadratureSpec& spec = {}) {
    auto f = [&](double t) { return F(cplx{gamma_line, t}); };
    std::vector<double> brk{-T / 2, -T / 8, 0.0, T / 8, T / 2};
    const QuadResult q = integrate(f, -T, T, spec, brk);
    return q.value / (2.0 * pi);
}

}  // namespace reference
}  // namespace sshcond

#endif

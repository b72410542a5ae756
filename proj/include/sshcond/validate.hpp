#ifndef SSHCOND_VALIDATE_HPP
#define SSHCOND_VALIDATE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sshcond/asymptotics.hpp"
#include "sshcond/bounds.hpp"
#include "sshcond/mellin.hpp"
#include "sshcond/model.hpp"
#include "sshcond/oracle.hpp"
#include "sshcond/presets.hpp"
#include "sshcond/reference.hpp"
#include "sshcond/specfun.hpp"

namespace sshcond {
namespace validate {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst observed deviation (or value of interest)
    double threshold = 0.0;  // pass criterion
    std::string detail;
};

namespace detail {

inline CheckResult bounded(std::string name, double measured, double threshold,
                           std::string detail_text = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.threshold = threshold;
    r.pass = measured <= threshold;
    r.detail = std::move(detail_text);
    return r;
}

inline double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::abs(want);
}

// fixed-seed complex samples, |z| <= radius, kept away from the real axis
// poles of Gamma by construction
inline std::vector<cplx> random_points(int n, double radius, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<cplx> pts;
    while (static_cast<int>(pts.size()) < n) {
        cplx z{u(rng), u(rng)};
        if (std::abs(z) > radius || std::abs(z) < 0.3) continue;
        if (std::abs(std::imag(z)) < 1e-3) continue;
        pts.push_back(z);
    }
    return pts;
}

inline const std::vector<mellin::MellinPoint>& region_points() {
    static const std::vector<mellin::MellinPoint> pts = {
        {{-0.1, 0.0}, {0.2, 0.0}, {1.35, 0.0}},
        {{0.0, 0.0}, {0.1, 0.0}, {1.3, 0.0}},
        {{-0.05, 0.0}, {0.3, 0.0}, {1.65, 0.0}},
        {{0.1, 0.0}, {0.15, 0.0}, {1.6, 0.0}},
        {{-0.3, 0.0}, {0.05, 0.0}, {1.12, 0.0}},
        {{-0.1, 0.3}, {0.2, -0.2}, {1.35, 0.1}},
    };
    return pts;
}

}  // namespace detail

// ---------------------------------------------------------------- specfun

inline std::vector<CheckResult> check_specfun() {
    using namespace specfun;
    std::vector<CheckResult> out;

    {
        const double sqrt_pi = std::sqrt(pi);
        double worst = detail::rel_err(gamma_complex(0.5), sqrt_pi);
        worst = std::max(worst, detail::rel_err(gamma_complex(-0.5), -2.0 * sqrt_pi));
        worst = std::max(worst, detail::rel_err(gamma_complex(5.0), 24.0));
        out.push_back(detail::bounded("gamma known values", worst, 1e-13));
    }
    {
        double worst = 0.0;
        for (cplx z : detail::random_points(100, 20.0, 20240811u))
            worst = std::max(worst,
                             detail::rel_err(gamma_complex(z + 1.0), z * gamma_complex(z)));
        out.push_back(detail::bounded("gamma recurrence z Gamma(z)", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (cplx z : detail::random_points(100, 8.0, 77130u)) {
            const cplx lhs = gamma_complex(z) * gamma_complex(1.0 - z);
            const cplx rhs = pi / std::sin(pi * z);
            worst = std::max(worst, detail::rel_err(lhs, rhs));
        }
        out.push_back(detail::bounded("gamma reflection", worst, 1e-11));
    }
    {
        double worst = 0.0;
        for (cplx z : detail::random_points(40, 15.0, 5150u))
            worst = std::max(worst, detail::rel_err(gamma_complex(z),
                                                    reference::gamma_stirling(z)));
        out.push_back(detail::bounded("gamma vs Stirling reference", worst, 1e-12));
    }
    {
        double worst = detail::rel_err(zeta_complex(2.0), pi * pi / 6.0);
        worst = std::max(worst, detail::rel_err(zeta_complex(4.0), pi * pi * pi * pi / 90.0));
        out.push_back(detail::bounded("zeta known values", worst, 1e-12));
    }
    {
        const cplx s{1.2, 0.7};
        const cplx eta = reference::eta_direct_sum(s);
        const cplx z = eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
        out.push_back(detail::bounded("zeta vs direct eta sum at 1.2+0.7i",
                                      detail::rel_err(zeta_complex(s), z), 1e-8));
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const cplx theta{1.12 + 0.085 * i, (i % 3 - 1) * 0.4};
            worst = std::max(worst, detail::rel_err(zeta_half(theta),
                                                    reference::hurwitz_half_sum(theta)));
        }
        out.push_back(detail::bounded("zeta(theta,1/2) identity vs Hurwitz sum", worst, 1e-9));
    }
    {
        double worst = 0.0;
        for (cplx z : detail::random_points(40, 0.8, 90125u)) {
            worst = std::max(worst, detail::rel_err(hyp2f1_threehalf(z),
                                                    reference::gauss_2f1_series(1.5, 1.0, 2.5, z)));
            worst = std::max(worst, detail::rel_err(hyp2f1_onehalfth(z),
                                                    reference::gauss_2f1_series(1.0, 1.0, 1.5, z)));
        }
        out.push_back(detail::bounded("2F1 closed forms vs Gauss series |z|<=0.8", worst, 1e-10));
    }
    {
        // c(1-z) F(a,b;c;z) - c F(a-1,b;c;z) + (c-b) z F(a,b;c+1;z) = 0 at
        // a = 3/2, b = 1, c = 3/2, using F(3/2,1;3/2;z) = 1/(1-z) and
        // F(1/2,1;3/2;z) = atanh(sqrt z)/sqrt z.
        double worst = 0.0;
        for (cplx z : detail::random_points(40, 0.85, 331u)) {
            const cplx w = std::sqrt(z);
            const cplx f_c = 1.0 / (1.0 - z);
            const cplx f_am1 = std::atanh(w) / w;
            const cplx lhs = 1.5 * (1.0 - z) * f_c - 1.5 * f_am1 +
                             0.5 * z * hyp2f1_threehalf(z);
            worst = std::max(worst, std::abs(lhs));
        }
        out.push_back(detail::bounded("2F1 contiguous relation", worst, 1e-11));
    }
    return out;
}

// ----------------------------------------------------------------- mellin

inline std::vector<CheckResult> check_mellin() {
    using namespace mellin;
    std::vector<CheckResult> out;
    const QuadratureSpec tight{1e-12, 1e-15, 4000};

    {
        double worst = 0.0;
        const cplx thetas[] = {{1.5, 0.0}, {1.25, 0.0}, {1.35, 0.4}, {1.8, -0.3}, {1.1, 0.0}};
        const double us[] = {1.0, 4.0, 0.5, 2.5, 1.7};
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, detail::rel_err(factor_eps3_closed(thetas[i], us[i]),
                                                    factor_eps3_quadrature(thetas[i], us[i], tight)));
        out.push_back(detail::bounded("eps3 factor closed vs quadrature", worst, 1e-7));
    }
    {
        double worst = 0.0;
        const cplx lams[] = {{0.2, 0.0}, {-0.1, 0.3}, {0.5, 0.0}, {0.99, 0.0}, {-0.2, -0.2}};
        const cplx thetas[] = {{1.3, 0.0}, {1.35, 0.1}, {1.5, 0.0}, {1.3, 0.0}, {1.2, 0.4}};
        const double rs[] = {1.0, 2.0, 0.7, 1.0, 3.0};
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst,
                             detail::rel_err(factor_eps1_closed(lams[i], thetas[i], rs[i]),
                                             factor_eps1_quadrature(lams[i], thetas[i], rs[i], tight)));
        out.push_back(detail::bounded("eps1 factor closed vs quadrature", worst, 1e-7));
    }
    {
        double worst = 0.0;
        const cplx nus[] = {{0.5, 0.0}, {0.25, 0.0}, {0.2, 0.3}, {0.75, -0.2}, {0.4, 0.0}};
        const double rs[] = {1.0, 1.0, 2.0, 0.5, 9.0};
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, detail::rel_err(factor_eps2_closed(nus[i], rs[i]),
                                                    factor_eps2_quadrature(nus[i], rs[i], tight)));
        out.push_back(detail::bounded("eps2 factor closed vs quadrature", worst, 1e-7));
    }
    {
        double worst = 0.0;
        const cplx ss[] = {{-1.2, 0.0}, {-1.45, 0.0}, {-1.3, 0.3}, {-2.0, 0.0}, {-2.5, 0.3}};
        for (const cplx s : ss) {
            worst = std::max(worst, detail::rel_err(xi_closed(s), xi_cut_integral(s, tight)));
            worst = std::max(worst, detail::rel_err(xi_closed(s), xi_circle_integral(s, tight)));
        }
        out.push_back(detail::bounded("contour factor closed vs both integrals", worst, 1e-8));
    }
    {
        // power scaling in r is exact for the closed factors
        double worst = 0.0;
        const cplx lam{0.2, 0.1}, th{1.3, 0.0}, nu{0.25, 0.0};
        const cplx s1 = factor_eps1_closed(lam, th, 4.0) / factor_eps1_closed(lam, th, 1.0);
        worst = std::max(worst, detail::rel_err(s1, std::exp((th - lam - 1.5) * std::log(4.0))));
        const cplx s2 = factor_eps2_closed(nu, 9.0) / factor_eps2_closed(nu, 1.0);
        worst = std::max(worst, detail::rel_err(s2, std::exp(-nu * std::log(9.0))));
        const cplx s3 = factor_eps3_closed(th, 4.0) / factor_eps3_closed(th, 1.0);
        worst = std::max(worst, detail::rel_err(s3, std::exp(0.5 * (th - 1.0) * std::log(4.0))));
        out.push_back(detail::bounded("factor power scaling in r", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (const auto& p : detail::region_points())
            worst = std::max(worst, assembly_deviation(p));
        out.push_back(detail::bounded("transform assembly identity", worst, 1e-11));
    }
    {
        // (theta - 1) * transform -> closed residue as theta -> 1
        const cplx lam{-0.1, 0.0}, nu{0.2, 0.0};
        const cplx want = residue_theta1(lam, nu);
        double worst = 0.0;
        for (double h : {1e-4, 1e-5, 1e-6}) {
            const MellinPoint p{lam, nu, cplx{1.0 + h, 0.0}};
            worst = std::max(worst, detail::rel_err((p.theta - 1.0) * transform_closed(p), want));
        }
        out.push_back(detail::bounded("residue at theta = 1", worst, 1e-3));
    }
    {
        const MellinPoint p{{-0.06, 0.0}, {0.12, 0.0}, {1.5, 0.0}};
        const auto fwd = forward_numeric(p, default_plan(p));
        out.push_back(detail::bounded("numeric forward transform vs closed form",
                                      detail::rel_err(fwd.value, transform_closed(p)), 1e-3));
    }
    return out;
}

// ----------------------------------------------------------------- oracle

inline std::vector<CheckResult> check_oracle() {
    std::vector<CheckResult> out;
    const QuadratureSpec spec;

    {
        double worst = 0.0;
        for (FigureId id : {FigureId::fig2, FigureId::fig3, FigureId::fig4, FigureId::fig5}) {
            const ModelParams p = figure_preset(id);
            for (double omega : {0.15, 0.6, 1.2, 1.95, 2.7}) {
                const cplx direct = oracle::sigma_interband_bz(p, omega, spec).value;
                const EpsilonTriple e = epsilon_params(p, omega);
                const cplx via_I = oracle::sigma_from_integral(
                    p, omega, oracle::interband_integral(e, spec).value);
                worst = std::max(worst, std::abs(via_I - direct) / std::abs(direct));
            }
        }
        out.push_back(detail::bounded("dual representation equivalence", worst, 1e-8));
    }
    {
        const ModelParams p = figure_preset(FigureId::fig2);
        double worst = 0.0;
        for (double omega : {0.1, 0.35, 1.3, 2.4}) {
            const cplx plus = oracle::sigma_interband_bz(p, omega, spec).value;
            const cplx minus = oracle::sigma_interband_bz(p, -omega, spec).value;
            worst = std::max(worst, std::abs(minus - std::conj(plus)) / std::abs(plus));
        }
        out.push_back(detail::bounded("reality symmetry sigma(-w) = conj sigma(w)", worst, 1e-12));
    }
    {
        const cplx dc = oracle::sigma_interband_bz(figure_preset(FigureId::fig2), 0.0, spec).value;
        out.push_back(detail::bounded("dc value is real",
                                      std::abs(std::imag(dc)) / std::abs(std::real(dc)), 1e-12));
    }
    {
        ModelParams p = figure_preset(FigureId::fig2);
        p.g0 = p.g1 = 0.5;
        const cplx z = oracle::sigma_interband_bz(p, 0.7, spec).value;
        out.push_back(detail::bounded("metallic chain gives zero", std::abs(z), 0.0));
    }
    {
        ModelParams p = figure_preset(FigureId::fig2);
        const double omega = 0.5;
        double previous = 1e300;
        bool monotone = true;
        for (double beta : {1e2, 1e3, 1e4}) {
            p.beta = beta;
            const double d = std::abs(oracle::sigma_thermal_correction(p, omega, spec).value);
            monotone = monotone && (d < previous);
            previous = d;
        }
        CheckResult r;
        r.name = "thermal correction shrinks with beta";
        r.pass = monotone;
        r.measured = previous;
        r.threshold = 0.0;
        out.push_back(r);
    }
    {
        // at moderate beta the correction is large enough to cross-check
        // against the plain difference of the two quadratures
        ModelParams p = figure_preset(FigureId::fig2);
        p.beta = 120.0;
        ModelParams p0 = p;
        p0.beta = beta_infinity;
        const double omega = 0.5;
        const cplx diff = oracle::sigma_interband_bz(p, omega, spec).value -
                          oracle::sigma_interband_bz(p0, omega, spec).value;
        const cplx corr = oracle::sigma_thermal_correction(p, omega, spec).value;
        out.push_back(detail::bounded("correction integral vs direct difference",
                                      std::abs(diff - corr) / std::abs(corr), 1e-6));
    }
    {
        // observational, not a model invariant: the dissipative part stays
        // positive at positive frequency on every preset grid
        double most_negative = 0.0;
        for (FigureId id : {FigureId::fig2, FigureId::fig3, FigureId::fig4, FigureId::fig5}) {
            const ModelParams p = figure_preset(id);
            for (int i = 1; i <= 12; ++i) {
                const double omega = 3.0 * i / 12.0;
                most_negative = std::min(
                    most_negative, std::real(oracle::sigma_interband_bz(p, omega, spec).value));
            }
        }
        out.push_back(detail::bounded("observational: Re sigma > 0 at omega > 0",
                                      -most_negative, 0.0));
    }
    return out;
}

// ------------------------------------------------------------ asymptotics

inline std::vector<CheckResult> check_asymptotics() {
    std::vector<CheckResult> out;
    const QuadratureSpec spec;

    {
        const asym::AsymptoticTerms t = asym::zero_temperature(0.04, cplx{0.3, -0.05});
        out.push_back(detail::bounded("terms recombine into total",
                                      std::abs(t.total - (t.i0 + t.i1 + t.i2)), 0.0));
    }
    {
        // residue series re-summed along the inversion line must reproduce
        // the closed forms
        using reference::mellin_line_integral;
        using specfun::gamma_complex;
        const double eps1 = 0.04;
        const cplx eps2{0.21, -0.05};
        double worst = 0.0;
        {
            auto F = [&](cplx nu) {
                return std::exp(nu * std::log(eps2 / eps1)) * gamma_complex(1.0 - nu) *
                       gamma_complex(nu) * gamma_complex(1.0 + nu) * gamma_complex(0.5 - nu);
            };
            const cplx line = -std::pow(pi, -1.5) / (eps1 * eps2) *
                              mellin_line_integral(F, 0.25, 26.0, spec);
            worst = std::max(worst, detail::rel_err(asym::term0(eps1, eps2), line));
        }
        {
            auto F = [&](cplx nu) {
                const cplx g = gamma_complex(nu);
                return std::exp(nu * std::log(eps2 / eps1)) * gamma_complex(1.0 - nu) * g * g *
                       gamma_complex(1.5 - nu);
            };
            const cplx line = -1.0 / (8.0 * pi * std::sqrt(pi)) / eps2 *
                              mellin_line_integral(F, 0.25, 26.0, spec);
            worst = std::max(worst, detail::rel_err(asym::term1(eps1, eps2), line));
        }
        {
            auto F = [&](cplx nu) {
                return std::exp(nu * std::log(eps2 / 4.0)) * gamma_complex(1.0 - nu) *
                       gamma_complex(nu) * gamma_complex(-nu - 1.0) /
                       gamma_complex(-0.5 - nu);
            };
            const cplx line = -1.0 / (8.0 * std::sqrt(pi)) / eps2 *
                              mellin_line_integral(F, 0.25, 40.0, spec);
            worst = std::max(worst, detail::rel_err(asym::term2(eps2), line));
        }
        out.push_back(detail::bounded("terms match line-integral re-summation", worst, 1e-9));
    }
    {
        // |total * pi e1 e2| -> 1 as e1/e2 -> 0
        const cplx eps2 = cplx{0.01, 0.0} * std::polar(1.0, -0.3);
        double last = 0.0;
        for (double eps1 : {1e-4, 1e-5, 1e-6, 1e-7})
            last = std::abs(asym::zero_temperature(eps1, eps2).total * pi * eps1 * eps2);
        out.push_back(detail::bounded("damping-limit law |I pi e1 e2| -> 1",
                                      std::abs(last - 1.0), 5e-3));
    }
    {
        // deviation from the T=0 quadrature decreases as eps1 shrinks
        bool ok = true;
        double worst_ratio = 0.0;
        for (double c : {0.1, 1.0, 10.0}) {
            double prev = 1e300;
            int inversions = 0;
            for (double eps1 : {0.4, 0.1, 0.04, 0.01}) {
                const cplx eps2 = c * eps1 * std::polar(1.0, -0.6);
                const cplx num =
                    oracle::interband_integral({eps1, eps2, beta_infinity}, spec).value;
                const cplx asy = asym::zero_temperature(eps1, eps2).total;
                const double dev = std::abs(asy - num) / std::abs(num);
                if (dev >= prev) ++inversions;
                prev = dev;
            }
            worst_ratio = std::max(worst_ratio, prev);
            ok = ok && inversions <= 1;
        }
        CheckResult r;
        r.name = "asymptote converges to quadrature as eps1 -> 0";
        r.pass = ok;
        r.measured = worst_ratio;
        r.threshold = 0.0;
        out.push_back(r);
    }
    {
        // branch pinning: no gross sign disagreement against the oracle
        const ModelParams p = figure_preset(FigureId::fig2);
        double re_max = 0.0, im_max = 0.0;
        std::vector<cplx> quad, asy;
        for (int i = 0; i <= 24; ++i) {
            const double omega = 0.05 + i * (2.95 / 24.0);
            quad.push_back(oracle::sigma_interband_bz(p, omega, spec).value);
            asy.push_back(asym::sigma_zero_temperature(p, omega));
            re_max = std::max(re_max, std::abs(std::real(quad.back())));
            im_max = std::max(im_max, std::abs(std::imag(quad.back())));
        }
        bool ok = true;
        for (std::size_t i = 0; i < quad.size(); ++i) {
            if (std::abs(std::real(quad[i])) > 1e-3 * re_max &&
                std::abs(std::real(asy[i])) > 1e-3 * re_max)
                ok = ok && std::signbit(std::real(quad[i])) == std::signbit(std::real(asy[i]));
            if (std::abs(std::imag(quad[i])) > 1e-3 * im_max &&
                std::abs(std::imag(asy[i])) > 1e-3 * im_max)
                ok = ok && std::signbit(std::imag(quad[i])) == std::signbit(std::imag(asy[i]));
        }
        CheckResult r;
        r.name = "sign agreement with oracle across fig2 sweep";
        r.pass = ok;
        out.push_back(r);
    }
    {
        // compact two-line form tracks the three-term sum away from resonances
        const ModelParams p = figure_preset(FigureId::fig2);
        double worst = 0.0;
        for (double omega : {0.45, 0.8, 1.2, 1.6, 2.45, 2.9}) {
            const EpsilonTriple e = epsilon_params(p, omega);
            const cplx sum = asym::zero_temperature(e.eps1, e.eps2).total;
            const cplx compact = asym::zero_temperature_compact(e.eps1, e.eps2);
            worst = std::max(worst, std::abs(compact - sum) / std::abs(sum));
        }
        out.push_back(detail::bounded("compact form deviation is O(eps1)", worst, 0.05));
    }
    return out;
}

// ----------------------------------------------------------------- bounds

inline std::vector<CheckResult> check_bounds() {
    std::vector<CheckResult> out;
    const QuadratureSpec spec;

    {
        double worst = std::abs(bounds::bound_profile(0.0));
        worst = std::max(worst, std::abs(bounds::bound_profile(1.0) - 1.0));
        worst = std::max(worst, std::abs(bounds::bound_profile(0.5) - 0.8));
        worst = std::max(worst, std::abs(bounds::bound_profile(7.0) - 1.0));
        out.push_back(detail::bounded("profile values", worst, 1e-15));
    }
    {
        double worst = 0.0;
        for (double h : {0.1, 0.05, 0.01}) {
            const double jump =
                std::abs(bounds::bound_profile(1.0 - h) - bounds::bound_profile(1.0 + h));
            worst = std::max(worst, jump - 2.0 * h * h);
        }
        out.push_back(detail::bounded("profile C1 matching at xi = 1", worst, 0.0));
    }
    {
        // ln|correction| is affine in eps3 with slope -sqrt(eps1)
        ModelParams p = figure_preset(FigureId::fig2);
        const double omega = 0.5;
        const double sgg = std::sqrt(p.g0 * p.g1);
        std::vector<double> xs, ys;
        for (double eps3 : {200.0, 400.0, 800.0, 1600.0}) {
            p.beta = eps3 / sgg;
            xs.push_back(eps3);
            ys.push_back(std::log(std::abs(oracle::sigma_thermal_correction(p, omega, spec).value)));
        }
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= xs.size();
        my /= ys.size();
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        const double slope = sxy / sxx;
        const double want = -std::sqrt(epsilon_params(p, 0.0).eps1);
        out.push_back(detail::bounded("decay slope equals -sqrt(eps1)",
                                      std::abs(slope - want) / std::abs(want), 0.05));
    }
    {
        std::vector<double> omegas;
        for (int i = 0; i < 10; ++i) omegas.push_back(0.1 + 0.31 * i);
        const std::vector<ModelParams> presets = {figure_preset(FigureId::fig2),
                                                  figure_preset(FigureId::fig3)};
        const double c = bounds::calibrate_bound_constant(presets, omegas, spec);
        double worst = 0.0;
        for (const auto& p : presets)
            for (double w : omegas) {
                const double measured =
                    std::abs(oracle::sigma_thermal_correction(p, w, spec).value);
                const double bound = bounds::correction_bound(p, w, c);
                worst = std::max(worst, measured / bound);
            }
        out.push_back(detail::bounded("measured correction within calibrated bound", worst, 1.0,
                                      "c = " + std::to_string(c)));
    }
    {
        const bool f2 = bounds::regime_diagnostics(figure_preset(FigureId::fig2)).regime_ok;
        const bool f3 = bounds::regime_diagnostics(figure_preset(FigureId::fig3)).regime_ok;
        const bool f4 = bounds::regime_diagnostics(figure_preset(FigureId::fig4)).regime_ok;
        const bool f5 = bounds::regime_diagnostics(figure_preset(FigureId::fig5)).regime_ok;
        CheckResult r;
        r.name = "regime flags: fig2/fig3 pass, fig4/fig5 fail";
        r.pass = f2 && f3 && !f4 && !f5;
        out.push_back(r);
    }
    return out;
}

inline std::vector<CheckResult> run_scope(const std::string& scope) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    if (scope == "specfun" || scope == "all") append(check_specfun());
    if (scope == "mellin" || scope == "all") append(check_mellin());
    if (scope == "oracle" || scope == "all") append(check_oracle());
    if (scope == "asymptotics" || scope == "all") append(check_asymptotics());
    if (scope == "bounds" || scope == "all") append(check_bounds());
    if (out.empty()) throw std::invalid_argument("unknown validation scope: " + scope);
    return out;
}

}  // namespace validate
}  // namespace sshcond

#endif

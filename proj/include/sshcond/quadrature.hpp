#ifndef SSHCOND_QUADRATURE_HPP
#define SSHCOND_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sshcond/types.hpp"

namespace sshcond {

struct QuadResult {
    cplx value{};
    double error_estimate = 0.0;
    bool converged = true;
    int panels = 0;
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(F&& f, double a, double b, cplx& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * gk15_nodes[i]);
        fv[14 - i] = f(c + h * gk15_nodes[i]);
    }
    fv[7] = f(c);
    cplx kron = gk15_wk[7] * fv[7];
    cplx gauss = gk15_wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += gk15_wk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += gk15_wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    value = kron * h;
    err = std::abs((kron - gauss) * h);
}

}  // namespace detail

/// Adaptive bisection with the nested 15/7 Gauss-Kronrod pair. Optional
/// breakpoints seed the initial panel set (resonance pre-seeding). The
/// worst panel is always split first; ties resolve to the lowest index,
/// so results are bit-reproducible for a given integrand.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {},
                     const std::vector<double>& breakpoints = {}) {
    spec.validate();
    struct Panel {
        double a, b;
        cplx val;
        double err;
    };

    std::vector<double> edges;
    edges.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](double u, double v) { return std::abs(u - v) < 1e-15; }),
                edges.end());

    std::vector<Panel> panels;
    panels.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 8);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p{edges[i], edges[i + 1], {}, 0.0};
        detail::gk15(f, p.a, p.b, p.val, p.err);
        panels.push_back(p);
    }

    QuadResult res;
    for (;;) {
        cplx total{};
        double err = 0.0;
        for (const Panel& p : panels) {
            total += p.val;
            err += p.err;
        }
        res.value = total;
        res.error_estimate = err;
        res.panels = static_cast<int>(panels.size());
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (err <= tol) {
            res.converged = true;
            return res;
        }
        if (static_cast<int>(panels.size()) >= spec.max_subdivisions) {
            res.converged = false;
            return res;
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel left{panels[worst].a, 0.5 * (panels[worst].a + panels[worst].b), {}, 0.0};
        Panel right{left.b, panels[worst].b, {}, 0.0};
        detail::gk15(f, left.a, left.b, left.val, left.err);
        detail::gk15(f, right.a, right.b, right.val, right.err);
        panels[worst] = left;
        panels.push_back(right);
    }
}

}  // namespace sshcond

#endif

#ifndef SSHCOND_PRESETS_HPP
#define SSHCOND_PRESETS_HPP

#include <stdexcept>
#include <string>

#include "sshcond/types.hpp"

namespace sshcond {

/// Bundled parameter sets in the unit system g0 + g1 = 1, 2 sigma0 a = 1.
enum class FigureId { fig2, fig3, fig4, fig5 };

inline const char* to_string(FigureId id) {
    switch (id) {
        case FigureId::fig2: return "fig2";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4: return "fig4";
        case FigureId::fig5: return "fig5";
    }
    return "?";
}

inline FigureId figure_id_from_string(const std::string& s) {
    if (s == "fig2") return FigureId::fig2;
    if (s == "fig3") return FigureId::fig3;
    if (s == "fig4") return FigureId::fig4;
    if (s == "fig5") return FigureId::fig5;
    throw std::invalid_argument("unknown figure preset: " + s);
}

inline ModelParams figure_preset(FigureId id) {
    ModelParams p;
    p.a = 0.5;  // lattice constant 2a = 1
    switch (id) {
        case FigureId::fig2:
            p.g0 = 0.55;
            p.tau_inv = 0.05;
            p.beta = 1.0e3;
            break;
        case FigureId::fig3:
            p.g0 = 0.70;
            p.tau_inv = 0.05;
            p.beta = 1.0e3;
            break;
        case FigureId::fig4:
            p.g0 = 0.505;
            p.tau_inv = 0.4;
            p.beta = 1.0e2;
            break;
        case FigureId::fig5:
            p.g0 = 0.90;
            p.tau_inv = 0.05;
            p.beta = 1.0e3;
            break;
    }
    p.g1 = 1.0 - p.g0;
    return p;
}

}  // namespace sshcond

#endif

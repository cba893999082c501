#include "nel/chaos/poincare.hpp"

#include <cmath>
#include <numbers>

#include "nel/core/parallel.hpp"

namespace nel::chaos {

PoincareResult<SGState> sg_period_samples(const SineGordon& sg, const SGState& x0, int steps_per_period,
                                          int n_iterates) {
    if (sg.params().forcing.mode != ForcingSpec::Mode::CosT)
        throw DomainError("poincare: quasiperiodic forcing has no period map");
    return stroboscopic_samples(sg, x0, x0.t, 2.0 * std::numbers::pi, steps_per_period, n_iterates);
}

PoincareResult<GLState> phase_section_returns(const GinzburgLandau& gl, GLState x, double dt, int n_crossings,
                                              double t_max) {
    if (gl.params().variant != GLVariant::DerNLS) throw DomainError("poincare: return map is defined for derNLS");
    if (!(dt > 0.0) || n_crossings < 0) throw DomainError("poincare: need dt > 0 and n_crossings >= 0");
    const cplx rot = std::exp(cplx(0.0, gl.params().gamma));
    auto g = [&](const GLState& s) { return s.q[0] * rot; };

    PoincareResult<GLState> res;
    // A start on the section (up to rounding) is not a return.
    const cplx g0 = g(x);
    bool on_section = std::abs(g0.imag()) <= 1e-12 * std::abs(g0);
    while (static_cast<int>(res.samples.size()) < n_crossings && x.t < t_max) {
        GLState next;
        try {
            next = gl.step(x, dt);
        } catch (const ComputationalError&) {
            res.escaped = true;
            break;
        }
        if (!(gl.size(next) <= kEscapeNorm)) {
            res.escaped = true;
            break;
        }
        const cplx before = g(x), after = g(next);
        const bool from_start = on_section;
        on_section = false;
        if (!from_start && before.imag() > 0.0 && after.imag() <= 0.0 && after.real() > 0.0) {
            double lo = 0.0, hi = dt;
            GLState hit = next;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                GLState s = gl.step(x, mid);
                if (g(s).imag() > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                    hit = std::move(s);
                }
            }
            res.times.push_back(hit.t);
            res.samples.push_back(std::move(hit));
        }
        x = std::move(next);
    }
    return res;
}

std::vector<ScanCell> sg_lyapunov_scan(const SGParams& base, const std::vector<double>& u0,
                                       const std::vector<double>& ut0, const std::vector<double>& eps_values,
                                       const std::vector<double>& a_values, double T, double dt, double renorm_dt,
                                       std::uint64_t seed) {
    const std::size_t na = a_values.size();
    // Validate every cell before any integration starts.
    std::vector<SGParams> cells;
    for (double e : eps_values) {
        for (double a : a_values) {
            SGParams p = base;
            p.eps = e;
            p.a = a;
            p.validate();
            cells.push_back(p);
        }
    }
    return parallel_map(cells.size(), [&](std::size_t i) {
        SineGordon sg(cells[i]);
        auto x0 = sg.make_state(u0, ut0);
        return ScanCell{eps_values[i / na], a_values[i % na], lyapunov_max(sg, x0, T, dt, renorm_dt, seed)};
    });
}

}  // namespace nel::chaos

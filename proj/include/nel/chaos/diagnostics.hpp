#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "nel/core/error.hpp"

namespace nel::chaos {

/// States whose size() exceeds this count as escaped.
inline constexpr double kEscapeNorm = 1e6;

struct LyapunovResult {
    double lambda = 0.0;
    std::vector<std::pair<double, double>> series;  ///< (t, running estimate) after each renormalization
    double last_decade_spread = 0.0;                ///< (max - min) / |lambda| of the estimate over t >= T/10
    bool escaped = false;
    double t_end = 0.0;
};

/// Spread of the running estimate over the last decade of time.
double last_decade_spread(const std::vector<std::pair<double, double>>& series);

/// Largest Lyapunov exponent by renormalized separation of a shadow trajectory.
/// System needs step(State, dt), displacement(from, to), displaced(State, d) and size(State).
/// The shadow starts d0 away along a seeded random direction and is pulled back to the
/// measured separation norm every renorm_dt, so a flow that does nothing reports exactly 0.
template <class System>
LyapunovResult lyapunov_max(const System& sys, typename System::State x, double T, double dt, double renorm_dt,
                            std::uint64_t seed, double d0 = 1e-8) {
    if (!(dt > 0.0) || !(renorm_dt >= dt) || !(T >= renorm_dt) || !(d0 > 0.0))
        throw DomainError("lyapunov: need 0 < dt <= renorm_dt <= T and d0 > 0");
    const long per = std::lround(renorm_dt / dt);
    const long intervals = std::lround(T / (static_cast<double>(per) * dt));

    auto dir = sys.displacement(x, x);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double n2 = 0.0;
    for (auto& v : dir) {
        v = normal(rng);
        n2 += v * v;
    }
    for (auto& v : dir) v *= d0 / std::sqrt(n2);
    auto y = sys.displaced(x, dir);

    auto norm = [](const std::vector<double>& d) {
        double s = 0.0;
        for (double v : d) s += v * v;
        return std::sqrt(s);
    };
    double base = norm(sys.displacement(x, y));
    double sum = 0.0;
    LyapunovResult res;
    res.series.reserve(intervals);
    for (long i = 1; i <= intervals; ++i) {
        try {
            for (long s = 0; s < per; ++s) {
                x = sys.step(x, dt);
                y = sys.step(y, dt);
            }
        } catch (const ComputationalError&) {
            res.escaped = true;
            break;
        }
        if (!(sys.size(x) <= kEscapeNorm) || !(sys.size(y) <= kEscapeNorm)) {
            res.escaped = true;
            break;
        }
        auto d = sys.displacement(x, y);
        const double sep = norm(d);
        sum += std::log(sep / base);
        for (auto& v : d) v *= d0 / sep;
        y = sys.displaced(x, d);
        base = norm(sys.displacement(x, y));
        const double t = static_cast<double>(i * per) * dt;
        res.series.emplace_back(t, sum / t);
        res.t_end = t;
    }
    res.lambda = res.series.empty() ? 0.0 : res.series.back().second;
    res.last_decade_spread = last_decade_spread(res.series);
    return res;
}

template <class State>
struct PoincareResult {
    std::vector<double> times;
    std::vector<State> samples;
    bool escaped = false;
};

/// Period-map samples at t = t0 + m P for m = 0..n_iterates, using steps_per_period steps of P / steps_per_period.
template <class System>
PoincareResult<typename System::State> stroboscopic_samples(const System& sys, typename System::State x, double t0,
                                                            double period, int steps_per_period, int n_iterates) {
    if (!(period > 0.0) || steps_per_period < 1 || n_iterates < 0)
        throw DomainError("poincare: need a positive period, steps and iterate count");
    const double dt = period / steps_per_period;
    PoincareResult<typename System::State> res;
    res.times.push_back(t0);
    res.samples.push_back(x);
    for (int m = 1; m <= n_iterates; ++m) {
        try {
            for (int s = 0; s < steps_per_period; ++s) x = sys.step(x, dt);
        } catch (const ComputationalError&) {
            res.escaped = true;
            break;
        }
        if (!(sys.size(x) <= kEscapeNorm)) {
            res.escaped = true;
            break;
        }
        res.times.push_back(t0 + m * period);
        res.samples.push_back(x);
    }
    return res;
}

}  // namespace nel::chaos

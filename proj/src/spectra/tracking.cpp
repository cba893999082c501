#include "nel/spectra/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nel/core/error.hpp"
#include "nel/core/parallel.hpp"

namespace nel::spectra {
namespace {

constexpr double kTieTolerance = 1e-12;

}  // namespace

std::vector<int> solve_assignment(const Eigen::MatrixXd& cost) {
    if (cost.rows() != cost.cols()) throw StructuralError("solve_assignment: cost matrix must be square");
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    // Shortest augmenting paths with row/column potentials; index 0 is a sentinel.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int row = 1; row <= n; ++row) {
        match[0] = row;
        int col0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[col0] = 1;
            const int r = match[col0];
            double delta = inf;
            int col1 = 0;
            for (int c = 1; c <= n; ++c) {
                if (used[c]) continue;
                const double reduced = cost(r - 1, c - 1) - u[r] - v[c];
                if (reduced < minv[c]) {
                    minv[c] = reduced;
                    way[c] = col0;
                }
                if (minv[c] < delta) {
                    delta = minv[c];
                    col1 = c;
                }
            }
            for (int c = 0; c <= n; ++c) {
                if (used[c]) {
                    u[match[c]] += delta;
                    v[c] -= delta;
                } else {
                    minv[c] -= delta;
                }
            }
            col0 = col1;
        } while (match[col0] != 0);
        do {
            const int col1 = way[col0];
            match[col0] = match[col1];
            col0 = col1;
        } while (col0 != 0);
    }
    std::vector<int> col_of(n);
    for (int c = 1; c <= n; ++c) col_of[match[c] - 1] = c - 1;
    return col_of;
}

const char* to_string(LimitLabel label) {
    switch (label) {
        case LimitLabel::Persistence: return "Persistence";
        case LimitLabel::Condensation: return "Condensation";
        case LimitLabel::Singularity: return "Singularity";
        case LimitLabel::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

std::vector<double> geometric_schedule(double nu_max, double nu_min, int steps) {
    if (!(nu_max > nu_min && nu_min > 0.0) || steps < 3)
        throw DomainError("geometric_schedule: need nu_max > nu_min > 0 and at least 3 steps");
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double ratio = std::log(nu_min / nu_max) / (steps - 1);
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = nu_max * std::exp(ratio * i);
    out.front() = nu_max;
    out.back() = nu_min;
    return out;
}

std::vector<EigTrajectory> track_zero_viscosity(const ModeClass& cls, double alpha, double gamma,
                                                const std::vector<double>& nu_schedule, int trunc) {
    if (nu_schedule.size() < 3) throw DomainError("track_zero_viscosity: schedule needs at least 3 viscosities");
    for (std::size_t i = 0; i < nu_schedule.size(); ++i) {
        if (!(nu_schedule[i] > 0.0)) throw DomainError("track_zero_viscosity: viscosities must be positive");
        if (i > 0 && !(nu_schedule[i] < nu_schedule[i - 1]))
            throw DomainError("track_zero_viscosity: schedule must be strictly decreasing");
    }

    const auto spectra = parallel_map(nu_schedule.size(), [&](std::size_t i) {
        return compute_spectrum(assemble_suboperator({cls, alpha, gamma, nu_schedule[i], trunc})).eigenvalues;
    });

    const std::size_t count = spectra.front().size();
    std::vector<EigTrajectory> traj(count);
    for (std::size_t j = 0; j < count; ++j) {
        traj[j].nus = nu_schedule;
        traj[j].values.reserve(nu_schedule.size());
        traj[j].values.push_back(spectra.front()[j]);
    }

    Eigen::MatrixXd cost(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
    for (std::size_t step = 1; step < spectra.size(); ++step) {
        const auto& next = spectra[step];
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < count; ++c)
                cost(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = std::norm(traj[r].values.back() - next[c]);
        const auto col = solve_assignment(cost);
        for (std::size_t r = 0; r < count; ++r) {
            const auto chosen = static_cast<std::size_t>(col[r]);
            const double best = std::abs(traj[r].values.back() - next[chosen]);
            // A different value at (numerically) the same distance makes the continuation ambiguous.
            // The conjugate partner is exempt: for a real matrix both choices mirror each other.
            for (std::size_t c = 0; c < count && !traj[r].ambiguous; ++c) {
                if (c == chosen || std::abs(next[c] - next[chosen]) <= kTieTolerance ||
                    std::abs(next[c] - std::conj(next[chosen])) <= kTieTolerance)
                    continue;
                if (std::abs(std::abs(traj[r].values.back() - next[c]) - best) <= kTieTolerance)
                    traj[r].ambiguous = true;
            }
            traj[r].values.push_back(next[chosen]);
        }
    }

    // Richardson-type extrapolation to nu = 0 through the last three points.
    const std::size_t m = nu_schedule.size();
    const double x0 = nu_schedule[m - 3], x1 = nu_schedule[m - 2], x2 = nu_schedule[m - 1];
    const double w0 = x1 * x2 / ((x0 - x1) * (x0 - x2));
    const double w1 = x0 * x2 / ((x1 - x0) * (x1 - x2));
    const double w2 = x0 * x1 / ((x2 - x0) * (x2 - x1));
    for (auto& t : traj) {
        const cplx y0 = t.values[m - 3], y1 = t.values[m - 2], y2 = t.values[m - 1];
        const cplx quadratic = w0 * y0 + w1 * y1 + w2 * y2;
        const cplx linear = (y2 * x1 - y1 * x2) / (x1 - x2);
        t.limit = quadratic;
        t.limit_error = std::abs(quadratic - linear);
    }
    return traj;
}

Classification classify_limits(std::vector<EigTrajectory>& trajectories, const EulerSpectrum& euler_ref, double tol) {
    if (!(tol > 0.0)) throw DomainError("classify_limits: tol must be positive");
    const double extent = euler_ref.cluster_extent;
    const bool segment = extent > tol;
    auto segment_distance = [&](cplx z) { return std::hypot(z.real(), std::max(0.0, std::abs(z.imag()) - extent)); };

    std::vector<char> point_reached(euler_ref.point_eigenvalues.size(), 0);
    bool segment_reached = false;
    for (auto& t : trajectories) {
        if (t.ambiguous || !(t.limit_error <= tol)) {
            t.label = LimitLabel::Unresolved;
            continue;
        }
        bool persisted = false;
        for (std::size_t p = 0; p < euler_ref.point_eigenvalues.size(); ++p) {
            if (std::abs(t.limit - euler_ref.point_eigenvalues[p]) < tol) {
                point_reached[p] = 1;
                persisted = true;
            }
        }
        if (persisted) {
            t.label = LimitLabel::Persistence;
        } else if (segment && segment_distance(t.limit) < tol) {
            t.label = LimitLabel::Condensation;
            segment_reached = true;
        } else {
            t.label = LimitLabel::Singularity;
        }
    }

    Classification out{LimitLabel::Unresolved, {}, segment && !segment_reached};
    for (std::size_t p = 0; p < point_reached.size(); ++p)
        if (!point_reached[p]) out.addition_points.push_back(euler_ref.point_eigenvalues[p]);
    if (!trajectories.empty()) {
        // Trajectories start in descending real-part order, so the first one leads.
        out.class_label = trajectories.front().label;
    }
    return out;
}

}  // namespace nel::spectra

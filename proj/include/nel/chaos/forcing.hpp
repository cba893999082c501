#pragma once

#include <array>

namespace nel::chaos {

using Angles3 = std::array<double, 3>;

struct AbcParams {
    double A = 1.0;
    double B = 1.0;
    double C = 1.0;
};

/// Right-hand side of the ABC angle flow.
Angles3 abc_rhs(const AbcParams& p, const Angles3& theta);
/// One classical RK4 step; angles reduced to [0, 2pi).
Angles3 abc_step(const AbcParams& p, const Angles3& theta, double dt);
Angles3 wrap_angles(Angles3 theta);

struct ForcingSpec {
    enum class Mode { CosT, Quasiperiodic };
    Mode mode = Mode::CosT;
    double alpha0 = 0.0;
    std::array<double, 4> betas{};
    std::array<double, 4> omegas{};
    std::array<double, 4> phases{};
    double mu = 2.0;        ///< the chaotic clock enters as eps^mu * vartheta
    AbcParams abc{};
    Angles3 abc_state{};    ///< vartheta at t = 0

    /// Throws DomainError on invalid values (mu <= 1, non-finite entries).
    void validate() const;
};

const char* to_string(ForcingSpec::Mode m);

/// Forcing evaluator carrying the ABC substate. Calls must come with non-decreasing t;
/// vartheta is advanced to t with RK4 substeps of at most dt_sub.
class ForcingClock {
public:
    ForcingClock(const ForcingSpec& spec, double eps, double t0 = 0.0, Angles3 vartheta = {});

    double value(double t, double dt_sub);
    double time() const { return t_; }
    const Angles3& vartheta() const { return vartheta_; }

private:
    const ForcingSpec* spec_;
    double eps_;
    double t_;
    Angles3 vartheta_;
};

/// Stateless form: f(t, theta) for a given vartheta.
double force_value(const ForcingSpec& spec, double eps, double t, const Angles3& vartheta);

}  // namespace nel::chaos

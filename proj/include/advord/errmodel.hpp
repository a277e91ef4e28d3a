#pragma once

// Analytical model of the discretization error committed at the first interior
// cell when the time step is too small for the final time: truncation error of
// the one-sided boundary stencil, the per-step error recurrence, its closed
// form, the small-CFL expansion, and the exponential damping factor that
// decides whether the first-order term survives refinement. Also the remedy
// schedule that ties the time step to the grid so the factor dies out.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "advord/format.hpp"
#include "advord/manufactured.hpp"

namespace advord {

struct ErrorModelParams {
    double a = 1.0;        // advection speed
    double h = 0.0;        // grid spacing
    double mu = 0.0;       // CFL number a dt / h, in (0, 1]
    double c1 = 1.0;       // truncation-error constant; the model predicts orders, not magnitudes
    double t_final = 0.0;  // final time

    double dt() const { return mu * h / a; }
};

namespace detail {
inline void check_model_params(const ErrorModelParams& p) {
    if (!(p.a > 0.0)) throw std::invalid_argument("ErrorModelParams: a must be positive, got " + fmt17(p.a));
    if (!(p.h > 0.0)) throw std::invalid_argument("ErrorModelParams: h must be positive, got " + fmt17(p.h));
    if (!(p.mu > 0.0 && p.mu <= 1.0))
        throw std::invalid_argument("ErrorModelParams: mu must lie in (0, 1], got " + fmt17(p.mu));
    if (!(p.t_final >= 0.0))
        throw std::invalid_argument("ErrorModelParams: t_final must be non-negative, got " + fmt17(p.t_final));
}
}  // namespace detail

// Exact local truncation error of the boundary-cell stencil (forward time
// difference plus first-order upwind space difference) applied to the
// manufactured solution: E = s(x1,t) - [(u(x1,t+dt) - u(x1,t))/dt
// + a (u(x1,t) - u(x1-h,t))/h]. First order in both dt and h.
inline double truncation_error_special(double a, double h, double dt, double x1, double t) {
    if (!(h > 0.0)) throw std::invalid_argument("truncation_error_special: h must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("truncation_error_special: dt must be positive");
    const double dudt = (u_exact(x1, t + dt) - u_exact(x1, t)) / dt;
    const double dudx = (u_exact(x1, t) - u_exact(x1 - h, t)) / h;
    const ProblemSpec spec(a);
    return forcing(spec, x1, t) - (dudt + a * dudx);
}

// Steps e <- (1 - mu) e + dt E with the modeled constant truncation error
// E = c1 (dt + h), starting from exact initial data (e = 0).
inline double recurrence_simulate(const ErrorModelParams& p, long n_steps) {
    detail::check_model_params(p);
    if (n_steps < 0) throw std::invalid_argument("recurrence_simulate: n_steps must be non-negative");
    const double dt = p.dt();
    const double E = p.c1 * (dt + p.h);
    double e = 0.0;
    for (long i = 0; i < n_steps; ++i) e = (1.0 - p.mu) * e + dt * E;
    return e;
}

// Closed form of the recurrence: [dt c1 (dt + h) / mu] (1 - (1 - mu)^n).
// pow(0, 0) = 1 makes n = 0 return 0 for mu = 1 as well.
inline double closed_form(const ErrorModelParams& p, long n_steps) {
    detail::check_model_params(p);
    if (n_steps < 0) throw std::invalid_argument("closed_form: n_steps must be non-negative");
    const double dt = p.dt();
    const double E = p.c1 * (dt + p.h);
    return (dt * E / p.mu) * (1.0 - std::pow(1.0 - p.mu, static_cast<double>(n_steps)));
}

// The damping factor e^{-a t_final / h} multiplying the first-order error
// term. Near 1 it lets the term survive refinement; driven to 0 it removes it.
inline double exp_factor(double a, double t_final, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("exp_factor: h must be positive");
    return std::exp(-(a * t_final) / h);
}

struct ExpansionTerms {
    double first_order_term = 0.0;   // O(h), carries the damping factor
    double second_order_term = 0.0;  // O(h^2), survives as the factor dies
};

// Small-mu expansion of the closed form at n = a t_final / (mu h):
// first  = (mu c1 T_f / 2)(mu/a + 1) e^{-a T_f/h} h
// second = (c1 / a)(1 - e^{-a T_f/h})(mu/a + 1) h^2
inline ExpansionTerms expansion_error(const ErrorModelParams& p) {
    detail::check_model_params(p);
    const double f = std::exp(-(p.a * p.t_final) / p.h);
    ExpansionTerms terms;
    terms.first_order_term = (p.mu * p.c1 * p.t_final / 2.0) * (p.mu / p.a + 1.0) * f * p.h;
    terms.second_order_term = (p.c1 / p.a) * (1.0 - f) * (p.mu / p.a + 1.0) * p.h * p.h;
    return terms;
}

// Time-step rule dt(h) = mu h / a with mu fixed at O(1), final time tied to
// the coarsest grid's step: T_f = multiplier * mu * h_coarsest / a. Under
// refinement h = h_coarsest / 2^k the damping factor is e^{-2^k mu multiplier},
// which vanishes rapidly instead of staying near 1.
struct RemedySchedule {
    double a = 1.0;
    double mu = 1.0;
    double t_final = 0.0;
    double multiplier = 1.0;

    double dt_for(double h) const { return mu * h / a; }

    double predicted_factor(int level) const {
        const double n = static_cast<double>(1L << level);
        return std::exp(-(n * mu * multiplier));
    }
};

inline RemedySchedule remedy_schedule(double a, double mu, double h_coarsest, double t_final_multiplier = 1.0) {
    if (!(a > 0.0)) throw std::invalid_argument("remedy_schedule: a must be positive");
    if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("remedy_schedule: mu must lie in (0, 1]");
    if (!(h_coarsest > 0.0)) throw std::invalid_argument("remedy_schedule: h_coarsest must be positive");
    if (!(t_final_multiplier >= 1.0)) throw std::invalid_argument("remedy_schedule: multiplier must be at least 1");
    RemedySchedule s;
    s.a = a;
    s.mu = mu;
    s.t_final = t_final_multiplier * (mu * h_coarsest / a);
    s.multiplier = t_final_multiplier;
    return s;
}

}  // namespace advord

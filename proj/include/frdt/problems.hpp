#pragma once

// Problem definitions and recurrence drivers for the time-fractional
// Schrödinger family
//
//   i D_t^α u + u_xx + σ|u|²u = 0                       (LSE when σ = 0)
//   i D_t^α u = -½u_xx + u cos²x + |u|²u                 (trapping potential)
//   i D_t^α u + u_xx + σ(|u|²+|v|²)u = 0, same for v     (coupled)

#include <optional>
#include <string>
#include <string_view>

#include "frdt/spectrum.hpp"

namespace frdt {

enum class Family { LSE, NLSE, NLSE_TRAP, COUPLED };

// The five concrete problems: an equation family plus its initial data.
enum class Problem {
    LseCosh,    // LSE, u(x,0) = 1 + cosh ax
    LseExp,     // LSE, u(x,0) = e^{inx}
    NlsePlane,  // NLSE, u(x,0) = e^{inx}
    NlseTrap,   // trapping potential, u(x,0) = sin x
    Coupled,    // coupled NLSE, u(x,0) = a e^{inx}, v(x,0) = b e^{imx}
};

Family family_of(Problem p);
std::string_view problem_name(Problem p);
std::optional<Problem> parse_problem(std::string_view name);

struct ProblemSpec {
    Problem problem = Problem::LseCosh;
    double alpha = 1.0;
    double sigma = 0.0;
    double a = 1.0;
    double b = 1.0;
    double n = 1.0;
    double m = 1.0;
    int K = 10;

    Family family() const { return family_of(problem); }
    // Throws DomainError on out-of-range fields.
    void validate() const;
};

// Problem defaults for the reference test cases.
ProblemSpec default_spec(Problem p);

ExpField initial_u(const ProblemSpec& spec);
// Only meaningful for Problem::Coupled.
ExpField initial_v(const ProblemSpec& spec);

Spectrum solve_lse(const ProblemSpec& spec, const ExpField& u0);
Spectrum solve_nlse(const ProblemSpec& spec, const ExpField& u0);
Spectrum solve_nlse_trap(const ProblemSpec& spec, const ExpField& u0);

struct CoupledSpectrum {
    Spectrum u;
    Spectrum v;
};
CoupledSpectrum solve_coupled(const ProblemSpec& spec, const ExpField& u0, const ExpField& v0);

struct Solution {
    Spectrum u;
    std::optional<Spectrum> v;
};

// Dispatches on spec.problem with the problem's own initial data.
Solution solve(const ProblemSpec& spec);

}  // namespace frdt

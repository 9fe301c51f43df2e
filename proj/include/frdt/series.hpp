#pragma once

// Truncated fractional power series u(x,t) = Σ_{k=0}^{K} U_k(x) t^{kα},
// closed-form reference solutions, PDE residuals of computed spectra, and
// grid sampling into solution tables.

#include <complex>
#include <optional>
#include <vector>

#include "frdt/problems.hpp"
#include "frdt/spectrum.hpp"

namespace frdt {

class FractionalSeries {
public:
    explicit FractionalSeries(Spectrum spectrum) : spectrum_(std::move(spectrum)) {}

    const Spectrum& spectrum() const { return spectrum_; }
    double t0() const { return 0.0; }

    // Σ U_k(x) t^{kα} with compensated summation over k. Throws DomainError
    // for t < 0.
    cplx evaluate(double x, double t) const;
    cplx operator()(double x, double t) const { return evaluate(x, t); }

private:
    Spectrum spectrum_;
};

struct OracleValue {
    cplx u;
    std::optional<cplx> v;
};

// Closed-form solution. Linear problems have one for every α (via the
// Mittag-Leffler function); the nonlinear problems only at α = 1.
// Throws NoOracleError otherwise.
OracleValue oracle(const ProblemSpec& spec, double x, double t);
bool has_oracle(const ProblemSpec& spec);

// FRDT coefficients k = 0..K-1 of the governing equation's left-hand side
// evaluated on the given spectra. Every field is empty (up to rounding)
// when the spectra satisfy the recurrence. For the coupled problem the
// K residuals of the u equation are followed by the K of the v equation.
std::vector<ExpField> residual_spectrum(const ProblemSpec& spec, const Spectrum& u,
                                        const std::optional<Spectrum>& v = std::nullopt);

double max_residual(const std::vector<ExpField>& residuals);

// Residual fields together with, per field, the largest coefficient among
// the terms that were summed to form it. Large spectra cancel to within
// rounding of that scale, not to an absolute threshold.
struct Residuals {
    std::vector<ExpField> fields;
    std::vector<double> scales;

    double max_abs() const;
    // max_k |R_k| / max(1, scale_k)
    double max_relative() const;
};

Residuals residuals(const ProblemSpec& spec, const Spectrum& u,
                    const std::optional<Spectrum>& v = std::nullopt);

struct Grid {
    double min = 0.0;
    double max = 0.0;
    int count = 2;

    // Endpoints inclusive. Requires count >= 2.
    std::vector<double> points() const;
};

struct SolutionRow {
    double x, t;
    double re_u, im_u, abs_u;
    double re_v = 0.0, im_v = 0.0, abs_v = 0.0;
};

struct SolutionTable {
    bool coupled = false;
    std::vector<SolutionRow> rows;
};

// x-outer, t-inner. Requires both counts >= 2 and t_grid.min >= 0.
SolutionTable sample(const FractionalSeries& u, const std::optional<FractionalSeries>& v,
                     const Grid& x_grid, const Grid& t_grid);

}  // namespace frdt

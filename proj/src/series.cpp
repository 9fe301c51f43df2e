#include "frdt/series.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "frdt/errors.hpp"
#include "frdt/fractional.hpp"

namespace frdt {

namespace {

constexpr cplx kI{0.0, 1.0};

// Neumaier summation, applied to each component separately.
class CompensatedSum {
public:
    void add(cplx v) {
        add_one(re_, re_c_, v.real());
        add_one(im_, im_c_, v.imag());
    }
    cplx value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_one(double& sum, double& comp, double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0;
    double im_ = 0.0, im_c_ = 0.0;
};

constexpr double kMlTol = 1e-17;

}  // namespace

cplx FractionalSeries::evaluate(double x, double t) const {
    if (!(t >= 0.0)) {
        throw DomainError("FractionalSeries::evaluate: t must be non-negative, got " +
                          std::to_string(t));
    }
    if (t == 0.0) {
        return spectrum_[0].eval(x);
    }
    const double log_t = std::log(t);
    const double alpha = spectrum_.alpha();
    CompensatedSum sum;
    for (std::size_t k = 0; k < spectrum_.size(); ++k) {
        const double basis = k == 0 ? 1.0 : std::exp(static_cast<double>(k) * alpha * log_t);
        sum.add(spectrum_[k].eval(x) * basis);
    }
    return sum.value();
}

bool has_oracle(const ProblemSpec& spec) {
    return spec.family() == Family::LSE || spec.alpha == 1.0;
}

OracleValue oracle(const ProblemSpec& spec, double x, double t) {
    spec.validate();
    if (!(t >= 0.0)) {
        throw DomainError("oracle: t must be non-negative");
    }
    if (!has_oracle(spec)) {
        throw NoOracleError("oracle: no closed form for " + std::string(problem_name(spec.problem)) +
                            " at alpha = " + std::to_string(spec.alpha));
    }
    const double ta = t == 0.0 ? 0.0 : std::pow(t, spec.alpha);
    switch (spec.problem) {
        case Problem::LseCosh: {
            const cplx z = kI * spec.a * spec.a * ta;
            return {1.0 + std::cosh(spec.a * x) * mittag_leffler(spec.alpha, z, kMlTol), std::nullopt};
        }
        case Problem::LseExp: {
            const cplx z = -kI * spec.n * spec.n * ta;
            return {std::exp(kI * spec.n * x) * mittag_leffler(spec.alpha, z, kMlTol), std::nullopt};
        }
        case Problem::NlsePlane:
            return {std::exp(kI * (spec.n * x + (spec.sigma - spec.n * spec.n) * t)), std::nullopt};
        case Problem::NlseTrap:
            return {std::exp(-1.5 * kI * t) * std::sin(x), std::nullopt};
        case Problem::Coupled: {
            const double density = spec.sigma * (spec.a * spec.a + spec.b * spec.b);
            const cplx u = spec.a * std::exp(kI * (spec.n * x + (density - spec.n * spec.n) * t));
            const cplx v = spec.b * std::exp(kI * (spec.m * x + (density - spec.m * spec.m) * t));
            return {u, v};
        }
    }
    throw UsageError("oracle: unknown problem");
}

Residuals residuals(const ProblemSpec& spec, const Spectrum& u, const std::optional<Spectrum>& v) {
    spec.validate();
    const bool coupled = spec.family() == Family::COUPLED;
    if (coupled != v.has_value()) {
        throw UsageError(coupled ? "residual_spectrum: coupled problem needs both spectra"
                                 : "residual_spectrum: second spectrum given for a scalar problem");
    }
    if (u.alpha() != spec.alpha || (v && v->alpha() != spec.alpha)) {
        throw UsageError("residual_spectrum: spectrum alpha does not match the problem");
    }
    if (u.order() < 1 || (v && v->size() != u.size())) {
        throw UsageError("residual_spectrum: spectra must share a truncation order >= 1");
    }

    Residuals out;
    auto push = [&](std::initializer_list<ExpField> parts) {
        ExpField sum;
        double scale = 0.0;
        for (const auto& p : parts) {
            sum = sum + p;
            scale = std::max(scale, p.max_coeff());
        }
        out.fields.push_back(std::move(sum));
        out.scales.push_back(scale);
    };

    const std::size_t order = u.order();
    const Spectrum cu = conj_spectrum(u);
    switch (spec.family()) {
        case Family::LSE:
            for (std::size_t k = 0; k < order; ++k) {
                push({deriv_shift(u, 1, k).scaled(kI), u[k].d2dx2()});
            }
            break;
        case Family::NLSE:
            for (std::size_t k = 0; k < order; ++k) {
                push({deriv_shift(u, 1, k).scaled(kI), u[k].d2dx2(),
                      conv3(cu, u, u, k).scaled(spec.sigma)});
            }
            break;
        case Family::NLSE_TRAP: {
            const ExpField potential = cos_squared_field();
            for (std::size_t k = 0; k < order; ++k) {
                push({deriv_shift(u, 1, k).scaled(kI), u[k].d2dx2().scaled(0.5),
                      -multiply(potential, u[k]), -conv3(cu, u, u, k)});
            }
            break;
        }
        case Family::COUPLED: {
            const Spectrum& vv = *v;
            const Spectrum cv = conj_spectrum(vv);
            // Density |u|² + |v|², shared by both equations.
            const Spectrum cuu = conv2_spectrum(cu, u);
            const Spectrum cvv = conv2_spectrum(cv, vv);
            std::vector<ExpField> rho;
            for (std::size_t k = 0; k < u.size(); ++k) rho.push_back(cuu[k] + cvv[k]);
            const Spectrum density(spec.alpha, std::move(rho));
            for (std::size_t k = 0; k < order; ++k) {
                push({deriv_shift(u, 1, k).scaled(kI), u[k].d2dx2(),
                      conv2(density, u, k).scaled(spec.sigma)});
            }
            for (std::size_t k = 0; k < order; ++k) {
                push({deriv_shift(vv, 1, k).scaled(kI), vv[k].d2dx2(),
                      conv2(density, vv, k).scaled(spec.sigma)});
            }
            break;
        }
    }
    return out;
}

std::vector<ExpField> residual_spectrum(const ProblemSpec& spec, const Spectrum& u,
                                        const std::optional<Spectrum>& v) {
    return residuals(spec, u, v).fields;
}

double max_residual(const std::vector<ExpField>& residuals) {
    double m = 0.0;
    for (const auto& r : residuals) m = std::max(m, r.max_coeff());
    return m;
}

double Residuals::max_abs() const { return max_residual(fields); }

double Residuals::max_relative() const {
    double m = 0.0;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        m = std::max(m, fields[k].max_coeff() / std::max(1.0, scales[k]));
    }
    return m;
}

std::vector<double> Grid::points() const {
    if (count < 2) {
        throw DomainError("Grid: count must be at least 2, got " + std::to_string(count));
    }
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw DomainError("Grid: bounds must be finite");
    }
    std::vector<double> pts(static_cast<std::size_t>(count));
    const double step = (max - min) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = min + step * i;
    pts.back() = max;
    return pts;
}

SolutionTable sample(const FractionalSeries& u, const std::optional<FractionalSeries>& v,
                     const Grid& x_grid, const Grid& t_grid) {
    if (t_grid.min < 0.0) {
        throw DomainError("sample: t grid must start at t >= 0");
    }
    const auto xs = x_grid.points();
    const auto ts = t_grid.points();
    SolutionTable table;
    table.coupled = v.has_value();
    table.rows.reserve(xs.size() * ts.size());
    for (double x : xs) {
        for (double t : ts) {
            const cplx uu = u.evaluate(x, t);
            SolutionRow row{x, t, uu.real(), uu.imag(), std::abs(uu)};
            if (v) {
                const cplx vv = v->evaluate(x, t);
                row.re_v = vv.real();
                row.im_v = vv.imag();
                row.abs_v = std::abs(vv);
            }
            table.rows.push_back(row);
        }
    }
    return table;
}

}  // namespace frdt

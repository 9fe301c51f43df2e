#include "frdt/problems.hpp"

#include <array>
#include <cmath>
#include <string>

#include "frdt/errors.hpp"
#include "frdt/fractional.hpp"

namespace frdt {

namespace {

constexpr cplx kI{0.0, 1.0};

struct NamedProblem {
    Problem problem;
    std::string_view name;
};

constexpr std::array<NamedProblem, 5> kProblems{{
    {Problem::LseCosh, "lse-cosh"},
    {Problem::LseExp, "lse-exp"},
    {Problem::NlsePlane, "nlse-plane"},
    {Problem::NlseTrap, "nlse-trap"},
    {Problem::Coupled, "coupled"},
}};

void require_family(const ProblemSpec& spec, Family f, const char* op) {
    spec.validate();
    if (spec.family() != f) {
        throw UsageError(std::string(op) + ": problem " + std::string(problem_name(spec.problem)) +
                         " belongs to a different equation family");
    }
}

// U_{k+1} = Γ(1+kα)/Γ(1+(k+1)α) · i · rhs_k
ExpField advance(double alpha, std::size_t k, const ExpField& rhs) {
    const double ratio = gamma(1.0 + static_cast<double>(k) * alpha) /
                         gamma(1.0 + static_cast<double>(k + 1) * alpha);
    return rhs.scaled(kI * ratio);
}

// Σ_{k2=0}^{k} Σ_{k1=0}^{k2} conj(A)_{k1} A_{k2-k1} W_{k-k2} over the
// coefficients stored so far.
ExpField cubic(const std::vector<ExpField>& conj_a, const std::vector<ExpField>& a,
               const std::vector<ExpField>& w, std::size_t k) {
    ExpField acc;
    for (std::size_t k2 = 0; k2 <= k; ++k2) {
        ExpField inner;
        for (std::size_t k1 = 0; k1 <= k2; ++k1) {
            inner = inner + multiply(conj_a[k1], a[k2 - k1]);
        }
        acc = acc + multiply(inner, w[k - k2]);
    }
    return acc;
}

}  // namespace

Family family_of(Problem p) {
    switch (p) {
        case Problem::LseCosh:
        case Problem::LseExp:
            return Family::LSE;
        case Problem::NlsePlane:
            return Family::NLSE;
        case Problem::NlseTrap:
            return Family::NLSE_TRAP;
        case Problem::Coupled:
            return Family::COUPLED;
    }
    throw UsageError("unknown problem");
}

std::string_view problem_name(Problem p) {
    for (const auto& np : kProblems) {
        if (np.problem == p) return np.name;
    }
    return "unknown";
}

std::optional<Problem> parse_problem(std::string_view name) {
    for (const auto& np : kProblems) {
        if (np.name == name) return np.problem;
    }
    return std::nullopt;
}

void ProblemSpec::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
    if (K < 1) {
        throw DomainError("truncation order K must be at least 1, got " + std::to_string(K));
    }
    for (double p : {sigma, a, b, n, m}) {
        if (!std::isfinite(p)) throw DomainError("problem parameters must be finite");
    }
}

ProblemSpec default_spec(Problem p) {
    ProblemSpec s;
    s.problem = p;
    switch (p) {
        case Problem::LseCosh:
            s.alpha = 0.9;
            s.sigma = 0.0;
            s.a = 2.0;
            s.K = 25;
            break;
        case Problem::LseExp:
            s.alpha = 0.5;
            s.sigma = 0.0;
            s.n = 3.0;
            s.K = 25;
            break;
        case Problem::NlsePlane:
            s.alpha = 0.9;
            s.sigma = 2.0;
            s.n = 1.0;
            s.K = 20;
            break;
        case Problem::NlseTrap:
            s.alpha = 0.5;
            s.sigma = 1.0;
            s.K = 16;
            break;
        case Problem::Coupled:
            s.alpha = 0.9;
            s.sigma = 2.0;
            s.a = 0.5;
            s.b = 0.5;
            s.n = 1.0;
            s.m = 1.5;
            s.K = 12;
            break;
    }
    return s;
}

ExpField initial_u(const ProblemSpec& spec) {
    switch (spec.problem) {
        case Problem::LseCosh:
            return make_initial(InitialKind::OnePlusCoshAx, std::array{spec.a});
        case Problem::LseExp:
        case Problem::NlsePlane:
            return make_initial(InitialKind::ExpInx, std::array{spec.n});
        case Problem::NlseTrap:
            return make_initial(InitialKind::SinX);
        case Problem::Coupled:
            return make_initial(InitialKind::AExpInx, std::array{spec.a, spec.n});
    }
    throw UsageError("initial_u: unknown problem");
}

ExpField initial_v(const ProblemSpec& spec) {
    if (spec.problem != Problem::Coupled) {
        throw UsageError("initial_v: only the coupled problem has a second component");
    }
    return make_initial(InitialKind::AExpInx, std::array{spec.b, spec.m});
}

Spectrum solve_lse(const ProblemSpec& spec, const ExpField& u0) {
    require_family(spec, Family::LSE, "solve_lse");
    std::vector<ExpField> u{u0};
    for (std::size_t k = 0; k < static_cast<std::size_t>(spec.K); ++k) {
        u.push_back(advance(spec.alpha, k, u[k].d2dx2()));
    }
    return Spectrum(spec.alpha, std::move(u));
}

Spectrum solve_nlse(const ProblemSpec& spec, const ExpField& u0) {
    require_family(spec, Family::NLSE, "solve_nlse");
    std::vector<ExpField> u{u0};
    std::vector<ExpField> cu{u0.conjugate()};
    for (std::size_t k = 0; k < static_cast<std::size_t>(spec.K); ++k) {
        ExpField rhs = u[k].d2dx2();
        if (spec.sigma != 0.0) {
            rhs = rhs + cubic(cu, u, u, k).scaled(spec.sigma);
        }
        u.push_back(advance(spec.alpha, k, rhs));
        cu.push_back(u.back().conjugate());
    }
    return Spectrum(spec.alpha, std::move(u));
}

Spectrum solve_nlse_trap(const ProblemSpec& spec, const ExpField& u0) {
    require_family(spec, Family::NLSE_TRAP, "solve_nlse_trap");
    const ExpField potential = cos_squared_field();
    std::vector<ExpField> u{u0};
    std::vector<ExpField> cu{u0.conjugate()};
    for (std::size_t k = 0; k < static_cast<std::size_t>(spec.K); ++k) {
        const ExpField rhs = u[k].d2dx2().scaled(0.5) - multiply(u[k], potential) - cubic(cu, u, u, k);
        u.push_back(advance(spec.alpha, k, rhs));
        cu.push_back(u.back().conjugate());
    }
    return Spectrum(spec.alpha, std::move(u));
}

CoupledSpectrum solve_coupled(const ProblemSpec& spec, const ExpField& u0, const ExpField& v0) {
    require_family(spec, Family::COUPLED, "solve_coupled");
    std::vector<ExpField> u{u0};
    std::vector<ExpField> v{v0};
    std::vector<ExpField> cu{u0.conjugate()};
    std::vector<ExpField> cv{v0.conjugate()};
    for (std::size_t k = 0; k < static_cast<std::size_t>(spec.K); ++k) {
        const ExpField rhs_u =
            u[k].d2dx2() + (cubic(cu, u, u, k) + cubic(cv, v, u, k)).scaled(spec.sigma);
        const ExpField rhs_v =
            v[k].d2dx2() + (cubic(cu, u, v, k) + cubic(cv, v, v, k)).scaled(spec.sigma);
        u.push_back(advance(spec.alpha, k, rhs_u));
        v.push_back(advance(spec.alpha, k, rhs_v));
        cu.push_back(u.back().conjugate());
        cv.push_back(v.back().conjugate());
    }
    return {Spectrum(spec.alpha, std::move(u)), Spectrum(spec.alpha, std::move(v))};
}

Solution solve(const ProblemSpec& spec) {
    switch (spec.family()) {
        case Family::LSE:
            return {solve_lse(spec, initial_u(spec)), std::nullopt};
        case Family::NLSE:
            return {solve_nlse(spec, initial_u(spec)), std::nullopt};
        case Family::NLSE_TRAP:
            return {solve_nlse_trap(spec, initial_u(spec)), std::nullopt};
        case Family::COUPLED: {
            auto uv = solve_coupled(spec, initial_u(spec), initial_v(spec));
            return {std::move(uv.u), std::move(uv.v)};
        }
    }
    throw UsageError("solve: unknown family");
}

}  // namespace frdt

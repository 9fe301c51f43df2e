#include "frdt/fractional.hpp"

#include <cmath>
#include <string>

#include "frdt/errors.hpp"

namespace frdt {

double gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("gamma: argument must be finite and positive, got " + std::to_string(x));
    }
    return std::tgamma(x);
}

namespace {

// z^k / Γ(1+kα); falls back to logarithms once z^k or Γ would overflow.
cplx ml_term(cplx z_pow_k, cplx z, std::size_t k, double alpha) {
    const double g_arg = 1.0 + static_cast<double>(k) * alpha;
    if (g_arg < 170.0 && std::abs(z_pow_k) < 1e300) {
        return z_pow_k / std::tgamma(g_arg);
    }
    return std::exp(static_cast<double>(k) * std::log(z) - std::lgamma(g_arg));
}

}  // namespace

cplx mittag_leffler(double alpha, cplx z, double tol, std::size_t max_terms) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("mittag_leffler: alpha must be positive");
    }
    if (!(tol > 0.0)) {
        throw DomainError("mittag_leffler: tol must be positive");
    }
    if (z == cplx{0.0, 0.0}) {
        return {1.0, 0.0};
    }

    cplx sum{1.0, 0.0};
    cplx z_pow{1.0, 0.0};
    int small_run = 0;
    double last_mag = 1.0;
    for (std::size_t k = 1; k < max_terms; ++k) {
        if (std::abs(z_pow) < 1e300) z_pow *= z;
        const cplx term = ml_term(z_pow, z, k, alpha);
        sum += term;
        last_mag = std::abs(term);
        if (!std::isfinite(last_mag) || !std::isfinite(std::abs(sum))) {
            throw ConvergenceError("mittag_leffler: partial sum overflowed", last_mag);
        }
        if (last_mag < tol * std::abs(sum)) {
            if (++small_run == 3) {
                return sum;
            }
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("mittag_leffler: no convergence within " + std::to_string(max_terms) +
                               " terms, last term magnitude " + std::to_string(last_mag),
                           last_mag);
}

PowerTerm caputo_power(double gamma_exp, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("caputo_power: alpha must be positive");
    }
    if (!(gamma_exp >= 0.0) || !std::isfinite(gamma_exp)) {
        throw DomainError("caputo_power: exponent must be non-negative");
    }
    const bool integral = std::floor(gamma_exp) == gamma_exp;
    if (integral && gamma_exp < std::ceil(alpha)) {
        return {0.0, {0.0, 0.0}};
    }
    if (gamma_exp < alpha) {
        throw DomainError("caputo_power: non-integer exponent below the derivative order");
    }
    return {gamma_exp - alpha, gamma(1.0 + gamma_exp) / gamma(1.0 + gamma_exp - alpha)};
}

PowerTerm rl_integral_power(double gamma_exp, double alpha) {
    if (!(gamma_exp > -1.0) || !std::isfinite(gamma_exp)) {
        throw DomainError("rl_integral_power: exponent must exceed -1");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw DomainError("rl_integral_power: alpha must be non-negative");
    }
    if (alpha == 0.0) {
        return {gamma_exp, {1.0, 0.0}};
    }
    return {gamma_exp + alpha, gamma(1.0 + gamma_exp) / gamma(1.0 + gamma_exp + alpha)};
}

double delta(double k) { return k == 0.0 ? 1.0 : 0.0; }

}  // namespace frdt

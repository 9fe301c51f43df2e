#pragma once

// Special-function kernel for fractional calculus on power functions:
// Gamma, the one-parameter Mittag-Leffler function, and the Caputo /
// Riemann-Liouville rules acting on monomials.

#include <complex>
#include <cstddef>

namespace frdt {

using cplx = std::complex<double>;

// coefficient * s^exponent, where s is the independent variable (t or x).
struct PowerTerm {
    double exponent = 0.0;
    cplx coefficient{0.0, 0.0};

    bool is_zero() const { return coefficient == cplx{0.0, 0.0}; }
};

// Γ(x) for real x > 0. Throws DomainError otherwise.
double gamma(double x);

inline constexpr std::size_t kMittagLefflerMaxTerms = 20000;

// E_α(z) = Σ z^k / Γ(1+kα) by direct partial summation. Summation stops once
// three consecutive term magnitudes fall below tol·|partial sum|. Throws
// ConvergenceError if that does not happen within max_terms.
cplx mittag_leffler(double alpha, cplx z, double tol = 1e-16,
                    std::size_t max_terms = kMittagLefflerMaxTerms);

// Caputo derivative of order alpha applied to s^gamma_exp:
//   Γ(1+γ)/Γ(1+γ-α) s^{γ-α}.
// Integer powers below ⌈α⌉ are annihilated (zero term). Non-integer
// gamma_exp < alpha is rejected with DomainError.
PowerTerm caputo_power(double gamma_exp, double alpha);

// Riemann-Liouville integral of order alpha applied to s^gamma_exp:
//   Γ(1+γ)/Γ(1+γ+α) s^{γ+α}.  Requires gamma_exp > -1, alpha >= 0.
PowerTerm rl_integral_power(double gamma_exp, double alpha);

// Kronecker delta on an exact real argument.
double delta(double k);

}  // namespace frdt

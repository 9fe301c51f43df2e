#pragma once

// Spectrum of a function w(x,t) = Σ_k W_k(x) t^{kα} and the transform rules
// used to turn a time-fractional PDE into a recurrence on the W_k.

#include <cstddef>
#include <vector>

#include "frdt/expfield.hpp"

namespace frdt {

class Spectrum {
public:
    // Requires alpha in (0, 1] and at least one coefficient.
    Spectrum(double alpha, std::vector<ExpField> coeffs);

    double alpha() const { return alpha_; }
    std::size_t size() const { return coeffs_.size(); }
    // Truncation order K (index of the last coefficient).
    std::size_t order() const { return coeffs_.size() - 1; }

    const ExpField& operator[](std::size_t k) const { return coeffs_[k]; }
    // Bounds-checked; throws InsufficientOrderError.
    const ExpField& at(std::size_t k) const;

    const std::vector<ExpField>& coeffs() const { return coeffs_; }

    // Returns a copy with coefficient k replaced.
    Spectrum with_coeff(std::size_t k, ExpField value) const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    double alpha_;
    std::vector<ExpField> coeffs_;
};

// Transform of the conjugate function: coefficientwise conjugation, valid
// because t^{kα} is real for t >= 0.
Spectrum conj_spectrum(const Spectrum& u);

// (u v)_k = Σ_{r=0}^{k} U_r V_{k-r}
ExpField conv2(const Spectrum& u, const Spectrum& v, std::size_t k);

// Spectrum of the product u v, truncated to the shorter operand.
Spectrum conv2_spectrum(const Spectrum& u, const Spectrum& v);

// (u v w)_k = Σ_{r=0}^{k} Σ_{i=0}^{r} U_i V_{r-i} W_{k-r}
ExpField conv3(const Spectrum& u, const Spectrum& v, const Spectrum& w, std::size_t k);

// Transform of D_t^{Nα} u at index k: Γ(1+(k+N)α)/Γ(1+kα) U_{k+N}.
ExpField deriv_shift(const Spectrum& u, std::size_t n, std::size_t k);

// Transform of x^m t^n for k = 0..order: δ(kα - n). Only m = 0 is
// representable; m > 0 throws UnsupportedRepresentationError.
Spectrum monomial_spectrum(int m_pow, int n_pow, double alpha, std::size_t order);

}  // namespace frdt

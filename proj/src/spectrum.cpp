#include "frdt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frdt/errors.hpp"
#include "frdt/fractional.hpp"

namespace frdt {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("Spectrum: alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
}

void require_index(const Spectrum& s, std::size_t k, const char* op) {
    if (k >= s.size()) {
        throw InsufficientOrderError(std::string(op) + ": index " + std::to_string(k) +
                                     " beyond truncation order " + std::to_string(s.order()));
    }
}

void require_same_alpha(const Spectrum& a, const Spectrum& b, const char* op) {
    if (a.alpha() != b.alpha()) {
        throw DomainError(std::string(op) + ": operands have different fractional orders");
    }
}

}  // namespace

Spectrum::Spectrum(double alpha, std::vector<ExpField> coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
    check_alpha(alpha_);
    if (coeffs_.empty()) {
        throw DomainError("Spectrum: at least one coefficient is required");
    }
}

const ExpField& Spectrum::at(std::size_t k) const {
    require_index(*this, k, "Spectrum::at");
    return coeffs_[k];
}

Spectrum Spectrum::with_coeff(std::size_t k, ExpField value) const {
    require_index(*this, k, "Spectrum::with_coeff");
    Spectrum copy = *this;
    copy.coeffs_[k] = std::move(value);
    return copy;
}

Spectrum conj_spectrum(const Spectrum& u) {
    std::vector<ExpField> out;
    out.reserve(u.size());
    for (const auto& c : u.coeffs()) out.push_back(c.conjugate());
    return Spectrum(u.alpha(), std::move(out));
}

ExpField conv2(const Spectrum& u, const Spectrum& v, std::size_t k) {
    require_same_alpha(u, v, "conv2");
    require_index(u, k, "conv2");
    require_index(v, k, "conv2");
    ExpField acc;
    for (std::size_t r = 0; r <= k; ++r) {
        acc = acc + multiply(u[r], v[k - r]);
    }
    return acc;
}

Spectrum conv2_spectrum(const Spectrum& u, const Spectrum& v) {
    const std::size_t len = std::min(u.size(), v.size());
    std::vector<ExpField> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) out.push_back(conv2(u, v, k));
    return Spectrum(u.alpha(), std::move(out));
}

ExpField conv3(const Spectrum& u, const Spectrum& v, const Spectrum& w, std::size_t k) {
    require_same_alpha(u, v, "conv3");
    require_same_alpha(u, w, "conv3");
    require_index(u, k, "conv3");
    require_index(v, k, "conv3");
    require_index(w, k, "conv3");
    ExpField acc;
    for (std::size_t r = 0; r <= k; ++r) {
        ExpField inner;
        for (std::size_t i = 0; i <= r; ++i) {
            inner = inner + multiply(u[i], v[r - i]);
        }
        acc = acc + multiply(inner, w[k - r]);
    }
    return acc;
}

ExpField deriv_shift(const Spectrum& u, std::size_t n, std::size_t k) {
    require_index(u, k + n, "deriv_shift");
    if (n == 0) return u[k];
    const double a = u.alpha();
    const double ratio = gamma(1.0 + static_cast<double>(k + n) * a) /
                         gamma(1.0 + static_cast<double>(k) * a);
    return u[k + n].scaled(ratio);
}

Spectrum monomial_spectrum(int m_pow, int n_pow, double alpha, std::size_t order) {
    if (m_pow < 0 || n_pow < 0) {
        throw DomainError("monomial_spectrum: powers must be non-negative");
    }
    if (m_pow != 0) {
        throw UnsupportedRepresentationError(
            "monomial_spectrum: x^m with m > 0 is not an exponential sum");
    }
    check_alpha(alpha);
    std::vector<ExpField> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        const double d = delta(static_cast<double>(k) * alpha - static_cast<double>(n_pow));
        out.push_back(ExpField::constant(d));
    }
    return Spectrum(alpha, std::move(out));
}

}  // namespace frdt

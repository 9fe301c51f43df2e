#pragma once

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "frdt/expfield.hpp"
#include "frdt/spectrum.hpp"

namespace oracles {

using cplx = std::complex<double>;

// Γ(x) = 2 ∫_0^∞ e^{-u²} u^{2x-1} du (substitution t = u²), composite
// Simpson on [0, 12]. Accurate to ~1e-14 relative for x in [0.5, 20].
inline double gamma_quadrature(double x) {
    const int n = 24000;
    const double hi = 12.0, h = hi / n;
    auto f = [x](double u) { return u == 0.0 ? (x == 0.5 ? 1.0 : 0.0) : std::exp(-u * u) * std::pow(u, 2 * x - 1); };
    long double s = f(0.0) + f(hi);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(i * h);
    return static_cast<double>(2.0L * s * h / 3.0L);
}

using mp_float = boost::multiprecision::cpp_bin_float_50;

// Σ_{k<terms} z^k / Γ(1+kα) in 50-digit arithmetic.
inline cplx mittag_leffler_mp(double alpha, cplx z, int terms = 400) {
    mp_float re = 0, im = 0;
    mp_float pr = 1, pi = 0;  // z^k
    const mp_float zr = z.real(), zi = z.imag();
    for (int k = 0; k < terms; ++k) {
        const mp_float g = boost::multiprecision::tgamma(mp_float(1) + mp_float(k) * mp_float(alpha));
        re += pr / g;
        im += pi / g;
        const mp_float nr = pr * zr - pi * zi;
        const mp_float ni = pr * zi + pi * zr;
        pr = nr;
        pi = ni;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

// Brute-force product of two exponential sums: every term pair, summed
// into a map keyed by the exact rate.
using RateKey = std::pair<double, double>;
using TermMap = std::map<RateKey, cplx>;

inline TermMap expand(const frdt::ExpField& f) {
    TermMap m;
    for (const auto& t : f.terms()) m[{t.rate.real(), t.rate.imag()}] += t.coeff;
    return m;
}

inline TermMap poly_mul(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ra, ca] : a) {
        for (const auto& [rb, cb] : b) {
            out[{ra.first + rb.first, ra.second + rb.second}] += ca * cb;
        }
    }
    return out;
}

inline TermMap poly_add(TermMap a, const TermMap& b) {
    for (const auto& [r, c] : b) a[r] += c;
    return a;
}

inline frdt::ExpField to_field(const TermMap& m) {
    std::vector<frdt::ExpTerm> terms;
    for (const auto& [r, c] : m) terms.push_back({c, {r.first, r.second}});
    return frdt::ExpField(std::move(terms));
}

// Coefficients of (Σ U_k s^k)(Σ V_k s^k) as a dense polynomial in s.
inline std::vector<frdt::ExpField> cauchy_product(const frdt::Spectrum& u, const frdt::Spectrum& v) {
    std::vector<TermMap> prod(u.size() + v.size() - 1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            prod[i + j] = poly_add(prod[i + j], poly_mul(expand(u[i]), expand(v[j])));
        }
    }
    std::vector<frdt::ExpField> out;
    for (const auto& m : prod) out.push_back(to_field(m));
    return out;
}

// Random exponential sums with small-integer coefficients and rates, so
// every product and sum is exact in double precision.
inline frdt::ExpField random_integer_field(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> small(-4, 4);
    std::vector<frdt::ExpTerm> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        terms.push_back({{double(small(rng)), double(small(rng))}, {double(small(rng) / 2), double(small(rng))}});
    }
    return frdt::ExpField(std::move(terms));
}

// Random smooth fields: real coefficients in [-1,1]², rates with
// |Re λ| <= 1 and |Im λ| <= 3.
inline frdt::ExpField random_field(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<frdt::ExpTerm> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        terms.push_back({{unit(rng), unit(rng)}, {unit(rng), 3.0 * unit(rng)}});
    }
    return frdt::ExpField(std::move(terms));
}

inline frdt::Spectrum random_spectrum(std::mt19937_64& rng, std::size_t len, bool integer,
                                      double alpha = 0.5) {
    std::vector<frdt::ExpField> c;
    for (std::size_t k = 0; k < len; ++k) {
        c.push_back(integer ? random_integer_field(rng, 3) : random_field(rng, 3));
    }
    return frdt::Spectrum(alpha, std::move(c));
}

}  // namespace oracles

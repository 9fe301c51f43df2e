#pragma once

// Exact spatial functions of the form Σ c_j e^{λ_j x} with complex c_j, λ_j.
//
// Every spatial coefficient produced by the recurrences lives in this class:
// initial data (e^{inx}, 1 + cosh ax, sin x), the trapping potential cos²x,
// and all products, conjugates and second derivatives of those. Keeping the
// representation exact means spectrum coefficients can be compared term by
// term against closed forms instead of sampled on a grid.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

namespace frdt {

using cplx = std::complex<double>;

struct ExpTerm {
    cplx coeff;
    cplx rate;

    friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

// Rates closer than this (on both parts) are treated as one frequency.
inline constexpr double kRateMergeEps = 1e-12;
// Coefficients at or below this magnitude are dropped.
inline constexpr double kCoeffPruneEps = 1e-14;
inline constexpr std::size_t kDefaultTermCap = 4096;

// Immutable value type. The term list is always canonical: rates merged,
// sorted lexicographically by (Re λ, Im λ), negligible coefficients pruned.
class ExpField {
public:
    ExpField() = default;
    explicit ExpField(std::vector<ExpTerm> terms);

    static ExpField constant(cplx c);
    static ExpField exponential(cplx coeff, cplx rate);

    std::span<const ExpTerm> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Largest |c_j|, 0 for the empty field.
    double max_coeff() const;

    // Pointwise value at real x. Throws EvaluationError on overflow.
    cplx eval(double x) const;
    cplx operator()(double x) const { return eval(x); }

    ExpField scaled(cplx c) const;
    ExpField conjugate() const;
    ExpField d2dx2() const;

    friend ExpField operator+(const ExpField& f, const ExpField& g);
    friend ExpField operator-(const ExpField& f, const ExpField& g);
    friend ExpField operator-(const ExpField& f) { return f.scaled(-1.0); }
    friend ExpField operator*(cplx c, const ExpField& f) { return f.scaled(c); }
    friend ExpField operator*(const ExpField& f, const ExpField& g);

    // Exact (bitwise) term-set equality.
    friend bool operator==(const ExpField&, const ExpField&) = default;

private:
    std::vector<ExpTerm> terms_;
};

// Sorts, merges and prunes a raw term list in place.
void canonicalize(std::vector<ExpTerm>& terms);

// Pairwise product of all terms. Throws BlowUpError when the canonical
// result holds more than term_cap terms.
ExpField multiply(const ExpField& f, const ExpField& g, std::size_t term_cap = kDefaultTermCap);

inline ExpField add(const ExpField& f, const ExpField& g) { return f + g; }
inline ExpField scale(const ExpField& f, cplx c) { return f.scaled(c); }
inline ExpField conjugate(const ExpField& f) { return f.conjugate(); }
inline ExpField d2dx2(const ExpField& f) { return f.d2dx2(); }
inline cplx eval(const ExpField& f, double x) { return f.eval(x); }

// Same rate set (within kRateMergeEps) and every coefficient pair within
// coeff_tol absolute.
bool approx_equal(const ExpField& f, const ExpField& g, double coeff_tol);

// Supremum of |f - g| coefficients; convenient for tolerance checks.
double coeff_distance(const ExpField& f, const ExpField& g);

enum class InitialKind {
    ExpInx,         // e^{inx}; params {n}
    OnePlusCoshAx,  // 1 + cosh(ax); params {a}
    SinX,           // sin x; no params
    AExpInx,        // a e^{inx}; params {a, n}
};

ExpField make_initial(InitialKind kind, std::span<const double> params = {});

// cos x and cos²x = ½ + ¼e^{2ix} + ¼e^{-2ix}.
ExpField cos_field();
ExpField cos_squared_field();

// Debug serialization: [{re_coeff, im_coeff, re_rate, im_rate}, ...]
nlohmann::json to_json(const ExpField& f);
ExpField field_from_json(const nlohmann::json& j);

}  // namespace frdt

#include "frdt/expfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frdt/errors.hpp"

namespace frdt {

namespace {

bool rate_less(const ExpTerm& a, const ExpTerm& b) {
    if (a.rate.real() != b.rate.real()) return a.rate.real() < b.rate.real();
    return a.rate.imag() < b.rate.imag();
}

bool rate_close(cplx a, cplx b) {
    return std::abs(a.real() - b.real()) <= kRateMergeEps &&
           std::abs(a.imag() - b.imag()) <= kRateMergeEps;
}

// log(DBL_MAX); exponents beyond this overflow e^{Re(λ)x}.
const double kMaxExponent = std::log(std::numeric_limits<double>::max());

}  // namespace

void canonicalize(std::vector<ExpTerm>& terms) {
    std::stable_sort(terms.begin(), terms.end(), rate_less);
    std::vector<ExpTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && rate_close(out.back().rate, t.rate)) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(t);
        }
    }
    std::erase_if(out, [](const ExpTerm& t) { return std::abs(t.coeff) <= kCoeffPruneEps; });
    // Adding +0.0 folds negative zeros so equal fields serialize identically.
    for (auto& t : out) {
        t.coeff += cplx(0.0, 0.0);
        t.rate += cplx(0.0, 0.0);
    }
    terms = std::move(out);
}

ExpField::ExpField(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
    canonicalize(terms_);
}

ExpField ExpField::constant(cplx c) { return ExpField({ExpTerm{c, {0.0, 0.0}}}); }

ExpField ExpField::exponential(cplx coeff, cplx rate) { return ExpField({ExpTerm{coeff, rate}}); }

double ExpField::max_coeff() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
    return m;
}

cplx ExpField::eval(double x) const {
    if (!std::isfinite(x)) {
        throw EvaluationError("ExpField::eval: non-finite x");
    }
    cplx sum{0.0, 0.0};
    for (const auto& t : terms_) {
        const double growth = t.rate.real() * x;
        if (growth > kMaxExponent) {
            throw EvaluationError("ExpField::eval: e^{" + std::to_string(growth) +
                                  "} overflows at x = " + std::to_string(x));
        }
        sum += t.coeff * std::exp(t.rate * x);
    }
    return sum;
}

ExpField ExpField::scaled(cplx c) const {
    std::vector<ExpTerm> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return ExpField(std::move(out));
}

ExpField ExpField::conjugate() const {
    std::vector<ExpTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({std::conj(t.coeff), std::conj(t.rate)});
    return ExpField(std::move(out));
}

ExpField ExpField::d2dx2() const {
    std::vector<ExpTerm> out = terms_;
    for (auto& t : out) t.coeff *= t.rate * t.rate;
    return ExpField(std::move(out));
}

ExpField operator+(const ExpField& f, const ExpField& g) {
    std::vector<ExpTerm> out;
    out.reserve(f.size() + g.size());
    out.insert(out.end(), f.terms_.begin(), f.terms_.end());
    out.insert(out.end(), g.terms_.begin(), g.terms_.end());
    return ExpField(std::move(out));
}

ExpField operator-(const ExpField& f, const ExpField& g) { return f + g.scaled(-1.0); }

ExpField operator*(const ExpField& f, const ExpField& g) { return multiply(f, g); }

ExpField multiply(const ExpField& f, const ExpField& g, std::size_t term_cap) {
    std::vector<ExpTerm> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            out.push_back({a.coeff * b.coeff, a.rate + b.rate});
        }
    }
    ExpField result(std::move(out));
    if (result.size() > term_cap) {
        throw BlowUpError("multiply: product has " + std::to_string(result.size()) +
                          " terms, cap is " + std::to_string(term_cap));
    }
    return result;
}

bool approx_equal(const ExpField& f, const ExpField& g, double coeff_tol) {
    if (f.size() != g.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& a = f.terms()[i];
        const auto& b = g.terms()[i];
        if (!rate_close(a.rate, b.rate) || std::abs(a.coeff - b.coeff) > coeff_tol) return false;
    }
    return true;
}

double coeff_distance(const ExpField& f, const ExpField& g) { return (f - g).max_coeff(); }

ExpField make_initial(InitialKind kind, std::span<const double> params) {
    auto need = [&](std::size_t count, const char* name) {
        if (params.size() != count) {
            throw DomainError(std::string("make_initial(") + name + "): expected " +
                              std::to_string(count) + " parameter(s), got " +
                              std::to_string(params.size()));
        }
        for (double p : params) {
            if (!std::isfinite(p)) {
                throw DomainError(std::string("make_initial(") + name + "): non-finite parameter");
            }
        }
    };
    const cplx i{0.0, 1.0};
    switch (kind) {
        case InitialKind::ExpInx:
            need(1, "exp_inx");
            return ExpField::exponential(1.0, i * params[0]);
        case InitialKind::OnePlusCoshAx: {
            need(1, "one_plus_cosh_ax");
            const double a = params[0];
            return ExpField({{1.0, 0.0}, {0.5, a}, {0.5, -a}});
        }
        case InitialKind::SinX:
            need(0, "sin_x");
            return ExpField({{1.0 / (2.0 * i), i}, {-1.0 / (2.0 * i), -i}});
        case InitialKind::AExpInx:
            need(2, "a_exp_inx");
            return ExpField::exponential(params[0], i * params[1]);
    }
    throw DomainError("make_initial: unknown kind");
}

ExpField cos_field() {
    const cplx i{0.0, 1.0};
    return ExpField({{0.5, i}, {0.5, -i}});
}

ExpField cos_squared_field() {
    const cplx i{0.0, 1.0};
    return ExpField({{0.5, 0.0}, {0.25, 2.0 * i}, {0.25, -2.0 * i}});
}

nlohmann::json to_json(const ExpField& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        arr.push_back({{"re_coeff", t.coeff.real()},
                       {"im_coeff", t.coeff.imag()},
                       {"re_rate", t.rate.real()},
                       {"im_rate", t.rate.imag()}});
    }
    return arr;
}

ExpField field_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw UsageError("field_from_json: expected an array of terms");
    }
    std::vector<ExpTerm> terms;
    for (const auto& t : j) {
        try {
            terms.push_back({{t.at("re_coeff").get<double>(), t.at("im_coeff").get<double>()},
                             {t.at("re_rate").get<double>(), t.at("im_rate").get<double>()}});
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("field_from_json: ") + e.what());
        }
    }
    return ExpField(std::move(terms));
}

}  // namespace frdt

#include <doctest.h>

#include <random>

#include "frdt/errors.hpp"
#include "frdt/fractional.hpp"
#include "frdt/spectrum.hpp"
#include "oracles.hpp"

using frdt::cplx;
using frdt::ExpField;
using frdt::Spectrum;

namespace {

const cplx I{0.0, 1.0};

Spectrum unit_spectrum(std::size_t len, double alpha = 0.5) {
    std::vector<ExpField> c(len);
    c[0] = ExpField::constant(1.0);
    return Spectrum(alpha, std::move(c));
}

}  // namespace

TEST_CASE("spectrum invariants") {
    CHECK_THROWS_AS(Spectrum(0.5, {}), frdt::DomainError);
    CHECK_THROWS_AS(Spectrum(0.0, {ExpField{}}), frdt::DomainError);
    CHECK_THROWS_AS(Spectrum(1.5, {ExpField{}}), frdt::DomainError);
    const Spectrum s(1.0, {ExpField::constant(1.0), ExpField{}});
    CHECK(s.order() == 1);
    CHECK_THROWS_AS(s.at(2), frdt::InsufficientOrderError);
}

TEST_CASE("conv2") {
    const auto e = ExpField::exponential(1.0, I);
    const Spectrum u(0.5, {e, e.scaled(2.0)});
    const Spectrum v(0.5, {ExpField::constant(1.0), ExpField::constant(3.0)});
    CHECK(frdt::conv2(u, v, 0) == e);
    // U_0 V_1 + U_1 V_0 = 3e^{ix} + 2e^{ix}
    CHECK(frdt::conv2(u, v, 1) == e.scaled(5.0));

    const auto one = unit_spectrum(5);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(frdt::conv2(one, one, k) == (k == 0 ? ExpField::constant(1.0) : ExpField{}));
    }
    CHECK_THROWS_AS(frdt::conv2(u, v, 2), frdt::InsufficientOrderError);
    CHECK_THROWS_AS(frdt::conv2(u, Spectrum(0.7, {e, e}), 0), frdt::DomainError);
}

TEST_CASE("conv2 matches the brute-force Cauchy product") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = oracles::random_spectrum(rng, 5, true);
        const auto v = oracles::random_spectrum(rng, 5, true);
        const auto prod = oracles::cauchy_product(u, v);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(frdt::conv2(u, v, k) == prod[k]);
        }
    }
}

TEST_CASE("conv2 is symmetric and bilinear") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const auto u = oracles::random_spectrum(rng, 4, true);
        const auto v = oracles::random_spectrum(rng, 4, true);
        const auto w = oracles::random_spectrum(rng, 4, true);
        std::vector<ExpField> uw;
        for (std::size_t k = 0; k < 4; ++k) uw.push_back(u[k].scaled(2.0) + w[k].scaled(-3.0));
        const Spectrum lin(0.5, uw);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(frdt::conv2(u, v, k) == frdt::conv2(v, u, k));
            CHECK(frdt::conv2(lin, v, k) ==
                  frdt::conv2(u, v, k).scaled(2.0) + frdt::conv2(w, v, k).scaled(-3.0));
        }
    }
}

TEST_CASE("conv3") {
    const auto e = frdt::make_initial(frdt::InitialKind::ExpInx, std::array{2.0});
    const Spectrum u(1.0, {e});
    CHECK(frdt::conv3(frdt::conj_spectrum(u), u, u, 0) == e);

    const auto one = unit_spectrum(4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(frdt::conv3(one, one, one, k) == (k == 0 ? ExpField::constant(1.0) : ExpField{}));
    }

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracles::random_spectrum(rng, 7, true);
        const auto b = oracles::random_spectrum(rng, 7, true);
        const auto c = oracles::random_spectrum(rng, 7, true);
        CHECK(frdt::conv3(a, b, c, 0) == a[0] * b[0] * c[0]);
        const auto ab = frdt::conv2_spectrum(a, b);
        for (std::size_t k = 0; k <= 6; ++k) {
            CHECK(frdt::conv3(a, b, c, k) == frdt::conv2(ab, c, k));
        }
    }
}

TEST_CASE("deriv_shift") {
    std::mt19937_64 rng(24);
    const auto u = oracles::random_spectrum(rng, 4, false, 0.5);
    CHECK(frdt::deriv_shift(u, 0, 2) == u[2]);

    const auto u1 = oracles::random_spectrum(rng, 3, false, 1.0);
    CHECK(frdt::approx_equal(frdt::deriv_shift(u1, 1, 0), u1[1], 1e-15));

    // Γ(2)/Γ(1.5) = 1 / 0.886226925452758013649 (quadrature oracle)
    const double ratio = 1.0 / oracles::gamma_quadrature(1.5);
    CHECK(std::abs(ratio - 1.1283791670955125739) < 1e-14);
    CHECK(frdt::approx_equal(frdt::deriv_shift(u, 1, 1), u[2].scaled(ratio), 1e-14));

    CHECK_THROWS_AS(frdt::deriv_shift(u, 1, 3), frdt::InsufficientOrderError);
}

TEST_CASE("monomial_spectrum") {
    const auto c = frdt::monomial_spectrum(0, 0, 0.3, 5);
    CHECK(c.size() == 6);
    CHECK(c[0] == ExpField::constant(1.0));
    for (std::size_t k = 1; k < 6; ++k) CHECK(c[k].empty());

    const auto t1 = frdt::monomial_spectrum(0, 1, 0.5, 5);
    for (std::size_t k = 0; k < 6; ++k) CHECK(t1[k] == (k == 2 ? ExpField::constant(1.0) : ExpField{}));

    const auto never = frdt::monomial_spectrum(0, 1, 0.7, 10);
    for (const auto& f : never.coeffs()) CHECK(f.empty());

    CHECK_THROWS_AS(frdt::monomial_spectrum(1, 0, 0.5, 3), frdt::UnsupportedRepresentationError);
}

TEST_CASE("conjugate spectrum is coefficientwise conjugation") {
    std::mt19937_64 rng(25);
    const auto u = oracles::random_spectrum(rng, 6, false);
    const auto cu = frdt::conj_spectrum(u);
    for (std::size_t k = 0; k < u.size(); ++k) CHECK(cu[k] == u[k].conjugate());
}

#include "ckx/fueter.hpp"

#include <doctest.h>

using namespace ckx;

TEST_CASE("slice extension") {
    unsigned m = 3;
    for (unsigned k = 0; k <= 5; ++k)
        CHECK(slice_extend(UnivariatePoly::monomial(m, k), m) == variable_power(VarBase::x, k, m));
    CHECK(slice_extend(UnivariatePoly::constant(m, Rational(1)), m) ==
          CliffordPolynomial::scalar(m, Rational(1)));
}

TEST_CASE("fueter map spot values at m=3") {
    unsigned m = 3;
    // full(x^3) = -12 x0 - 4 x_
    CliffordPolynomial full = fueter_map(FueterMapKind::full, variable_power(VarBase::x, 3, m), m);
    CHECK(full == CliffordPolynomial::variable(m, 0) * Rational(-12) +
                      variable_power(VarBase::xunderline, 1, m) * Rational(-4));
    // harmonic_factor(x^2) = D(x^2) = -4 x0
    CliffordPolynomial hf =
        fueter_map(FueterMapKind::harmonic_factor, variable_power(VarBase::x, 2, m), m);
    CHECK(hf == CliffordPolynomial::variable(m, 0) * Rational(-4));
    // D x^k = -2 sum_{s=1}^k x^{k-s} xbar^{s-1}
    for (unsigned k = 1; k <= 6; ++k) {
        CliffordPolynomial sum(m);
        for (unsigned s = 1; s <= k; ++s)
            sum += variable_power(VarBase::x, k - s, m) * variable_power(VarBase::xbar, s - 1, m);
        CHECK(cauchy_riemann(variable_power(VarBase::x, k, m)) == sum * Rational(-2));
    }
    CHECK_THROWS_AS(fueter_map(FueterMapKind::full, variable_power(VarBase::x, 2, 4), 4),
                    std::invalid_argument);
}

TEST_CASE("diagram checks pass at m=3") {
    unsigned m = 3;
    for (unsigned k = 0; k <= 6; ++k) {
        CHECK(diagram_check(DiagramCheckKind::FG, k, m).passed());
        CHECK(diagram_check(DiagramCheckKind::Sceconn, k, m).passed());
        CHECK(diagram_check(DiagramCheckKind::S1, k, m).passed());
        CHECK(diagram_check(DiagramCheckKind::S2, k, m).passed());
        for (unsigned ell = 0; ell <= 1; ++ell)
            CHECK(diagram_check(DiagramCheckKind::Lappn, k, m, ell).passed());
        if (k >= 1) CHECK(diagram_check(DiagramCheckKind::Monomial, k, m).passed());
    }
}

TEST_CASE("diagram check preconditions") {
    CHECK_THROWS_AS(diagram_check(DiagramCheckKind::FG, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(diagram_check(DiagramCheckKind::Monomial, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(diagram_check(DiagramCheckKind::Lappn, 2, 3, 5), std::invalid_argument);
}

TEST_CASE("Sceconn at k = m-2 is the constant identity") {
    for (unsigned m : {3u, 5u}) {
        unsigned k = m - 2;
        CliffordPolynomial lhs = fueter_map(
            FueterMapKind::harmonic_factor, slice_extend(UnivariatePoly::monomial(m, k), m), m);
        Rational expect = gamma_m(m) * Rational(factorial(m - 2), BigInt(1));
        CHECK(lhs == CliffordPolynomial::scalar(m, expect));
    }
}

TEST_CASE("FF corollary at m=3") {
    unsigned m = 3;
    for (unsigned k = 0; k <= 6; ++k) {
        UnivariatePoly f0 = UnivariatePoly::monomial(m, k);
        CHECK(cauchy_riemann(slice_extend(f0, m)) ==
              hgck_extend(f0.derivative(), UnivariatePoly::zero(m), m) * Rational(-2));
    }
}

TEST_CASE("Monomial check equals gamma_m scaled family values") {
    // D(x^2) = -4 x0 = gamma_3 * 2 * P_1^3
    unsigned m = 3;
    ReportEntry e = diagram_check(DiagramCheckKind::Monomial, 2, m);
    CHECK(e.passed());
    CliffordPolynomial lhs =
        fueter_map(FueterMapKind::harmonic_factor, variable_power(VarBase::x, 2, m), m);
    CHECK(lhs == family_poly(FamilyKind::P, 1, m) * (gamma_m(m) * Rational(2)));
}

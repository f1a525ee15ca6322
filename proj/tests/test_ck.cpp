#include "ckx/ck.hpp"

#include <doctest.h>

using namespace ckx;

namespace {

CliffordPolynomial x0poly(unsigned m, unsigned k) {
    return UnivariatePoly::monomial(m, k).to_polynomial();
}

}  // namespace

TEST_CASE("series coefficients") {
    // even[j] = 1/(4^j j! (m/2)_j), odd[j] = 1/(4^j j! (m/2+1)_j)
    CkCoefficients c = CkCoefficients::make(3, 3);
    CHECK(c.even[0] == Rational(1));
    CHECK(c.even[1] == Rational(1, 6));       // 1/(4 * (3/2))
    CHECK(c.even[2] == Rational(1, 120));     // 1/(16 * 2 * (3/2)(5/2))
    CHECK(c.odd[0] == Rational(1));
    CHECK(c.odd[1] == Rational(1, 10));       // 1/(4 * (5/2))
    CHECK_THROWS_AS(CkCoefficients::make(1, 2), std::invalid_argument);
}

TEST_CASE("laplacian eigen-coefficients on vector powers") {
    CHECK(vector_power_laplacian_coeff(3, 3) == Rational(-10));
    CHECK(vector_power_laplacian_coeff(3, 2) == Rational(-2 * 3));
    CHECK(vector_power_laplacian_coeff(5, 4) == Rational(-4 * 2 * (5 + 2) / 2));  // -4p(m/2+p-1)
}

TEST_CASE("hgck spot values") {
    unsigned m = 3;
    UnivariatePoly zero = UnivariatePoly::zero(m);
    // hgck(x0^2, 0) = x0^2 - |x_|^2/3
    CliffordPolynomial h = hgck_extend(UnivariatePoly::monomial(m, 2), zero, m);
    CliffordPolynomial expect = x0poly(m, 2) - radius_sq_power(1, m) * Rational(1, 3);
    CHECK(h == expect);
    // hgck(1, 0) = 1
    CHECK(hgck_extend(UnivariatePoly::constant(m, Rational(1)), zero, m) ==
          CliffordPolynomial::scalar(m, Rational(1)));
    // hgck(0, 1) = x_
    CHECK(hgck_extend(zero, UnivariatePoly::constant(m, Rational(1)), m) ==
          variable_power(VarBase::xunderline, 1, m));
}

TEST_CASE("gck spot values") {
    unsigned m = 3;
    // gck(x0) = x0 + x_/3
    CHECK(gck_extend(UnivariatePoly::monomial(m, 1), m) ==
          x0poly(m, 1) + variable_power(VarBase::xunderline, 1, m) * Rational(1, 3));
    // gck(1) = 1
    CHECK(gck_extend(UnivariatePoly::constant(m, Rational(1)), m) ==
          CliffordPolynomial::scalar(m, Rational(1)));
    // gck(x0^2) = x0^2 - |x_|^2/3 + (2/3) x0 x_
    CliffordPolynomial expect = x0poly(m, 2) - radius_sq_power(1, m) * Rational(1, 3) +
                                CliffordPolynomial::variable(m, 0) *
                                    variable_power(VarBase::xunderline, 1, m) * Rational(2, 3);
    CHECK(gck_extend(UnivariatePoly::monomial(m, 2), m) == expect);
}

TEST_CASE("harmonicity and monogenicity sweeps") {
    for (unsigned m = 2; m <= 5; ++m) {
        UnivariatePoly zero = UnivariatePoly::zero(m);
        for (unsigned k = 0; k <= 6; ++k) {
            UnivariatePoly mono = UnivariatePoly::monomial(m, k);
            CHECK(laplacian(hgck_extend(mono, zero, m)).is_zero());
            CHECK(laplacian(hgck_extend(zero, mono, m)).is_zero());
            CHECK(cauchy_riemann(gck_extend(mono, m)).is_zero());
        }
    }
}

TEST_CASE("recovery") {
    unsigned m = 3;
    // recover(x_) = (0, 1)
    auto [a0, a1] = recover_initial(variable_power(VarBase::xunderline, 1, m), m);
    CHECK(a0.is_zero());
    CHECK(a1 == UnivariatePoly::constant(m, Rational(1)));
    // recover(P_2^3) = (x0^2, 0)
    CliffordPolynomial p = x0poly(m, 2) - radius_sq_power(1, m) * Rational(1, 3);
    auto [b0, b1] = recover_initial(p, m);
    CHECK(b0 == UnivariatePoly::monomial(m, 2));
    CHECK(b1.is_zero());
    // recover(1) = (1, 0)
    auto [c0, c1] = recover_initial(CliffordPolynomial::scalar(m, Rational(1)), m);
    CHECK(c0 == UnivariatePoly::constant(m, Rational(1)));
    CHECK(c1.is_zero());
    // non-harmonic input rejected with the residual in the message
    CHECK_THROWS_WITH_AS(recover_initial(x0poly(m, 2), m),
                         doctest::Contains("residual"), std::invalid_argument);
}

TEST_CASE("split identities") {
    unsigned m = 3;
    UnivariatePoly zero = UnivariatePoly::zero(m);
    // (A0 = x0^2, A1 = 0): [Q_2^3]_0
    CHECK(hgck_gck_split(UnivariatePoly::monomial(m, 2), zero, m) ==
          x0poly(m, 2) - radius_sq_power(1, m) * Rational(1, 3));
    // (A0 = 0, A1 = 1): x_
    CHECK(hgck_gck_split(zero, UnivariatePoly::constant(m, Rational(1)), m) ==
          variable_power(VarBase::xunderline, 1, m));
    // (A0 = 0, A1 = x0): x0 x_ (equals H_1^1)
    CHECK(hgck_gck_split(zero, UnivariatePoly::monomial(m, 1), m) ==
          CliffordPolynomial::variable(m, 0) * variable_power(VarBase::xunderline, 1, m));
}

TEST_CASE("recursion route matches the closed form") {
    for (unsigned m : {2u, 3u, 5u}) {
        UnivariatePoly a0 = UnivariatePoly::monomial(m, 6);
        UnivariatePoly a1 = UnivariatePoly::monomial(m, 5);
        auto seq = ck_recursion_sequence(a0, a1, m, 8);
        CkCoefficients ck = CkCoefficients::make(m, 6);
        for (unsigned j = 0; j <= 8; ++j) {
            UnivariatePoly expect = j % 2 == 0 ? a0.derivative(j) * ck.even[j / 2]
                                               : a1.derivative(j - 1) * ck.odd[j / 2];
            CHECK(seq[j] == expect);
        }
    }
}

TEST_CASE("clifford-valued initial data") {
    // Right-module structure: data with an e12 coefficient extends blade-wise.
    unsigned m = 3;
    UnivariatePoly data(m);
    data.add_term(1, CliffordElement::blade(m, 0x3, Rational(2)));  // 2 x0 e12
    CliffordPolynomial ext = gck_extend(data, m);
    CHECK(cauchy_riemann(ext).is_zero());
    CliffordPolynomial scalar_route = gck_extend(UnivariatePoly::monomial(m, 1), m) *
                                      CliffordPolynomial::constant(CliffordElement::blade(m, 0x3, Rational(2)));
    CHECK(ext == scalar_route);
}

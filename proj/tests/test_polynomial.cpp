#include "ckx/polynomial.hpp"
#include "ckx/univariate.hpp"

#include <doctest.h>

using namespace ckx;

namespace {

CliffordPolynomial xu(unsigned m) { return variable_power(VarBase::xunderline, 1, m); }

}  // namespace

TEST_CASE("variable powers") {
    unsigned m = 2;
    // x_^2 = -x1^2 - x2^2
    CliffordPolynomial sq = variable_power(VarBase::xunderline, 2, m);
    CliffordPolynomial expect(m);
    expect.add_term({0, 2, 0}, CliffordElement(m, Rational(-1)));
    expect.add_term({0, 0, 2}, CliffordElement(m, Rational(-1)));
    CHECK(sq == expect);
    // x^2 = x0^2 - sum x_j^2 + 2 x0 x_
    CliffordPolynomial x2 = variable_power(VarBase::x, 2, m);
    CliffordPolynomial manual(m);
    manual.add_term({2, 0, 0}, CliffordElement::one(m));
    manual.add_term({0, 2, 0}, CliffordElement(m, Rational(-1)));
    manual.add_term({0, 0, 2}, CliffordElement(m, Rational(-1)));
    manual.add_term({1, 1, 0}, CliffordElement::generator(m, 1) * Rational(2));
    manual.add_term({1, 0, 1}, CliffordElement::generator(m, 2) * Rational(2));
    CHECK(x2 == manual);
    // xbar flips the 1-vector part: x + xbar = 2 x0, xbar + x_ = x0
    CliffordPolynomial xb = variable_power(VarBase::xbar, 1, m);
    CHECK(variable_power(VarBase::x, 1, m) + xb == CliffordPolynomial::variable(m, 0) * Rational(2));
    CHECK(xb + xu(m) == CliffordPolynomial::variable(m, 0));
}

TEST_CASE("dirac on the vector variable") {
    unsigned m = 3;
    CHECK(dirac(xu(m)) == CliffordPolynomial::scalar(m, Rational(-3)));
}

TEST_CASE("laplacian of x^3 at m=3") {
    unsigned m = 3;
    CliffordPolynomial lhs = laplacian(variable_power(VarBase::x, 3, m));
    CliffordPolynomial rhs = CliffordPolynomial::variable(m, 0) * Rational(-12) + xu(m) * Rational(-4);
    CHECK(lhs == rhs);
}

TEST_CASE("CR annihilates Q_1^3 = x0 + x_/3") {
    unsigned m = 3;
    CliffordPolynomial q1 = CliffordPolynomial::variable(m, 0) + xu(m) * Rational(1, 3);
    CHECK(cauchy_riemann(q1).is_zero());
}

TEST_CASE("closed-form vector-power laplacian") {
    // Delta(x_^3) = -10 x_ at m = 3 (c(3,3) = -4 (3/2 + 1)).
    unsigned m = 3;
    CliffordPolynomial lhs = laplacian(variable_power(VarBase::xunderline, 3, m));
    CHECK(lhs == xu(m) * Rational(-10));
}

TEST_CASE("inner and wedge") {
    unsigned m = 3;
    CHECK(vector_op_product(VectorOpKind::inner, xu(m)) == CliffordPolynomial::scalar(m, Rational(3)));
    CHECK(vector_op_product(VectorOpKind::wedge,
                            CliffordPolynomial::variable(m, 0) * xu(m))
              .is_zero());
    // H_2^1 = x0^2 x_ - (1/5)|x_|^2 x_: divergence = 3 x0^2 - |x_|^2
    CliffordPolynomial h21 = CliffordPolynomial::variable(m, 0) * CliffordPolynomial::variable(m, 0) * xu(m) -
                             radius_sq_power(1, m) * xu(m) * Rational(1, 5);
    CliffordPolynomial div = vector_op_product(VectorOpKind::inner, h21);
    CliffordPolynomial expect =
        CliffordPolynomial::variable(m, 0) * CliffordPolynomial::variable(m, 0) * Rational(3) -
        radius_sq_power(1, m);
    CHECK(div == expect);
    CHECK_THROWS_AS(vector_op_product(VectorOpKind::inner, CliffordPolynomial::scalar(m, Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("evaluation") {
    unsigned m = 3;
    CHECK(evaluate(variable_power(VarBase::x, 2, m), {Rational(1), Rational(0), Rational(0), Rational(0)}) ==
          CliffordElement::one(m));
    // x xbar at (a,b,c,d) -> a^2+b^2+c^2+d^2
    CliffordPolynomial norm = variable_power(VarBase::x, 1, m) * variable_power(VarBase::xbar, 1, m);
    CHECK(evaluate(norm, {Rational(1), Rational(2), Rational(3), Rational(4)}) ==
          CliffordElement(m, Rational(30)));
    // P_2^3 = x0^2 - |x_|^2/3 at (1,1,0,0) -> 2/3
    CliffordPolynomial p23(m);
    p23.add_term({2, 0, 0, 0}, CliffordElement::one(m));
    CliffordPolynomial rsq = radius_sq_power(1, m);
    p23 -= rsq * Rational(1, 3);
    CHECK(evaluate(p23, {Rational(1), Rational(1), Rational(0), Rational(0)}) ==
          CliffordElement(m, Rational(2, 3)));
    // evaluation is a homomorphism
    std::vector<Rational> pt{Rational(1, 2), Rational(-1), Rational(2), Rational(1, 3)};
    CliffordPolynomial a = variable_power(VarBase::x, 2, m);
    CliffordPolynomial b = xu(m) * Rational(3) - CliffordPolynomial::scalar(m, Rational(1));
    CHECK(evaluate(a * b, pt) == clifford_mul(evaluate(a, pt), evaluate(b, pt)));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
}

TEST_CASE("univariate basics") {
    unsigned m = 3;
    UnivariatePoly f = UnivariatePoly::monomial(m, 3);  // x0^3
    CHECK(f.derivative() == UnivariatePoly::monomial(m, 2, Rational(3)));
    CHECK(f.derivative(4).is_zero());
    CHECK(f.antiderivative() == UnivariatePoly::monomial(m, 4, Rational(1, 4)));
    CHECK(f.evaluate(Rational(2)) == CliffordElement(m, Rational(8)));
    CHECK(UnivariatePoly::from_polynomial(f.to_polynomial()) == f);
    CHECK_THROWS_AS(UnivariatePoly::from_polynomial(xu(m)), std::invalid_argument);
}

TEST_CASE("restriction to the real line") {
    unsigned m = 2;
    CliffordPolynomial p = variable_power(VarBase::x, 3, m);
    auto r = restrict_to_real_line(p);
    UnivariatePoly f = UnivariatePoly::from_restriction(r, m);
    CHECK(f == UnivariatePoly::monomial(m, 3));
}

#include "ckx/axial.hpp"
#include "ckx/ck.hpp"

#include <doctest.h>

using namespace ckx;

TEST_CASE("axial decomposition of Q_1^3") {
    unsigned m = 3;
    // x0 + x_/3 -> A = x0, B = r/3
    CliffordPolynomial q1 = CliffordPolynomial::variable(m, 0) +
                            variable_power(VarBase::xunderline, 1, m) * Rational(1, 3);
    AxialPair pair = axial_decompose(q1);
    RadialPolynomial a(m, Parity::even), b(m, Parity::odd);
    a.add_term(1, 0, Rational(1));
    b.add_term(0, 1, Rational(1, 3));
    CHECK(pair.A == a);
    CHECK(pair.B == b);
    CHECK(radial_to_polynomial(pair) == q1);
}

TEST_CASE("axial decomposition of P_2^3") {
    unsigned m = 3;
    CliffordPolynomial p(m);
    p.add_term({2, 0, 0, 0}, CliffordElement::one(m));
    p -= radius_sq_power(1, m) * Rational(1, 3);
    AxialPair pair = axial_decompose(p);
    RadialPolynomial a(m, Parity::even);
    a.add_term(2, 0, Rational(1));
    a.add_term(0, 2, Rational(-1, 3));
    CHECK(pair.A == a);
    CHECK(pair.B.is_zero());
}

TEST_CASE("non-axial input rejected") {
    unsigned m = 2;
    CliffordPolynomial bad(m);
    bad.add_term({0, 1, 0}, CliffordElement::generator(m, 2));  // x1 e2
    CHECK_THROWS_AS(axial_decompose(bad), NotAxial);
    CliffordPolynomial bad2(m);
    bad2.add_term({0, 2, 0}, CliffordElement::one(m));  // x1^2 alone: not radial
    CHECK_THROWS_AS(axial_decompose(bad2), NotAxial);
    CliffordPolynomial bad3(m);
    bad3.add_term({0, 0, 0}, CliffordElement::blade(m, 0x3));  // grade 2 coefficient
    CHECK_THROWS_AS(axial_decompose(bad3), NotAxial);
}

TEST_CASE("vekua residuals") {
    unsigned m = 3;
    // Q_1^3 profile: (A = x0, B = r/3) solves the system.
    RadialPolynomial a(m, Parity::even), b(m, Parity::odd);
    a.add_term(1, 0, Rational(1));
    b.add_term(0, 1, Rational(1, 3));
    auto [r1, r2] = vekua_residual(AxialPair(a, b));
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
    // x0 alone is not monogenic: first residual is the constant 1.
    RadialPolynomial b0(m, Parity::odd);
    auto [s1, s2] = vekua_residual(AxialPair(a, b0));
    RadialPolynomial one(m, Parity::even);
    one.add_term(0, 0, Rational(1));
    CHECK(s1 == one);
    CHECK(s2.is_zero());
    // GCK output is monogenic (m = 5, f0 = x0^2).
    auto pair = axial_decompose(gck_extend(UnivariatePoly::monomial(5, 2), 5));
    auto [t1, t2] = vekua_residual(pair);
    CHECK(t1.is_zero());
    CHECK(t2.is_zero());
}

TEST_CASE("parity closure of the radial derivatives") {
    unsigned m = 3;
    RadialPolynomial g(m, Parity::even);
    g.add_term(2, 4, Rational(3));
    g.add_term(1, 2, Rational(-1, 2));
    CHECK(g.d_x0().parity() == Parity::even);
    CHECK(g.d_r().parity() == Parity::odd);
    CHECK(g.mul_r().parity() == Parity::odd);
    CHECK(g.d_r().d_r().parity() == Parity::even);
    RadialPolynomial h(m, Parity::odd);
    h.add_term(0, 3, Rational(1));
    CHECK(h.d_x0().parity() == Parity::odd);
    CHECK(h.d_r().parity() == Parity::even);
    CHECK(h.div_r().parity() == Parity::even);
    // parity invariant is enforced on construction
    RadialPolynomial bad(m, Parity::even);
    CHECK_THROWS_AS(bad.add_term(0, 3, Rational(1)), std::invalid_argument);
}

TEST_CASE("radial raise/lower closed forms") {
    unsigned m = 3;
    RadialPolynomial r3(m, Parity::odd);
    r3.add_term(0, 3, Rational(1));
    RadialPolynomial expect(m, Parity::odd);
    expect.add_term(0, 1, Rational(2));
    CHECK(radial_power(RadialOpKind::raise, 1, r3) == expect);  // raise^1 r^3 = 2r

    RadialPolynomial r4(m, Parity::even);
    r4.add_term(0, 4, Rational(1));
    RadialPolynomial expect8(m, Parity::even);
    expect8.add_term(0, 0, Rational(8));
    CHECK(radial_power(RadialOpKind::lower, 2, r4) == expect8);  // lower^2 r^4 = 8

    RadialPolynomial r1(m, Parity::odd);
    r1.add_term(0, 1, Rational(1));
    CHECK(radial_power(RadialOpKind::raise, 1, r1).is_zero());  // raise^1 r = 0

    CHECK_THROWS_AS(radial_power(RadialOpKind::lower, 1, r3), std::invalid_argument);
}

TEST_CASE("intrinsic components") {
    unsigned m = 2;
    // z^2 = (x0 + ir)^2: alpha = x0^2 - r^2, beta = 2 x0 r
    auto [alpha, beta] = intrinsic_components(UnivariatePoly::monomial(m, 2));
    RadialPolynomial ea(m, Parity::even), eb(m, Parity::odd);
    ea.add_term(2, 0, Rational(1));
    ea.add_term(0, 2, Rational(-1));
    eb.add_term(1, 1, Rational(2));
    CHECK(alpha == ea);
    CHECK(beta == eb);
    // z itself
    auto [a1, b1] = intrinsic_components(UnivariatePoly::monomial(m, 1));
    RadialPolynomial ea1(m, Parity::even), eb1(m, Parity::odd);
    ea1.add_term(1, 0, Rational(1));
    eb1.add_term(0, 1, Rational(1));
    CHECK(a1 == ea1);
    CHECK(b1 == eb1);
    // constants extend to themselves
    auto [a0, b0] = intrinsic_components(UnivariatePoly::constant(m, Rational(1)));
    CHECK(b0.is_zero());
    RadialPolynomial one(m, Parity::even);
    one.add_term(0, 0, Rational(1));
    CHECK(a0 == one);
    // alpha, beta solve the planar Cauchy-Riemann system (intrinsic pair):
    // d_x0 alpha = d_r beta and d_r alpha = -d_x0 beta.
    auto [a3, b3] = intrinsic_components(UnivariatePoly::monomial(m, 5));
    CHECK(a3.d_x0() == b3.d_r());
    CHECK(a3.d_r() == -(b3.d_x0()));
    // non-real data rejected
    UnivariatePoly clif(m);
    clif.add_term(1, CliffordElement::generator(m, 1));
    CHECK_THROWS_AS(intrinsic_components(clif), std::invalid_argument);
}

TEST_CASE("round trip through families") {
    // Decompose/rebuild Q_3^3 exactly.
    unsigned m = 3;
    CliffordPolynomial q3 = gck_extend(UnivariatePoly::monomial(m, 3), m);
    CHECK(radial_to_polynomial(axial_decompose(q3)) == q3);
}

TEST_CASE("B = 0 and omega B conversions") {
    unsigned m = 3;
    RadialPolynomial a(m, Parity::even), b(m, Parity::odd);
    b.add_term(0, 1, Rational(1));
    // (A=0, B=r) -> underline(x)
    CHECK(radial_to_polynomial(AxialPair(a, b)) == variable_power(VarBase::xunderline, 1, m));
}

#include "ckx/planewave.hpp"

#include <doctest.h>

using namespace ckx;

TEST_CASE("exact gamma values") {
    CHECK(gamma_exact(Rational(3)) == PiRational{Rational(2), 0});
    CHECK(gamma_exact(Rational(1, 2)) == PiRational{Rational(1), 1});       // sqrt(pi)
    CHECK(gamma_exact(Rational(3, 2)) == PiRational{Rational(1, 2), 1});    // sqrt(pi)/2
    CHECK(gamma_exact(Rational(5, 2)) == PiRational{Rational(3, 4), 1});
    CHECK_THROWS_AS(gamma_exact(Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(gamma_exact(Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("sphere moment spot values") {
    // moment(2,0,3) = (4/3) pi, moment(1,1,3) = (4/3) pi, odd moments vanish
    CHECK(sphere_moment(2, 0, 3).value == PiRational{Rational(4, 3), 2});
    CHECK(sphere_moment(1, 1, 3).value == PiRational{Rational(4, 3), 2});
    CHECK(sphere_moment(1, 0, 3).value.is_zero());
    CHECK(sphere_moment(2, 1, 5).value.is_zero());
    // moment(0,0,m) is the sphere area 2 pi^{m/2} / Gamma(m/2)
    PiRational area = sphere_moment(0, 0, 4).value;
    CHECK(area == PiRational{Rational(2), 4});  // 2 pi^2
    CHECK_THROWS_AS(sphere_moment(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(sphere_moment(0, 1, 3), std::invalid_argument);
}

TEST_CASE("reconstruction equals the series engine") {
    for (unsigned m = 2; m <= 5; ++m) {
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; b <= 4; ++b) {
                UnivariatePoly a0 = UnivariatePoly::monomial(m, a);
                UnivariatePoly a1 = UnivariatePoly::monomial(m, b);
                CHECK(planewave_reconstruct(a0, a1, m) == hgck_extend(a0, a1, m));
            }
    }
}

TEST_CASE("reconstruction spot values") {
    unsigned m = 3;
    // (A0 = x0^2, A1 = 0): x0^2 - |x_|^2/3
    CliffordPolynomial r =
        planewave_reconstruct(UnivariatePoly::monomial(m, 2), UnivariatePoly::zero(m), m);
    CHECK(r == UnivariatePoly::monomial(m, 2).to_polynomial() -
                   radius_sq_power(1, m) * Rational(1, 3));
    // (A0 = 1, A1 = 0): 1  (c_m times the sphere area)
    CHECK(planewave_reconstruct(UnivariatePoly::constant(m, Rational(1)), UnivariatePoly::zero(m),
                                m) == CliffordPolynomial::scalar(m, Rational(1)));
    // (A0 = 0, A1 = 1): x_
    CHECK(planewave_reconstruct(UnivariatePoly::zero(m), UnivariatePoly::constant(m, Rational(1)),
                                m) == variable_power(VarBase::xunderline, 1, m));
}

TEST_CASE("monte carlo witness") {
    unsigned m = 3;
    UnivariatePoly zero = UnivariatePoly::zero(m);
    // constant data: integrand is exactly 1, no variance
    McResult r = planewave_mc(UnivariatePoly::constant(m, Rational(1)), zero, m, 1000, 7,
                              {0.3, 0.4, 0.0, 0.1});
    CHECK(r.estimate.coeff[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.stderr_.coeff[0] == doctest::Approx(0.0).epsilon(1e-12));

    // A0 = x0^2 at (1, 0.5, 0, 0): exact 11/12 within 4 standard errors
    McResult r2 = planewave_mc(UnivariatePoly::monomial(m, 2), zero, m, 50000, 1,
                               {1.0, 0.5, 0.0, 0.0});
    double exact = 11.0 / 12.0;
    CHECK(std::abs(r2.estimate.coeff[0] - exact) <= 4 * r2.stderr_.coeff[0]);

    // A1 = x0 at (1, 1, 0, 0): e1 component of H_1^1 = x0 x_ is 1
    McResult r3 = planewave_mc(zero, UnivariatePoly::monomial(m, 1), m, 200000, 3,
                               {1.0, 1.0, 0.0, 0.0});
    CHECK(std::abs(r3.estimate.coeff[1] - 1.0) <= 4 * std::max(r3.stderr_.coeff[1], 1e-6));

    // determinism for a fixed seed
    McResult r4 = planewave_mc(UnivariatePoly::monomial(m, 2), zero, m, 50000, 1,
                               {1.0, 0.5, 0.0, 0.0});
    CHECK(r4.estimate.coeff[0] == r2.estimate.coeff[0]);
    CHECK_THROWS_AS(planewave_mc(zero, zero, m, 0, 1, {0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("monte carlo across dimensions") {
    // A0 = x0^2 at (1, 0.5, 0, ...): exact value 1 - 0.25/m on the scalar blade.
    for (unsigned m : {2u, 5u, 7u}) {
        UnivariatePoly a0 = UnivariatePoly::monomial(m, 2);
        std::vector<double> pt(m + 1, 0.0);
        pt[0] = 1.0;
        pt[1] = 0.5;
        McResult r = planewave_mc(a0, UnivariatePoly::zero(m), m, 60000, 11, pt);
        double exact = 1.0 - 0.25 / m;
        CHECK(std::abs(r.estimate.coeff[0] - exact) <= 4 * r.stderr_.coeff[0]);
    }
    CHECK_THROWS_AS(planewave_mc(UnivariatePoly::zero(8), UnivariatePoly::zero(8), 8, 10, 1,
                                 std::vector<double>(9, 0.0)),
                    std::invalid_argument);
}

#include "ckx/clifford.hpp"

#include <doctest.h>

#include <random>

using namespace ckx;

namespace {

CliffordElement gen(unsigned m, unsigned j) { return CliffordElement::generator(m, j); }

/// Independent sign oracle for m = 2: the full 4x4 blade product table,
/// written out by hand from e1 e2 = e12, e1 e1 = -1.
int m2_sign_table(BladeMask a, BladeMask b) {
    // blades: 0 = 1, 1 = e1, 2 = e2, 3 = e12
    static const int table[4][4] = {
        {+1, +1, +1, +1},   // 1 * x
        {+1, -1, +1, -1},   // e1: e1e1=-1, e1e2=+e12, e1e12=e1e1e2=-e2
        {+1, -1, -1, +1},   // e2: e2e1=-e12, e2e2=-1, e2e12=e2e1e2=+e1
        {+1, +1, -1, -1},   // e12: e12e1=e1e2e1=+e2... see expansion below
    };
    // e12 e1 = e1e2e1 = -e1e1e2 = +e2 ; e12 e2 = e1e2e2 = -e1 ;
    // e12 e12 = e1e2e1e2 = -e1e1e2e2 = -1.
    return table[a][b];
}

}  // namespace

TEST_CASE("generator relations") {
    for (unsigned m = 2; m <= 6; ++m) {
        for (unsigned j = 1; j <= m; ++j) {
            CHECK(clifford_mul(gen(m, j), gen(m, j)) == CliffordElement(m, Rational(-1)));
            for (unsigned l = j + 1; l <= m; ++l) {
                CHECK((clifford_mul(gen(m, j), gen(m, l)) + clifford_mul(gen(m, l), gen(m, j)))
                          .is_zero());
            }
        }
    }
    // e1 e2 = e12
    CHECK(clifford_mul(gen(2, 1), gen(2, 2)) == CliffordElement::blade(2, 0x3));
}

TEST_CASE("m=2 product against the hand sign table") {
    for (BladeMask a = 0; a < 4; ++a)
        for (BladeMask b = 0; b < 4; ++b) {
            CliffordElement prod =
                clifford_mul(CliffordElement::blade(2, a), CliffordElement::blade(2, b));
            CHECK(prod == CliffordElement::blade(2, a ^ b, Rational(m2_sign_table(a, b))));
        }
}

TEST_CASE("bilinear expansion example") {
    // (e1 + e2)(e1 - e2) = -1 - e1e2 + e2e1 + 1 = -2 e12
    unsigned m = 2;
    CliffordElement lhs = clifford_mul(gen(m, 1) + gen(m, 2), gen(m, 1) - gen(m, 2));
    CHECK(lhs == CliffordElement::blade(m, 0x3, Rational(-2)));
}

TEST_CASE("grade projection") {
    unsigned m = 2;
    CliffordElement x = CliffordElement(m, Rational(3)) + gen(m, 1) * Rational(2) +
                        CliffordElement::blade(m, 0x3, Rational(5));
    CHECK(grade_project(x, 1) == gen(m, 1) * Rational(2));
    CHECK(grade_project(x, 0) + grade_project(x, 1) + grade_project(x, 2) == x);
    // e1 e2 e1 = e2 (sign-table route: e12 e1 = +e2)
    CliffordElement p = clifford_mul(clifford_mul(gen(m, 1), gen(m, 2)), gen(m, 1));
    CHECK(grade_project(p, 1) == gen(m, 2));
    CHECK_THROWS_AS(grade_project(x, 5), std::invalid_argument);
}

TEST_CASE("paravector conjugation") {
    unsigned m = 3;
    CliffordElement x = CliffordElement(m, Rational(2)) + gen(m, 1) * Rational(3);
    CHECK(paravector_conjugate(x) == CliffordElement(m, Rational(2)) - gen(m, 1) * Rational(3));
    CHECK(paravector_conjugate(paravector_conjugate(x)) == x);
    // (1 + e1) conj(1 + e1) = 2
    CliffordElement y = CliffordElement::one(m) + gen(m, 1);
    CHECK(clifford_mul(y, paravector_conjugate(y)) == CliffordElement(m, Rational(2)));
    CHECK_THROWS_AS(paravector_conjugate(CliffordElement::blade(m, 0x3)), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(clifford_mul(CliffordElement::one(2), CliffordElement::one(3)),
                    std::invalid_argument);
}

TEST_CASE("associativity on random sparse elements") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (unsigned round = 0; round < 300; ++round) {
        unsigned m = 2 + round % 4;  // 2..5
        auto rand_elem = [&] {
            CliffordElement e(m);
            std::uniform_int_distribution<BladeMask> mask(0, (1u << m) - 1);
            for (int t = 0; t < 3; ++t) e.add_term(mask(rng), Rational(coeff(rng)));
            return e;
        };
        CliffordElement a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK(clifford_mul(clifford_mul(a, b), c) == clifford_mul(a, clifford_mul(b, c)));
    }
}

TEST_CASE("blade tokens") {
    CHECK(blade_token(0) == "");
    CHECK(blade_token(0x3) == "12");
    CHECK(blade_from_token("12", 3) == 0x3);
    CHECK(blade_from_token("", 3) == 0);
    CHECK_THROWS_AS(blade_from_token("21", 3), std::invalid_argument);
    CHECK_THROWS_AS(blade_from_token("4", 3), std::invalid_argument);
}

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational::from_string("-2/5") == Rational(-2, 5));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));  // (1/2)(3/2)(5/2)
    CHECK(binomial(5, 2) == 10);
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
}

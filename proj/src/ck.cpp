#include "ckx/ck.hpp"

namespace ckx {

CkCoefficients CkCoefficients::make(unsigned m, unsigned count) {
    if (m < 2) throw std::invalid_argument("CkCoefficients: m >= 2 required");
    CkCoefficients c;
    c.m = m;
    c.count = count;
    Rational half_m(m, 2);
    for (unsigned j = 0; j < count; ++j) {
        Rational denom_base = Rational(4).pow(j) * Rational(factorial(j), BigInt(1));
        c.even.push_back(Rational(1) / (denom_base * pochhammer(half_m, j)));
        c.odd.push_back(Rational(1) / (denom_base * pochhammer(half_m + Rational(1), j)));
    }
    return c;
}

Rational vector_power_laplacian_coeff(unsigned m, unsigned j) {
    if (j < 2) return Rational(0);
    long long p = j / 2;
    Rational half_m(m, 2);
    if (j % 2 == 0) return Rational(-4 * p) * (half_m + Rational(p - 1));
    return Rational(-4 * p) * (half_m + Rational(p));
}

static void check_engine_args(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m) {
    if (m < 2) throw std::invalid_argument("CK engine: m >= 2 required");
    if (A0.dim() != m || A1.dim() != m)
        throw std::invalid_argument("CK engine: initial data dimension mismatch");
}

CliffordPolynomial hgck_extend(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m) {
    check_engine_args(A0, A1, m);
    unsigned jmax = std::max(A0.degree(), A1.degree()) / 2 + 1;
    CkCoefficients ck = CkCoefficients::make(m, jmax + 1);
    CliffordPolynomial out(m);
    for (unsigned j = 0; j <= jmax; ++j) {
        UnivariatePoly d0 = A0.derivative(2 * j);
        if (!d0.is_zero())
            out += variable_power(VarBase::xunderline, 2 * j, m) * ck.even[j] * d0.to_polynomial();
        UnivariatePoly d1 = A1.derivative(2 * j);
        if (!d1.is_zero())
            out += variable_power(VarBase::xunderline, 2 * j + 1, m) * ck.odd[j] * d1.to_polynomial();
    }
    return out;
}

CliffordPolynomial gck_extend(const UnivariatePoly& f0, unsigned m) {
    check_engine_args(f0, f0, m);
    CliffordPolynomial r = hgck_extend(f0, UnivariatePoly::zero(m), m);
    r += hgck_extend(UnivariatePoly::zero(m), f0.derivative(), m) * Rational(1, m);
    return r;
}

std::pair<UnivariatePoly, UnivariatePoly> recover_initial(const CliffordPolynomial& f, unsigned m) {
    if (f.dim() != m) throw std::invalid_argument("recover_initial: dimension mismatch");
    CliffordPolynomial residual = laplacian(f);
    if (!residual.is_zero())
        throw std::invalid_argument("recover_initial: input is not harmonic; Laplacian residual = " +
                                    residual.str());
    axial_decompose(f);  // throws NotAxial when f is not of axial type
    UnivariatePoly a0 = UnivariatePoly::from_restriction(restrict_to_real_line(f), m);
    UnivariatePoly a1 =
        UnivariatePoly::from_restriction(restrict_to_real_line(dirac(f)), m) * Rational(-1, m);
    return {a0, a1};
}

CliffordPolynomial hgck_gck_split(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m) {
    check_engine_args(A0, A1, m);
    CliffordPolynomial out = grade_project(gck_extend(A0, m), 0);
    out += grade_project(gck_extend(A1.antiderivative(), m), 1) * Rational(m);
    CliffordPolynomial direct = hgck_extend(A0, A1, m);
    if (out != direct)
        throw std::logic_error("hgck_gck_split: split route disagrees with the direct extension");
    return out;
}

std::vector<UnivariatePoly> ck_recursion_sequence(const UnivariatePoly& A0,
                                                  const UnivariatePoly& A1, unsigned m,
                                                  unsigned jmax) {
    check_engine_args(A0, A1, m);
    std::vector<UnivariatePoly> seq;
    seq.push_back(A0);
    if (jmax >= 1) seq.push_back(A1);
    for (unsigned j = 2; j <= jmax; ++j) {
        Rational c = vector_power_laplacian_coeff(m, j);
        seq.push_back(seq[j - 2].derivative(2) * (Rational(-1) / c));
    }
    return seq;
}

}  // namespace ckx

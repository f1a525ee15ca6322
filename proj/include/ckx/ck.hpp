#pragma once

#include "ckx/axial.hpp"

namespace ckx {

/// Exact series coefficients of the CK-extension engines:
///   even[j] = 1/(4^j j! (m/2)_j),  odd[j] = 1/(4^j j! (m/2+1)_j).
/// Gamma ratios reduce to rational Pochhammer products, so everything is
/// a Rational for integer m. count is the truncation length.
struct CkCoefficients {
    std::vector<Rational> even;
    std::vector<Rational> odd;
    unsigned m = 0;
    unsigned count = 0;

    static CkCoefficients make(unsigned m, unsigned count);
};

/// Laplacian eigen-coefficient on vector powers: Delta_x underline(x)^j
/// = c(m,j) underline(x)^{j-2}; c = -4p(m/2+p-1) for j=2p, -4p(m/2+p)
/// for j=2p+1.
Rational vector_power_laplacian_coeff(unsigned m, unsigned j);

/// Harmonic CK-extension of the couple (A0, A1):
///   sum_j x^{2j} even[j] A0^{(2j)} + sum_j x^{2j+1} odd[j] A1^{(2j)}.
/// The output is annihilated by the full Laplacian and restricts to A0 on
/// the real line. Requires m >= 2.
CliffordPolynomial hgck_extend(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m);

/// Monogenic CK-extension, realized through the harmonic engine:
///   GCK[f0] = HGCK[f0, 0] + (1/m) HGCK[0, f0'].
/// The output is annihilated by the Cauchy-Riemann operator.
CliffordPolynomial gck_extend(const UnivariatePoly& f0, unsigned m);

/// Recovers the initial functions of an axially harmonic polynomial:
///   A0 = f|_{x=0},  A1 = -(1/m) (Dirac f)|_{x=0}.
/// Rejects input that is not axial or not harmonic (with the residual in
/// the diagnostic).
std::pair<UnivariatePoly, UnivariatePoly> recover_initial(const CliffordPolynomial& f, unsigned m);

/// The split identity route: [GCK[A0]]_0 + m [GCK[primitive of A1]]_1,
/// with the antiderivative constant fixed to 0. Equals hgck_extend(A0, A1)
/// and the implementation asserts that.
CliffordPolynomial hgck_gck_split(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m);

/// The coefficient sequence A_0, A_1, ..., A_jmax built through the
/// two-step recursion A_{j+2} = -(1/c(m,j+2)) A_j'' alone; an independent
/// route to the closed-form even/odd coefficients.
std::vector<UnivariatePoly> ck_recursion_sequence(const UnivariatePoly& A0,
                                                  const UnivariatePoly& A1, unsigned m,
                                                  unsigned jmax);

}  // namespace ckx

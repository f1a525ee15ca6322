#pragma once

#include "ckx/ck.hpp"

#include <optional>

namespace ckx {

enum class FamilyKind { Q, P, H0, H1 };
enum class CoeffKind { appell, harmonic };

/// Family coefficients, exact:
///   appell   T_s^k(m) = C(k,s) ((m+1)/2)_{k-s} ((m-1)/2)_s / (m)_k
///   harmonic T_s^k(m) = C(k,s) ((m-1)/2)_{k-s} ((m-1)/2)_s / (m-1)_k
/// harmonic requires m >= 2 so (m-1)_k != 0.
Rational family_coeff(CoeffKind kind, unsigned k, unsigned s, unsigned m);

/// Generators for the polynomial families:
///   Q  = sum_s appell-coeff x^{k-s} xbar^s        (monogenic)
///   P  = sum_s harmonic-coeff x^{k-s} xbar^s      (axially harmonic)
///   H0 = [Q_k]_0,  H1 = (m/(k+1)) [Q_{k+1}]_1     (harmonic basis)
/// Q_k is memoized per (k, m).
CliffordPolynomial family_poly(FamilyKind kind, unsigned k, unsigned m);

/// H1 through the explicit coefficient formula with the (k+1-2s) factor;
/// an independent route cross-checked against the grade projection.
CliffordPolynomial h1_explicit(unsigned k, unsigned m);

/// gamma_m = (-1)^{(m-1)/2} 2^{m-1} [((m-1)/2)!]^2 / (m-1)!, m odd >= 3.
Rational gamma_m(unsigned m);

/// |x|^k C_k^{(m-1)/2} with the Gegenbauer argument read as the scalar
/// cosine x0/|x|, so only even powers of |x| appear and the result is a
/// scalar polynomial. (k!/(m-1)_k) times this equals P_k^m.
CliffordPolynomial gegenbauer_paravector(unsigned k, unsigned m);

/// Partial sum sum_{k<=N} ((m-1)_k / k!) P_k^m(x) of the Riesz potential
/// |1-x|^{-(m-1)}; exact rational, requires |x| < 1.
CliffordElement riesz_partial_sum(unsigned N, unsigned m, const std::vector<Rational>& point);

namespace testing {

/// Mutation hook for test sensitivity: while set, family_coeff returns
/// value + delta for the matching (kind, k, s, m). Guards against vacuous
/// identity sweeps; never set outside tests/CLI mutation runs.
struct CoeffMutation {
    CoeffKind kind;
    unsigned k, s, m;
    Rational delta;
};
void set_coeff_mutation(std::optional<CoeffMutation> mutation);

}  // namespace testing

}  // namespace ckx

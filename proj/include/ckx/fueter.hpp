#pragma once

#include "ckx/families.hpp"
#include "ckx/report.hpp"

namespace ckx {

/// Slice extension S[f0] = sum_j x^j f0^{(j)}(x0) / j!; for f0 = x0^k this
/// is the paravector power x^k.
CliffordPolynomial slice_extend(const UnivariatePoly& f0, unsigned m);

enum class FueterMapKind { full, harmonic_factor };

/// The Fueter-Sce map and its harmonic factorization (m odd >= 3):
///   full            = Laplacian^{(m-1)/2},
///   harmonic_factor = Laplacian^{(m-3)/2} after the Cauchy-Riemann operator.
CliffordPolynomial fueter_map(FueterMapKind kind, const CliffordPolynomial& p, unsigned m);

enum class DiagramCheckKind { FG, Sceconn, S1, S2, Lappn, Monomial };

std::string diagram_check_name(DiagramCheckKind kind);

/// Verifies one commutative-diagram identity exactly for f0 = x0^k, with
/// LHS and RHS computed through disjoint code paths (iterated operators vs
/// coefficient series). For Lappn, ell indexes the admissible Laplacian
/// power; other kinds ignore it. Failure entries carry both polynomials.
ReportEntry diagram_check(DiagramCheckKind kind, unsigned k, unsigned m, unsigned ell = 0);

}  // namespace ckx

#include "ckx/fueter.hpp"

namespace ckx {

CliffordPolynomial slice_extend(const UnivariatePoly& f0, unsigned m) {
    if (f0.dim() != m) throw std::invalid_argument("slice_extend: dimension mismatch");
    CliffordPolynomial out(m);
    for (unsigned j = 0; j <= f0.degree(); ++j) {
        UnivariatePoly d = f0.derivative(j);
        if (d.is_zero()) break;
        out += variable_power(VarBase::xunderline, j, m) *
               Rational(BigInt(1), factorial(j)) * d.to_polynomial();
    }
    return out;
}

static void require_odd(unsigned m, const char* who) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": m must be odd and >= 3");
}

CliffordPolynomial fueter_map(FueterMapKind kind, const CliffordPolynomial& p, unsigned m) {
    require_odd(m, "fueter_map");
    if (p.dim() != m) throw std::invalid_argument("fueter_map: dimension mismatch");
    if (kind == FueterMapKind::full) return laplacian_power(p, (m - 1) / 2);
    return laplacian_power(cauchy_riemann(p), (m - 3) / 2);
}

std::string diagram_check_name(DiagramCheckKind kind) {
    switch (kind) {
        case DiagramCheckKind::FG: return "FG";
        case DiagramCheckKind::Sceconn: return "Sceconn";
        case DiagramCheckKind::S1: return "S1";
        case DiagramCheckKind::S2: return "S2";
        case DiagramCheckKind::Lappn: return "Lappn";
        case DiagramCheckKind::Monomial: return "Monomial";
    }
    return "?";
}

namespace {

ReportEntry verdict(DiagramCheckKind kind, unsigned k, unsigned m, bool ok, const std::string& witness) {
    std::string name = diagram_check_name(kind);
    if (ok) return make_pass("fueter", name, m, k);
    return make_fail("fueter", name, m, k, witness);
}

std::string witness(const CliffordPolynomial& lhs, const CliffordPolynomial& rhs) {
    return "lhs = " + lhs.str() + "; rhs = " + rhs.str();
}

}  // namespace

ReportEntry diagram_check(DiagramCheckKind kind, unsigned k, unsigned m, unsigned ell) {
    require_odd(m, "diagram_check");
    UnivariatePoly f0 = UnivariatePoly::monomial(m, k);
    CliffordPolynomial slice = slice_extend(f0, m);
    UnivariatePoly zero = UnivariatePoly::zero(m);
    Rational gm = gamma_m(m);

    switch (kind) {
        case DiagramCheckKind::FG: {
            CliffordPolynomial lhs = fueter_map(FueterMapKind::full, slice, m);
            CliffordPolynomial rhs = gck_extend(f0.derivative(m - 1), m) * gm;
            return verdict(kind, k, m, lhs == rhs, witness(lhs, rhs));
        }
        case DiagramCheckKind::Sceconn: {
            CliffordPolynomial lhs = fueter_map(FueterMapKind::harmonic_factor, slice, m);
            CliffordPolynomial rhs = hgck_extend(f0.derivative(m - 2), zero, m) * gm;
            return verdict(kind, k, m, lhs == rhs, witness(lhs, rhs));
        }
        case DiagramCheckKind::S1: {
            CliffordPolynomial lhs = grade_project(fueter_map(FueterMapKind::full, slice, m), 1);
            CliffordPolynomial rhs = hgck_extend(zero, f0.derivative(m), m) * (gm / Rational(m));
            return verdict(kind, k, m, lhs == rhs, witness(lhs, rhs));
        }
        case DiagramCheckKind::S2: {
            CliffordPolynomial lhs = grade_project(fueter_map(FueterMapKind::full, slice, m), 0);
            CliffordPolynomial rhs = hgck_extend(f0.derivative(m - 1), zero, m) * gm;
            return verdict(kind, k, m, lhs == rhs, witness(lhs, rhs));
        }
        case DiagramCheckKind::Lappn: {
            if (ell > (m - 1) / 2)
                throw std::invalid_argument("diagram_check: Lappn requires ell <= (m-1)/2");
            unsigned s = (m - 2 * ell - 1) / 2;
            auto [alpha, beta] = intrinsic_components(f0);
            CliffordPolynomial intrinsic = radial_to_polynomial(AxialPair(alpha, beta));
            Rational half_fact(factorial((m - 1) / 2), BigInt(1));

            CliffordPolynomial lhs1 = laplacian_power(intrinsic, s);
            Rational c1 = Rational(2).pow(s) * half_fact / Rational(factorial(ell), BigInt(1));
            CliffordPolynomial rhs1 =
                radial_to_polynomial(AxialPair(radial_power(RadialOpKind::lower, s, alpha),
                                               radial_power(RadialOpKind::raise, s, beta))) *
                c1;
            bool ok = lhs1 == rhs1;
            std::string wit = witness(lhs1, rhs1);

            if (ok && ell >= 1) {
                CliffordPolynomial lhs2 = laplacian_power(cauchy_riemann(intrinsic), s);
                Rational c2 = Rational(2).pow(s + 1) * half_fact /
                              Rational(factorial(ell - 1), BigInt(1));
                RadialPolynomial a2 = radial_power(RadialOpKind::raise, s, beta).div_r();
                CliffordPolynomial rhs2 =
                    radial_to_polynomial(AxialPair(a2, RadialPolynomial(m, Parity::odd))) * (-c2);
                ok = lhs2 == rhs2;
                wit = witness(lhs2, rhs2);
            }
            std::string name = "Lappn-l" + std::to_string(ell);
            if (ok) return make_pass("fueter", name, m, k);
            return make_fail("fueter", name, m, k, wit);
        }
        case DiagramCheckKind::Monomial: {
            if (k < m - 2)
                throw std::invalid_argument("diagram_check: Monomial requires k >= m-2");
            CliffordPolynomial lhs = fueter_map(FueterMapKind::harmonic_factor, slice, m);
            Rational c = gm * Rational(factorial(k), factorial(k - m + 2));
            CliffordPolynomial rhs_family = family_poly(FamilyKind::P, k - m + 2, m) * c;
            CliffordPolynomial rhs_hgck =
                hgck_extend(UnivariatePoly::monomial(m, k - m + 2), zero, m) * c;
            bool ok = lhs == rhs_family && lhs == rhs_hgck;
            return verdict(kind, k, m, ok, witness(lhs, rhs_family));
        }
    }
    throw std::logic_error("diagram_check: unreachable");
}

}  // namespace ckx

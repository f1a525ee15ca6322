#pragma once

#include "ckx/clifford.hpp"

#include <map>
#include <variant>
#include <vector>

namespace ckx {

/// Exponent vector for x0..xm; length is always m+1.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& mono);

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class VarBase { x, xbar, xunderline };

struct OpDx0 {};
struct OpDirac {};
struct OpCR {};
struct OpCRbar {};
struct OpLaplacian {};
struct OpLaplacianPower { unsigned n; };
using OperatorKind = std::variant<OpDx0, OpDirac, OpCR, OpCRbar, OpLaplacian, OpLaplacianPower>;

/// Polynomial in the commuting real variables x0..xm with CliffordElement
/// coefficients (coefficients sit on the right, as in sum x^alpha c_alpha;
/// only the blade parts fail to commute). Canonical form: |underline(x)|^2
/// is always expanded into sum x_j^2, no zero coefficients stored.
class CliffordPolynomial {
public:
    explicit CliffordPolynomial(unsigned m);

    static CliffordPolynomial zero(unsigned m) { return CliffordPolynomial(m); }
    static CliffordPolynomial constant(const CliffordElement& c);
    static CliffordPolynomial scalar(unsigned m, const Rational& c);
    /// Single variable x_i, 0 <= i <= m.
    static CliffordPolynomial variable(unsigned m, unsigned i);

    unsigned dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;
    const std::map<Monomial, CliffordElement, GradedLex>& terms() const { return terms_; }

    CliffordPolynomial& operator+=(const CliffordPolynomial& o);
    CliffordPolynomial& operator-=(const CliffordPolynomial& o);
    friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
    friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }
    friend CliffordPolynomial operator-(const CliffordPolynomial& a);

    /// Ordered product: coefficients multiply left-to-right, (mc)(m'c') = (mm')(cc').
    friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b);
    friend CliffordPolynomial operator*(const CliffordPolynomial& a, const Rational& s);
    friend CliffordPolynomial operator*(const Rational& s, const CliffordPolynomial& a) { return a * s; }

    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b);
    friend bool operator!=(const CliffordPolynomial& a, const CliffordPolynomial& b) { return !(a == b); }

    void add_term(const Monomial& mono, const CliffordElement& c);
    void add_term(const Monomial& mono, BladeMask blade, const Rational& c);

    std::string str() const;

private:
    unsigned m_;
    std::map<Monomial, CliffordElement, GradedLex> terms_;
};

/// Partial derivative with respect to x_i.
CliffordPolynomial partial(const CliffordPolynomial& p, unsigned i);

/// Apply one of the named differential operators. All act from the left;
/// CR = d/dx0 + Dirac, CRbar = d/dx0 - Dirac, Laplacian = sum of all
/// second partials including x0.
CliffordPolynomial apply_operator(const OperatorKind& kind, const CliffordPolynomial& p);

CliffordPolynomial dirac(const CliffordPolynomial& p);
CliffordPolynomial cauchy_riemann(const CliffordPolynomial& p);
CliffordPolynomial cauchy_riemann_bar(const CliffordPolynomial& p);
CliffordPolynomial laplacian(const CliffordPolynomial& p);
CliffordPolynomial laplacian_power(const CliffordPolynomial& p, unsigned n);

/// Expanded paravector/vector powers: x^k, xbar^k, underline(x)^k.
/// Uses underline(x)^{2p} = (-1)^p (sum x_j^2)^p to stay polynomial.
CliffordPolynomial variable_power(VarBase base, unsigned k, unsigned m);

/// (x_1^2 + ... + x_m^2)^p as a scalar polynomial.
CliffordPolynomial radius_sq_power(unsigned p, unsigned m);

enum class VectorOpKind { inner, wedge };

/// For a 1-vector-valued F = sum F_j e_j:
///   inner -> sum_j dF_j/dx_j (scalar-valued divergence),
///   wedge -> sum_{j<k} e_j e_k (dF_k/dx_j - dF_j/dx_k).
/// Together they give the grade split dirac(F) = -inner(F) + wedge(F).
CliffordPolynomial vector_op_product(VectorOpKind kind, const CliffordPolynomial& F);

/// Exact substitution x_i := point[i].
CliffordElement evaluate(const CliffordPolynomial& p, const std::vector<Rational>& point);

/// Per-coefficient grade projection.
CliffordPolynomial grade_project(const CliffordPolynomial& p, unsigned k);

/// Restriction to the real line: keeps monomials with x_j = 0 for all j >= 1.
/// Result is a polynomial in x0 alone (exponent -> coefficient).
std::map<unsigned, CliffordElement> restrict_to_real_line(const CliffordPolynomial& p);

}  // namespace ckx

#pragma once

#include "ckx/univariate.hpp"

#include <utility>

namespace ckx {

/// Decomposition failed: the input is not of axial type A(x0,r) + w B(x0,r).
struct NotAxial : std::domain_error {
    explicit NotAxial(const std::string& what) : std::domain_error(what) {}
};

enum class Parity { even, odd };

/// Bivariate polynomial profile in (x0, r) with a fixed parity in r:
/// even profiles carry only even r-exponents, odd profiles only odd ones.
/// Odd profiles keep their leading r factor so every division by r stays exact.
class RadialPolynomial {
public:
    RadialPolynomial(unsigned m, Parity parity) : m_(m), parity_(parity) {}

    static RadialPolynomial zero(unsigned m, Parity parity) { return RadialPolynomial(m, parity); }

    unsigned dim() const { return m_; }
    Parity parity() const { return parity_; }
    bool is_zero() const { return terms_.empty(); }
    /// (x0-exponent, r-exponent) -> coefficient.
    const std::map<std::pair<unsigned, unsigned>, CliffordElement>& terms() const { return terms_; }

    void add_term(unsigned x0_exp, unsigned r_exp, const CliffordElement& c);
    void add_term(unsigned x0_exp, unsigned r_exp, const Rational& c);

    RadialPolynomial& operator+=(const RadialPolynomial& o);
    friend RadialPolynomial operator+(RadialPolynomial a, const RadialPolynomial& b) { return a += b; }
    friend RadialPolynomial operator-(const RadialPolynomial& a);
    friend RadialPolynomial operator*(const RadialPolynomial& a, const Rational& s);
    friend bool operator==(const RadialPolynomial& a, const RadialPolynomial& b) {
        return a.m_ == b.m_ && a.parity_ == b.parity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadialPolynomial& a, const RadialPolynomial& b) { return !(a == b); }

    RadialPolynomial d_x0() const;     // parity preserved
    RadialPolynomial d_r() const;      // parity flipped
    RadialPolynomial div_r() const;    // exact; requires every r-exponent >= 1
    RadialPolynomial mul_r() const;    // parity flipped

    std::string str() const;

private:
    unsigned m_;
    Parity parity_;
    std::map<std::pair<unsigned, unsigned>, CliffordElement> terms_;
};

/// Axial representation f = A(x0,r) + w B(x0,r), w = underline(x)/r.
/// A is even in r, B is odd, which makes f polynomial in x0..xm.
struct AxialPair {
    RadialPolynomial A;
    RadialPolynomial B;
    unsigned m;

    AxialPair(RadialPolynomial a, RadialPolynomial b);
    static AxialPair zero(unsigned m) {
        return AxialPair(RadialPolynomial(m, Parity::even), RadialPolynomial(m, Parity::odd));
    }
};

/// Splits a polynomial with grade-{0,1} coefficients into its axial profile.
/// Throws NotAxial when the scalar part is not a polynomial in (x0, r^2) or
/// the 1-vector part is not underline(x) * g(x0, r^2).
AxialPair axial_decompose(const CliffordPolynomial& p);

/// Inverse of axial_decompose: substitutes r^{2j} -> (sum x_j^2)^j and
/// w r^{2j+1} -> underline(x) (sum x_j^2)^j.
CliffordPolynomial radial_to_polynomial(const AxialPair& pair);

/// Residuals of the Vekua system:
///   first  = dA/dx0 - dB/dr - ((m-1)/r) B     (scalar row)
///   second = dB/dx0 + dA/dr                   (w row)
/// Both vanish exactly iff A + wB is monogenic.
std::pair<RadialPolynomial, RadialPolynomial> vekua_residual(const AxialPair& pair);

enum class RadialOpKind { lower, raise };

/// j-fold radial operators of the Fueter-Sce factorization:
///   lower = (1/r d/dr)^j on even profiles,
///   raise = (d/dr 1/r)^j on odd profiles.
/// On monomials: lower^s r^{2j} = 2^s j!/(j-s)! r^{2j-2s} (0 for j < s), and
/// the same factor for raise^s r^{2j+1}.
RadialPolynomial radial_power(RadialOpKind kind, unsigned j, const RadialPolynomial& g);

/// (alpha, beta) of the intrinsic holomorphic extension of a real f0:
///   alpha = sum (-1)^j r^{2j} f0^{(2j)}(x0)/(2j)!,
///   beta  = sum (-1)^j r^{2j+1} f0^{(2j+1)}(x0)/(2j+1)!.
/// Rejects non-real coefficients (intrinsic functions are real on R).
std::pair<RadialPolynomial, RadialPolynomial> intrinsic_components(const UnivariatePoly& f0);

}  // namespace ckx

#pragma once

#include "ckx/polynomial.hpp"

#include <map>

namespace ckx {

/// Polynomial in x0 with CliffordElement coefficients; the initial data of
/// the CK-extension engines.
class UnivariatePoly {
public:
    explicit UnivariatePoly(unsigned m) : m_(m) {}

    static UnivariatePoly zero(unsigned m) { return UnivariatePoly(m); }
    static UnivariatePoly constant(unsigned m, const Rational& c);
    /// c * x0^k with rational c.
    static UnivariatePoly monomial(unsigned m, unsigned k, const Rational& c = Rational(1));

    unsigned dim() const { return m_; }
    bool is_zero() const { return coeffs_.empty(); }
    unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    const std::map<unsigned, CliffordElement>& coeffs() const { return coeffs_; }

    /// True when every coefficient is a pure scalar (grade 0).
    bool is_real() const;

    void add_term(unsigned k, const CliffordElement& c);
    void add_term(unsigned k, const Rational& c) { add_term(k, CliffordElement(m_, c)); }

    UnivariatePoly& operator+=(const UnivariatePoly& o);
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const Rational& s);
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UnivariatePoly& a, const UnivariatePoly& b) { return !(a == b); }

    UnivariatePoly derivative(unsigned n = 1) const;
    /// Antiderivative with integration constant 0.
    UnivariatePoly antiderivative() const;

    CliffordElement evaluate(const Rational& x0) const;

    CliffordPolynomial to_polynomial() const;
    static UnivariatePoly from_restriction(const std::map<unsigned, CliffordElement>& r, unsigned m);
    /// Converts a multivariate polynomial that only involves x0; rejects others.
    static UnivariatePoly from_polynomial(const CliffordPolynomial& p);

    std::string str() const;

private:
    unsigned m_;
    std::map<unsigned, CliffordElement> coeffs_;
};

}  // namespace ckx

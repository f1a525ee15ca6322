#include "ckx/univariate.hpp"

namespace ckx {

UnivariatePoly UnivariatePoly::constant(unsigned m, const Rational& c) {
    UnivariatePoly p(m);
    p.add_term(0, c);
    return p;
}

UnivariatePoly UnivariatePoly::monomial(unsigned m, unsigned k, const Rational& c) {
    UnivariatePoly p(m);
    p.add_term(k, c);
    return p;
}

bool UnivariatePoly::is_real() const {
    for (const auto& [k, c] : coeffs_)
        if (!c.pure_grades(0x1)) return false;
    return true;
}

void UnivariatePoly::add_term(unsigned k, const CliffordElement& c) {
    if (c.dim() != m_) throw std::invalid_argument("UnivariatePoly: coefficient dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (m_ != o.m_) throw std::invalid_argument("UnivariatePoly: dimension mismatch");
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const Rational& s) {
    UnivariatePoly r(a.m_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.coeffs_) r.coeffs_.emplace(k, c * s);
    return r;
}

UnivariatePoly UnivariatePoly::derivative(unsigned n) const {
    UnivariatePoly r = *this;
    for (unsigned i = 0; i < n; ++i) {
        UnivariatePoly d(m_);
        for (const auto& [k, c] : r.coeffs_)
            if (k > 0) d.add_term(k - 1, c * Rational(static_cast<long long>(k)));
        r = std::move(d);
    }
    return r;
}

UnivariatePoly UnivariatePoly::antiderivative() const {
    UnivariatePoly r(m_);
    for (const auto& [k, c] : coeffs_)
        r.add_term(k + 1, c * Rational(1, static_cast<long long>(k) + 1));
    return r;
}

CliffordElement UnivariatePoly::evaluate(const Rational& x0) const {
    CliffordElement r(m_);
    for (const auto& [k, c] : coeffs_) r += c * x0.pow(k);
    return r;
}

CliffordPolynomial UnivariatePoly::to_polynomial() const {
    CliffordPolynomial p(m_);
    for (const auto& [k, c] : coeffs_) {
        Monomial mono(m_ + 1, 0);
        mono[0] = k;
        p.add_term(mono, c);
    }
    return p;
}

UnivariatePoly UnivariatePoly::from_restriction(const std::map<unsigned, CliffordElement>& r,
                                                unsigned m) {
    UnivariatePoly p(m);
    for (const auto& [k, c] : r) p.add_term(k, c);
    return p;
}

UnivariatePoly UnivariatePoly::from_polynomial(const CliffordPolynomial& p) {
    UnivariatePoly r(p.dim());
    for (const auto& [mono, c] : p.terms()) {
        for (size_t i = 1; i < mono.size(); ++i)
            if (mono[i])
                throw std::invalid_argument(
                    "UnivariatePoly: polynomial involves x" + std::to_string(i) +
                    ", expected x0 only");
        r.add_term(mono[0], c);
    }
    return r;
}

std::string UnivariatePoly::str() const { return to_polynomial().str(); }

}  // namespace ckx

#include "ckx/axial.hpp"

#include <bit>
#include <sstream>

namespace ckx {

void RadialPolynomial::add_term(unsigned x0_exp, unsigned r_exp, const CliffordElement& c) {
    if (c.dim() != m_) throw std::invalid_argument("RadialPolynomial: coefficient dimension mismatch");
    if ((r_exp % 2 == 0) != (parity_ == Parity::even))
        throw std::invalid_argument("RadialPolynomial: r-exponent violates parity");
    if (c.is_zero()) return;
    auto key = std::make_pair(x0_exp, r_exp);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void RadialPolynomial::add_term(unsigned x0_exp, unsigned r_exp, const Rational& c) {
    add_term(x0_exp, r_exp, CliffordElement(m_, c));
}

RadialPolynomial& RadialPolynomial::operator+=(const RadialPolynomial& o) {
    if (m_ != o.m_ || parity_ != o.parity_)
        throw std::invalid_argument("RadialPolynomial: dimension/parity mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

RadialPolynomial operator-(const RadialPolynomial& a) {
    RadialPolynomial r(a.m_, a.parity_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

RadialPolynomial operator*(const RadialPolynomial& a, const Rational& s) {
    RadialPolynomial r(a.m_, a.parity_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, c * s);
    return r;
}

RadialPolynomial RadialPolynomial::d_x0() const {
    RadialPolynomial r(m_, parity_);
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(static_cast<long long>(k.first)));
    return r;
}

RadialPolynomial RadialPolynomial::d_r() const {
    RadialPolynomial r(m_, parity_ == Parity::even ? Parity::odd : Parity::even);
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(static_cast<long long>(k.second)));
    return r;
}

RadialPolynomial RadialPolynomial::div_r() const {
    RadialPolynomial r(m_, parity_ == Parity::even ? Parity::odd : Parity::even);
    for (const auto& [k, c] : terms_) {
        if (k.second == 0)
            throw std::invalid_argument("RadialPolynomial::div_r: term with r-exponent 0");
        r.add_term(k.first, k.second - 1, c);
    }
    return r;
}

RadialPolynomial RadialPolynomial::mul_r() const {
    RadialPolynomial r(m_, parity_ == Parity::even ? Parity::odd : Parity::even);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second + 1, c);
    return r;
}

std::string RadialPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first) os << " x0^" << k.first;
        if (k.second) os << " r^" << k.second;
    }
    return os.str();
}

AxialPair::AxialPair(RadialPolynomial a, RadialPolynomial b) : A(std::move(a)), B(std::move(b)), m(A.dim()) {
    if (A.dim() != B.dim()) throw std::invalid_argument("AxialPair: dimension mismatch");
    if (A.parity() != Parity::even || B.parity() != Parity::odd)
        throw std::invalid_argument("AxialPair: A must be even, B odd");
}

namespace {

/// Scalar polynomial in x1..xm (x0 already factored out), as monomial -> value.
using VecPoly = std::map<Monomial, Rational, GradedLex>;

void vecpoly_add(VecPoly& p, const Monomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

/// Writes g(x1..xm) as sum_q c_q (sum x_j^2)^q if possible. Peels the top
/// power by reading the x1^{2q} coefficient; the remainder must vanish.
bool extract_radial(VecPoly g, unsigned m, std::map<unsigned, Rational>& out) {
    while (!g.empty()) {
        unsigned deg = total_degree(g.rbegin()->first);
        if (deg % 2 != 0) return false;
        unsigned q = deg / 2;
        Monomial probe(m + 1, 0);
        probe[1] = deg;
        auto it = g.find(probe);
        if (it == g.end()) return false;
        Rational cq = it->second;
        // subtract cq * (sum x_j^2)^q
        CliffordPolynomial rq = radius_sq_power(q, m);
        for (const auto& [mono, c] : rq.terms()) vecpoly_add(g, mono, -(c.scalar_part() * cq));
        if (!g.empty() && total_degree(g.rbegin()->first) >= deg) return false;
        out[q] += cq;
        if (out[q].is_zero()) out.erase(q);
    }
    return true;
}

}  // namespace

AxialPair axial_decompose(const CliffordPolynomial& p) {
    unsigned m = p.dim();
    // Split by coefficient grade; reject grade >= 2 up front.
    std::map<unsigned, VecPoly> scalar_by_x0;  // x0-exp -> poly in x1..xm
    std::vector<std::map<unsigned, VecPoly>> vec_by_x0(m + 1);
    for (const auto& [mono, c] : p.terms()) {
        if (!c.pure_grades(0x3))
            throw NotAxial("axial_decompose: coefficient has grade-" + std::to_string(c.max_grade()) +
                           " part (grades {0,1} required)");
        Monomial tail(mono);
        unsigned x0e = tail[0];
        tail[0] = 0;
        for (const auto& [mask, r] : c.terms()) {
            if (mask == 0) {
                vecpoly_add(scalar_by_x0[x0e], tail, r);
            } else {
                unsigned j = static_cast<unsigned>(std::countr_zero(mask)) + 1;
                vecpoly_add(vec_by_x0[j][x0e], tail, r);
            }
        }
    }

    RadialPolynomial A(m, Parity::even);
    for (const auto& [x0e, g] : scalar_by_x0) {
        std::map<unsigned, Rational> radial;
        if (!extract_radial(g, m, radial))
            throw NotAxial("axial_decompose: scalar part at x0^" + std::to_string(x0e) +
                           " is not a polynomial in r^2");
        for (const auto& [q, c] : radial) A.add_term(x0e, 2 * q, c);
    }

    // 1-vector part must be underline(x) * g(x0, r^2): every component j
    // divisible by x_j and all components sharing the same radial quotient g.
    std::vector<std::map<unsigned, std::map<unsigned, Rational>>> profiles(m + 1);
    for (unsigned j = 1; j <= m; ++j) {
        for (const auto& [x0e, comp] : vec_by_x0[j]) {
            VecPoly quotient;
            for (const auto& [mono, c] : comp) {
                if (mono[j] == 0)
                    throw NotAxial("axial_decompose: e" + std::to_string(j) +
                                   " component not divisible by x" + std::to_string(j));
                Monomial q(mono);
                q[j] -= 1;
                vecpoly_add(quotient, q, c);
            }
            std::map<unsigned, Rational> radial;
            if (!extract_radial(quotient, m, radial))
                throw NotAxial("axial_decompose: e" + std::to_string(j) +
                               " component is not underline(x) times a radial polynomial");
            if (!radial.empty()) profiles[j][x0e] = radial;
        }
        if (j > 1 && profiles[j] != profiles[1])
            throw NotAxial("axial_decompose: 1-vector components disagree on the radial profile");
    }

    RadialPolynomial B(m, Parity::odd);
    for (const auto& [x0e, radial] : profiles[1])
        for (const auto& [q, c] : radial) B.add_term(x0e, 2 * q + 1, c);

    AxialPair pair(std::move(A), std::move(B));
    return pair;
}

CliffordPolynomial radial_to_polynomial(const AxialPair& pair) {
    unsigned m = pair.m;
    CliffordPolynomial out(m);
    for (const auto& [k, c] : pair.A.terms()) {
        CliffordPolynomial term = radius_sq_power(k.second / 2, m);
        Monomial x0(m + 1, 0);
        x0[0] = k.first;
        CliffordPolynomial shift(m);
        shift.add_term(x0, CliffordElement::one(m));
        out += shift * term * CliffordPolynomial::constant(c);
    }
    for (const auto& [k, c] : pair.B.terms()) {
        // w r^{2q+1} = underline(x) r^{2q}
        unsigned q = k.second / 2;
        CliffordPolynomial xu(m);
        for (unsigned j = 1; j <= m; ++j) {
            Monomial mono(m + 1, 0);
            mono[0] = k.first;
            mono[j] = 1;
            xu.add_term(mono, clifford_mul(CliffordElement::generator(m, j), c));
        }
        out += radius_sq_power(q, m) * xu;
    }
    return out;
}

std::pair<RadialPolynomial, RadialPolynomial> vekua_residual(const AxialPair& pair) {
    long long m = pair.m;
    RadialPolynomial first =
        pair.A.d_x0() + (-(pair.B.d_r())) + (-(pair.B.div_r() * Rational(m - 1)));
    RadialPolynomial second = pair.B.d_x0() + pair.A.d_r();
    return {first, second};
}

RadialPolynomial radial_power(RadialOpKind kind, unsigned j, const RadialPolynomial& g) {
    if (kind == RadialOpKind::lower && g.parity() != Parity::even)
        throw std::invalid_argument("radial_power: lower requires an even profile");
    if (kind == RadialOpKind::raise && g.parity() != Parity::odd)
        throw std::invalid_argument("radial_power: raise requires an odd profile");
    // Single step on a monomial r^n: coefficient n-1 (raise, n odd) or n
    // (lower, n even), exponent drops by 2; the lowest exponent dies.
    RadialPolynomial cur = g;
    for (unsigned s = 0; s < j; ++s) {
        RadialPolynomial next(g.dim(), g.parity());
        for (const auto& [k, c] : cur.terms()) {
            unsigned n = k.second;
            unsigned factor = (kind == RadialOpKind::lower) ? n : n - 1;
            if (factor == 0) continue;
            next.add_term(k.first, n - 2, c * Rational(static_cast<long long>(factor)));
        }
        cur = std::move(next);
    }
    return cur;
}

std::pair<RadialPolynomial, RadialPolynomial> intrinsic_components(const UnivariatePoly& f0) {
    if (!f0.is_real())
        throw std::invalid_argument("intrinsic_components: initial data must be real-valued");
    unsigned m = f0.dim();
    RadialPolynomial alpha(m, Parity::even), beta(m, Parity::odd);
    unsigned deg = f0.degree();
    for (unsigned n = 0; n <= deg; ++n) {
        UnivariatePoly d = f0.derivative(n);
        if (d.is_zero()) break;
        int sign = (n / 2) % 2 == 0 ? 1 : -1;
        Rational c = Rational(sign) / Rational(factorial(n), BigInt(1));
        for (const auto& [k, coeff] : d.coeffs()) {
            if (n % 2 == 0)
                alpha.add_term(k, n, coeff * c);
            else
                beta.add_term(k, n, coeff * c);
        }
    }
    return {alpha, beta};
}

}  // namespace ckx

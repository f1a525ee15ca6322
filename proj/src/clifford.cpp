#include "ckx/clifford.hpp"

#include <bit>
#include <sstream>

namespace ckx {

unsigned blade_grade(BladeMask a) { return static_cast<unsigned>(std::popcount(a)); }

int blade_product_sign(BladeMask a, BladeMask b) {
    // Merge the generators of b (in increasing index order) into a.
    // Each generator of b passes the generators of a with larger index,
    // one transposition each; a squared generator contributes e_j^2 = -1.
    int sign = 1;
    BladeMask acc = a;
    while (b) {
        BladeMask low = b & (~b + 1u);  // lowest set bit of b
        BladeMask above = acc & ~(low | (low - 1u));
        if (blade_grade(above) & 1u) sign = -sign;
        if (acc & low) sign = -sign;  // e_j e_j = -1
        acc ^= low;
        b ^= low;
    }
    return sign;
}

std::string blade_token(BladeMask a) {
    std::string s;
    for (unsigned j = 1; j <= kMaxDim; ++j)
        if (a & (1u << (j - 1))) s += std::to_string(j);
    return s;
}

BladeMask blade_from_token(const std::string& token, unsigned m) {
    BladeMask a = 0;
    unsigned last = 0;
    for (char c : token) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("blade token '" + token + "': bad index character");
        unsigned j = static_cast<unsigned>(c - '0');
        if (j > m)
            throw std::invalid_argument("blade token '" + token + "': index exceeds dimension m=" +
                                        std::to_string(m));
        if (j <= last)
            throw std::invalid_argument("blade token '" + token + "': indices must be increasing");
        last = j;
        a |= 1u << (j - 1);
    }
    return a;
}

CliffordElement::CliffordElement(unsigned m) : m_(m) {
    if (m == 0 || m > kMaxDim) throw std::invalid_argument("CliffordElement: dimension out of range");
}

CliffordElement::CliffordElement(unsigned m, const Rational& scalar) : CliffordElement(m) {
    add_term(0, scalar);
}

CliffordElement CliffordElement::generator(unsigned m, unsigned j) {
    if (j < 1 || j > m) throw std::invalid_argument("generator index out of range");
    return blade(m, 1u << (j - 1));
}

CliffordElement CliffordElement::blade(unsigned m, BladeMask a, const Rational& coeff) {
    CliffordElement e(m);
    if (a >= (1u << m)) throw std::invalid_argument("blade mask exceeds dimension");
    e.add_term(a, coeff);
    return e;
}

Rational CliffordElement::coeff(BladeMask a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned CliffordElement::max_grade() const {
    unsigned g = 0;
    for (const auto& [a, c] : terms_) g = std::max(g, blade_grade(a));
    return g;
}

bool CliffordElement::pure_grades(std::uint32_t grade_bits) const {
    for (const auto& [a, c] : terms_)
        if (!(grade_bits & (1u << blade_grade(a)))) return false;
    return true;
}

void CliffordElement::add_term(BladeMask a, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CliffordElement::check_same_dim(const CliffordElement& o) const {
    if (m_ != o.m_)
        throw std::invalid_argument("CliffordElement: dimension mismatch (" + std::to_string(m_) +
                                    " vs " + std::to_string(o.m_) + ")");
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    check_same_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
    check_same_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

CliffordElement operator-(const CliffordElement& a) {
    CliffordElement r(a.m_);
    for (const auto& [mask, c] : a.terms_) r.terms_.emplace(mask, -c);
    return r;
}

CliffordElement operator*(const CliffordElement& a, const Rational& s) {
    CliffordElement r(a.m_);
    if (s.is_zero()) return r;
    for (const auto& [mask, c] : a.terms_) r.terms_.emplace(mask, c * s);
    return r;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    // Order by (grade, mask) so e.g. scalars print before vectors.
    std::vector<std::pair<BladeMask, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::make_pair(blade_grade(x.first), x.first) <
               std::make_pair(blade_grade(y.first), y.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : sorted) {
        Rational abs = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (a == 0) {
            os << abs.str();
        } else {
            if (abs != Rational(1)) os << abs.str() << " ";
            os << "e" << blade_token(a);
        }
    }
    return os.str();
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("clifford_mul: dimension mismatch");
    CliffordElement r(a.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int sign = blade_product_sign(ma, mb);
            Rational c = ca * cb;
            r.add_term(ma ^ mb, sign < 0 ? -c : c);
        }
    return r;
}

CliffordElement grade_project(const CliffordElement& a, unsigned k) {
    if (k > a.dim()) throw std::invalid_argument("grade_project: grade out of range");
    CliffordElement r(a.dim());
    for (const auto& [mask, c] : a.terms())
        if (blade_grade(mask) == k) r.add_term(mask, c);
    return r;
}

CliffordElement paravector_conjugate(const CliffordElement& a) {
    if (!a.pure_grades(0x3)) {
        throw std::invalid_argument(
            "paravector_conjugate: element has grade-" + std::to_string(a.max_grade()) +
            " part, expected grades {0,1} only");
    }
    CliffordElement r(a.dim());
    for (const auto& [mask, c] : a.terms()) r.add_term(mask, mask == 0 ? c : -c);
    return r;
}

}  // namespace ckx

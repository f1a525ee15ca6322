#pragma once

#include "ckx/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ckx {

/// Basis blade e_A for A ⊆ {1..m}, encoded as a bitset: bit j-1 set means
/// generator e_j is present. Mask 0 is the scalar unit e_∅ = 1.
using BladeMask = std::uint32_t;

constexpr unsigned kMaxDim = 16;

unsigned blade_grade(BladeMask a);

/// Sign picked up when multiplying canonical blades e_A · e_B in R_m
/// (e_j e_l = -e_l e_j for j != l, e_j^2 = -1). Counts the transpositions
/// needed to merge B into A plus one -1 per annihilated pair.
/// The resulting blade mask is a XOR b.
int blade_product_sign(BladeMask a, BladeMask b);

/// Blade token: "" for the scalar unit, "12" for e_1 e_2, indices increasing.
std::string blade_token(BladeMask a);
BladeMask blade_from_token(const std::string& token, unsigned m);

/// Element of the real Clifford algebra R_m with exact rational blade
/// coefficients. Sparse: zero coefficients are never stored. Values are
/// immutable in spirit; every operation returns a fresh element.
class CliffordElement {
public:
    explicit CliffordElement(unsigned m);
    CliffordElement(unsigned m, const Rational& scalar);

    static CliffordElement zero(unsigned m) { return CliffordElement(m); }
    static CliffordElement one(unsigned m) { return CliffordElement(m, Rational(1)); }
    /// Generator e_j, 1 <= j <= m.
    static CliffordElement generator(unsigned m, unsigned j);
    static CliffordElement blade(unsigned m, BladeMask a, const Rational& coeff = Rational(1));

    unsigned dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BladeMask, Rational>& terms() const { return terms_; }

    Rational coeff(BladeMask a) const;
    Rational scalar_part() const { return coeff(0); }

    unsigned max_grade() const;
    bool is_paravector() const { return max_grade() <= 1 && pure_grades(0x3); }
    /// True when every stored blade has grade in the given bit set
    /// (bit k set = grade k allowed).
    bool pure_grades(std::uint32_t grade_bits) const;

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator-(const CliffordElement& a);

    friend CliffordElement operator*(const CliffordElement& a, const Rational& s);
    friend CliffordElement operator*(const Rational& s, const CliffordElement& a) { return a * s; }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b);
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

    void add_term(BladeMask a, const Rational& c);

    std::string str() const;

private:
    void check_same_dim(const CliffordElement& o) const;

    unsigned m_;
    std::map<BladeMask, Rational> terms_;
};

/// Full geometric product in R_m. Dimensions must agree.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);

/// Projection [a]_k onto grade k, 0 <= k <= m.
CliffordElement grade_project(const CliffordElement& a, unsigned k);

/// Paravector conjugate x0 + underline(x) -> x0 - underline(x).
/// Rejects elements with grade-2 or higher parts.
CliffordElement paravector_conjugate(const CliffordElement& a);

}  // namespace ckx

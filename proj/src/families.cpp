#include "ckx/families.hpp"

#include <mutex>
#include <tuple>

namespace ckx {

namespace {
std::optional<testing::CoeffMutation> g_mutation;
std::mutex g_cache_mutex;
}  // namespace

namespace testing {
void set_coeff_mutation(std::optional<CoeffMutation> mutation) { g_mutation = std::move(mutation); }
}  // namespace testing

Rational family_coeff(CoeffKind kind, unsigned k, unsigned s, unsigned m) {
    if (s > k) throw std::invalid_argument("family_coeff: s must satisfy 0 <= s <= k");
    if (m < 2) throw std::invalid_argument("family_coeff: m >= 2 required");
    Rational half(m - 1, 2);
    Rational value;
    if (kind == CoeffKind::appell) {
        value = Rational(binomial(k, s), BigInt(1)) * pochhammer(Rational(m + 1, 2), k - s) *
                pochhammer(half, s) / pochhammer(Rational(m), k);
    } else {
        value = Rational(binomial(k, s), BigInt(1)) * pochhammer(half, k - s) * pochhammer(half, s) /
                pochhammer(Rational(m - 1), k);
    }
    if (g_mutation && g_mutation->kind == kind && g_mutation->k == k && g_mutation->s == s &&
        g_mutation->m == m)
        value += g_mutation->delta;
    return value;
}

namespace {

CliffordPolynomial build_sum_family(CoeffKind kind, unsigned k, unsigned m) {
    CliffordPolynomial out(m);
    for (unsigned s = 0; s <= k; ++s) {
        CliffordPolynomial term =
            variable_power(VarBase::x, k - s, m) * variable_power(VarBase::xbar, s, m);
        out += term * family_coeff(kind, k, s, m);
    }
    return out;
}

CliffordPolynomial cached_sum_family(CoeffKind kind, unsigned k, unsigned m) {
    static std::map<std::tuple<CoeffKind, unsigned, unsigned>, CliffordPolynomial> cache;
    auto key = std::make_tuple(kind, k, m);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CliffordPolynomial p = build_sum_family(kind, k, m);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache.emplace(key, std::move(p)).first->second;
}

}  // namespace

CliffordPolynomial family_poly(FamilyKind kind, unsigned k, unsigned m) {
    if (m < 2) throw std::invalid_argument("family_poly: m >= 2 required");
    switch (kind) {
        case FamilyKind::Q:
            // Mutations must not leak into (or stale out of) the cache.
            if (g_mutation) return build_sum_family(CoeffKind::appell, k, m);
            return cached_sum_family(CoeffKind::appell, k, m);
        case FamilyKind::P:
            if (g_mutation) return build_sum_family(CoeffKind::harmonic, k, m);
            return cached_sum_family(CoeffKind::harmonic, k, m);
        case FamilyKind::H0:
            return grade_project(family_poly(FamilyKind::Q, k, m), 0);
        case FamilyKind::H1:
            return grade_project(family_poly(FamilyKind::Q, k + 1, m), 1) *
                   Rational(m, static_cast<long long>(k) + 1);
    }
    throw std::logic_error("family_poly: unreachable");
}

CliffordPolynomial h1_explicit(unsigned k, unsigned m) {
    CliffordPolynomial out(m);
    Rational half(m - 1, 2);
    Rational scale = Rational(m) / (Rational(static_cast<long long>(k) + 1) * Rational(m + k));
    for (unsigned s = 0; s <= k + 1; ++s) {
        long long factor = static_cast<long long>(k) + 1 - 2 * static_cast<long long>(s);
        if (factor == 0) continue;
        Rational c = Rational(binomial(k + 1, s), BigInt(1)) * pochhammer(half, s) *
                     pochhammer(half, k + 1 - s) / pochhammer(Rational(m - 1), k + 1) *
                     Rational(factor) * scale;
        out += variable_power(VarBase::x, k + 1 - s, m) * variable_power(VarBase::xbar, s, m) * c;
    }
    return out;
}

Rational gamma_m(unsigned m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("gamma_m: m must be odd and >= 3");
    unsigned half = (m - 1) / 2;
    Rational g(factorial(half), BigInt(1));  // Gamma((m+1)/2) = ((m-1)/2)!
    Rational r = Rational(2).pow(m - 1) * g * g / Rational(factorial(m - 1), BigInt(1));
    return half % 2 == 0 ? r : -r;
}

CliffordPolynomial gegenbauer_paravector(unsigned k, unsigned m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("gegenbauer_paravector: m must be odd and >= 3");
    // |x|^k C_k^mu(x0/|x|) = sum_i (-1)^i (mu)_{k-i} / (i! (k-2i)!) 2^{k-2i}
    //                        x0^{k-2i} (x0^2 + r^2)^i,  mu = (m-1)/2.
    Rational mu(m - 1, 2);
    CliffordPolynomial out(m);
    CliffordPolynomial mod_sq =
        variable_power(VarBase::x, 1, m) * variable_power(VarBase::xbar, 1, m);  // |x|^2
    for (unsigned i = 0; 2 * i <= k; ++i) {
        Rational c = pochhammer(mu, k - i) * Rational(2).pow(k - 2 * i) /
                     (Rational(factorial(i), BigInt(1)) * Rational(factorial(k - 2 * i), BigInt(1)));
        if (i % 2 == 1) c = -c;
        CliffordPolynomial term = CliffordPolynomial::scalar(m, c);
        for (unsigned a = 0; a < i; ++a) term = term * mod_sq;
        Monomial x0(m + 1, 0);
        x0[0] = k - 2 * i;
        CliffordPolynomial shift(m);
        shift.add_term(x0, CliffordElement::one(m));
        out += term * shift;
    }
    return out;
}

CliffordElement riesz_partial_sum(unsigned N, unsigned m, const std::vector<Rational>& point) {
    if (point.size() != m + 1)
        throw std::invalid_argument("riesz_partial_sum: point must have m+1 coordinates");
    Rational norm_sq(0);
    for (const auto& c : point) norm_sq += c * c;
    if (norm_sq >= Rational(1)) throw std::invalid_argument("riesz_partial_sum: |x| < 1 required");
    // Evaluation is a ring homomorphism, so P_k^m(x) is summed directly from
    // exact paravector powers instead of expanding the polynomial first.
    CliffordElement x(m, point[0]);
    for (unsigned j = 1; j <= m; ++j) x += CliffordElement::generator(m, j) * point[j];
    CliffordElement xbar = paravector_conjugate(x);
    std::vector<CliffordElement> xpow{CliffordElement::one(m)}, xbarpow{CliffordElement::one(m)};
    for (unsigned k = 1; k <= N; ++k) {
        xpow.push_back(clifford_mul(xpow.back(), x));
        xbarpow.push_back(clifford_mul(xbarpow.back(), xbar));
    }
    CliffordElement sum(m);
    for (unsigned k = 0; k <= N; ++k) {
        CliffordElement pk(m);
        for (unsigned s = 0; s <= k; ++s)
            pk += clifford_mul(xpow[k - s], xbarpow[s]) * family_coeff(CoeffKind::harmonic, k, s, m);
        sum += pk * (pochhammer(Rational(m - 1), k) / Rational(factorial(k), BigInt(1)));
    }
    return sum;
}

}  // namespace ckx

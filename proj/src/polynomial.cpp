#include "ckx/polynomial.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

namespace ckx {

unsigned total_degree(const Monomial& mono) {
    unsigned d = 0;
    for (unsigned e : mono) d += e;
    return d;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

CliffordPolynomial::CliffordPolynomial(unsigned m) : m_(m) {
    if (m == 0 || m > kMaxDim) throw std::invalid_argument("CliffordPolynomial: dimension out of range");
}

CliffordPolynomial CliffordPolynomial::constant(const CliffordElement& c) {
    CliffordPolynomial p(c.dim());
    p.add_term(Monomial(c.dim() + 1, 0), c);
    return p;
}

CliffordPolynomial CliffordPolynomial::scalar(unsigned m, const Rational& c) {
    return constant(CliffordElement(m, c));
}

CliffordPolynomial CliffordPolynomial::variable(unsigned m, unsigned i) {
    if (i > m) throw std::invalid_argument("variable index out of range");
    CliffordPolynomial p(m);
    Monomial mono(m + 1, 0);
    mono[i] = 1;
    p.add_term(mono, CliffordElement::one(m));
    return p;
}

unsigned CliffordPolynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

void CliffordPolynomial::add_term(const Monomial& mono, const CliffordElement& c) {
    if (mono.size() != m_ + 1)
        throw std::invalid_argument("CliffordPolynomial: monomial length must be m+1");
    if (c.dim() != m_) throw std::invalid_argument("CliffordPolynomial: coefficient dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CliffordPolynomial::add_term(const Monomial& mono, BladeMask blade, const Rational& c) {
    add_term(mono, CliffordElement::blade(m_, blade, c));
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& o) {
    if (m_ != o.m_) throw std::invalid_argument("CliffordPolynomial: dimension mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

CliffordPolynomial& CliffordPolynomial::operator-=(const CliffordPolynomial& o) {
    if (m_ != o.m_) throw std::invalid_argument("CliffordPolynomial: dimension mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

CliffordPolynomial operator-(const CliffordPolynomial& a) {
    CliffordPolynomial r(a.m_);
    for (const auto& [mono, c] : a.terms_) r.terms_.emplace(mono, -c);
    return r;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CliffordPolynomial: dimension mismatch");
    CliffordPolynomial r(a.m_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial mono(ma);
            for (size_t i = 0; i < mono.size(); ++i) mono[i] += mb[i];
            r.add_term(mono, clifford_mul(ca, cb));
        }
    return r;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const Rational& s) {
    CliffordPolynomial r(a.m_);
    if (s.is_zero()) return r;
    for (const auto& [mono, c] : a.terms_) r.terms_.emplace(mono, c * s);
    return r;
}

bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
}

std::string CliffordPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [mono, coeff] : terms_) {
        std::vector<std::pair<BladeMask, Rational>> blades(coeff.terms().begin(), coeff.terms().end());
        std::stable_sort(blades.begin(), blades.end(), [](const auto& x, const auto& y) {
            return std::make_pair(blade_grade(x.first), x.first) <
                   std::make_pair(blade_grade(y.first), y.first);
        });
        for (const auto& [mask, c] : blades) {
            Rational abs = c.abs();
            if (first_term) {
                if (c.sign() < 0) os << "-";
                first_term = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            std::string factors;
            for (unsigned i = 0; i < mono.size(); ++i) {
                if (mono[i] == 0) continue;
                if (!factors.empty()) factors += " ";
                factors += "x" + std::to_string(i);
                if (mono[i] > 1) factors += "^" + std::to_string(mono[i]);
            }
            if (mask != 0) {
                if (!factors.empty()) factors += " ";
                factors += "e" + blade_token(mask);
            }
            if (factors.empty()) {
                os << abs.str();
            } else {
                if (abs != Rational(1)) os << abs.str() << " ";
                os << factors;
            }
        }
    }
    return os.str();
}

CliffordPolynomial partial(const CliffordPolynomial& p, unsigned i) {
    if (i > p.dim()) throw std::invalid_argument("partial: variable index out of range");
    CliffordPolynomial r(p.dim());
    for (const auto& [mono, c] : p.terms()) {
        if (mono[i] == 0) continue;
        Monomial d(mono);
        d[i] -= 1;
        r.add_term(d, c * Rational(static_cast<long long>(mono[i])));
    }
    return r;
}

CliffordPolynomial dirac(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.dim());
    for (unsigned j = 1; j <= p.dim(); ++j) {
        CliffordElement ej = CliffordElement::generator(p.dim(), j);
        CliffordPolynomial dj = partial(p, j);
        for (const auto& [mono, c] : dj.terms()) r.add_term(mono, clifford_mul(ej, c));
    }
    return r;
}

CliffordPolynomial cauchy_riemann(const CliffordPolynomial& p) { return partial(p, 0) + dirac(p); }

CliffordPolynomial cauchy_riemann_bar(const CliffordPolynomial& p) { return partial(p, 0) - dirac(p); }

CliffordPolynomial laplacian(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.dim());
    for (unsigned i = 0; i <= p.dim(); ++i) r += partial(partial(p, i), i);
    return r;
}

CliffordPolynomial laplacian_power(const CliffordPolynomial& p, unsigned n) {
    CliffordPolynomial r = p;
    for (unsigned i = 0; i < n; ++i) r = laplacian(r);
    return r;
}

CliffordPolynomial apply_operator(const OperatorKind& kind, const CliffordPolynomial& p) {
    return std::visit(
        [&](const auto& op) -> CliffordPolynomial {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, OpDx0>) return partial(p, 0);
            else if constexpr (std::is_same_v<T, OpDirac>) return dirac(p);
            else if constexpr (std::is_same_v<T, OpCR>) return cauchy_riemann(p);
            else if constexpr (std::is_same_v<T, OpCRbar>) return cauchy_riemann_bar(p);
            else if constexpr (std::is_same_v<T, OpLaplacian>) return laplacian(p);
            else return laplacian_power(p, op.n);
        },
        kind);
}

namespace {

// The power families below are requested constantly by the extension
// engines and the identity sweeps; memoized per argument tuple.
std::mutex g_power_mutex;

CliffordPolynomial radius_sq_power_uncached(unsigned p, unsigned m) {
    CliffordPolynomial rsq(m);
    for (unsigned j = 1; j <= m; ++j) {
        Monomial mono(m + 1, 0);
        mono[j] = 2;
        rsq.add_term(mono, CliffordElement::one(m));
    }
    CliffordPolynomial r = CliffordPolynomial::scalar(m, Rational(1));
    for (unsigned i = 0; i < p; ++i) r = r * rsq;
    return r;
}

/// underline(x)^k expanded: (-1)^p (sum x_j^2)^p for k = 2p, times the
/// 1-vector sum x_j e_j for odd k.
CliffordPolynomial vector_power(unsigned k, unsigned m) {
    unsigned p = k / 2;
    CliffordPolynomial even = radius_sq_power(p, m) * Rational(p % 2 == 0 ? 1 : -1);
    if (k % 2 == 0) return even;
    CliffordPolynomial xu(m);
    for (unsigned j = 1; j <= m; ++j) {
        Monomial mono(m + 1, 0);
        mono[j] = 1;
        xu.add_term(mono, CliffordElement::generator(m, j));
    }
    return even * xu;
}

CliffordPolynomial variable_power_uncached(VarBase base, unsigned k, unsigned m) {
    if (base == VarBase::xunderline) return vector_power(k, m);
    // (x0 +/- underline(x))^k, x0 central: binomial expansion.
    CliffordPolynomial r(m);
    for (unsigned j = 0; j <= k; ++j) {
        Rational c(binomial(k, j), BigInt(1));
        if (base == VarBase::xbar && j % 2 == 1) c = -c;
        CliffordPolynomial term = vector_power(j, m) * c;
        Monomial x0(m + 1, 0);
        x0[0] = k - j;
        CliffordPolynomial shift(m);
        shift.add_term(x0, CliffordElement::one(m));
        r += shift * term;
    }
    return r;
}

}  // namespace

CliffordPolynomial radius_sq_power(unsigned p, unsigned m) {
    static std::map<std::pair<unsigned, unsigned>, CliffordPolynomial> cache;
    auto key = std::make_pair(p, m);
    {
        std::lock_guard<std::mutex> lock(g_power_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CliffordPolynomial r = radius_sq_power_uncached(p, m);
    std::lock_guard<std::mutex> lock(g_power_mutex);
    return cache.emplace(key, std::move(r)).first->second;
}

CliffordPolynomial variable_power(VarBase base, unsigned k, unsigned m) {
    static std::map<std::tuple<VarBase, unsigned, unsigned>, CliffordPolynomial> cache;
    auto key = std::make_tuple(base, k, m);
    {
        std::lock_guard<std::mutex> lock(g_power_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CliffordPolynomial r = variable_power_uncached(base, k, m);
    std::lock_guard<std::mutex> lock(g_power_mutex);
    return cache.emplace(key, std::move(r)).first->second;
}

CliffordPolynomial vector_op_product(VectorOpKind kind, const CliffordPolynomial& F) {
    unsigned m = F.dim();
    // Components F_j as scalar polynomials; reject non-1-vector input.
    std::vector<CliffordPolynomial> comp(m + 1, CliffordPolynomial(m));
    for (const auto& [mono, c] : F.terms()) {
        if (!c.pure_grades(0x2))
            throw std::invalid_argument("vector_op_product: input is not 1-vector-valued");
        for (const auto& [mask, r] : c.terms()) {
            unsigned j = static_cast<unsigned>(std::countr_zero(mask)) + 1;
            comp[j].add_term(mono, CliffordElement(m, r));
        }
    }
    CliffordPolynomial out(m);
    if (kind == VectorOpKind::inner) {
        for (unsigned j = 1; j <= m; ++j) out += partial(comp[j], j);
        return out;
    }
    for (unsigned j = 1; j <= m; ++j)
        for (unsigned k = j + 1; k <= m; ++k) {
            CliffordPolynomial curl = partial(comp[k], j) - partial(comp[j], k);
            CliffordElement ejk = CliffordElement::blade(m, (1u << (j - 1)) | (1u << (k - 1)));
            for (const auto& [mono, c] : curl.terms()) out.add_term(mono, clifford_mul(ejk, c));
        }
    return out;
}

CliffordElement evaluate(const CliffordPolynomial& p, const std::vector<Rational>& point) {
    if (point.size() != p.dim() + 1)
        throw std::invalid_argument("evaluate: point must have m+1 coordinates");
    CliffordElement r(p.dim());
    for (const auto& [mono, c] : p.terms()) {
        Rational v(1);
        for (size_t i = 0; i < mono.size(); ++i)
            if (mono[i]) v *= point[i].pow(mono[i]);
        r += c * v;
    }
    return r;
}

CliffordPolynomial grade_project(const CliffordPolynomial& p, unsigned k) {
    CliffordPolynomial r(p.dim());
    for (const auto& [mono, c] : p.terms()) r.add_term(mono, grade_project(c, k));
    return r;
}

std::map<unsigned, CliffordElement> restrict_to_real_line(const CliffordPolynomial& p) {
    std::map<unsigned, CliffordElement> r;
    for (const auto& [mono, c] : p.terms()) {
        bool pure_x0 = true;
        for (size_t i = 1; i < mono.size(); ++i)
            if (mono[i]) { pure_x0 = false; break; }
        if (pure_x0) r.emplace(mono[0], c);
    }
    return r;
}

}  // namespace ckx

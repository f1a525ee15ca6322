#include "ckx/verify.hpp"

#include "ckx/fueter.hpp"
#include "ckx/json_io.hpp"
#include "ckx/numeric.hpp"
#include "ckx/parse.hpp"
#include "ckx/planewave.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace ckx {

namespace {

unsigned pool_size(unsigned requested, std::size_t njobs) {
    unsigned n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("CK_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) n = static_cast<unsigned>(v);
        }
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(njobs, 1)));
}

/// Runs the jobs in a small pool; results land at their job index, so the
/// combined report is independent of scheduling.
std::vector<ReportEntry> run_jobs(const std::vector<std::function<std::vector<ReportEntry>()>>& jobs,
                                  unsigned threads) {
    std::vector<std::vector<ReportEntry>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    unsigned n = pool_size(threads, jobs.size());
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            try {
                results[i] = jobs[i]();
            } catch (const std::exception& e) {
                results[i] = {make_fail("internal", "exception", 0, std::nullopt, e.what())};
            }
        }
    };
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<ReportEntry> flat;
    for (auto& r : results)
        for (auto& e : r) flat.push_back(std::move(e));
    return flat;
}

std::vector<unsigned> m_or(const VerifyOptions& opt, std::initializer_list<unsigned> dflt) {
    return opt.m_list.empty() ? std::vector<unsigned>(dflt) : opt.m_list;
}

unsigned k_or(const VerifyOptions& opt, unsigned dflt) { return opt.kmax ? opt.kmax : dflt; }

Rational random_rational(std::mt19937_64& rng, int max_abs = 9) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

CliffordElement random_element(std::mt19937_64& rng, unsigned m, unsigned max_blades = 3) {
    CliffordElement e(m);
    std::uniform_int_distribution<unsigned> nblades(1, max_blades);
    std::uniform_int_distribution<BladeMask> mask(0, (1u << m) - 1);
    unsigned n = nblades(rng);
    for (unsigned i = 0; i < n; ++i) e.add_term(mask(rng), random_rational(rng));
    return e;
}

CliffordElement random_vector(std::mt19937_64& rng, unsigned m) {
    CliffordElement e(m);
    for (unsigned j = 1; j <= m; ++j) e += CliffordElement::generator(m, j) * random_rational(rng);
    return e;
}

CliffordPolynomial random_polynomial(std::mt19937_64& rng, unsigned m, unsigned max_deg,
                                     unsigned max_terms = 6) {
    CliffordPolynomial p(m);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> expd(0, max_deg);
    std::uniform_int_distribution<unsigned> var(0, m);
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        Monomial mono(m + 1, 0);
        unsigned budget = expd(rng);
        for (unsigned d = 0; d < budget; ++d) mono[var(rng)] += 1;
        p.add_term(mono, random_element(rng, m));
    }
    return p;
}

// ---------------------------------------------------------------- algebra

/// Brute-force blade product oracle: concatenate generator lists, bubble
/// into order counting sign flips, cancel equal neighbours with e_j^2 = -1.
std::pair<int, BladeMask> blade_product_bruteforce(BladeMask a, BladeMask b) {
    std::vector<unsigned> gens;
    for (unsigned j = 0; j < kMaxDim; ++j)
        if (a & (1u << j)) gens.push_back(j);
    for (unsigned j = 0; j < kMaxDim; ++j)
        if (b & (1u << j)) gens.push_back(j);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
            if (gens[i] > gens[i + 1]) {
                std::swap(gens[i], gens[i + 1]);
                sign = -sign;
                changed = true;
            } else if (gens[i] == gens[i + 1]) {
                gens.erase(gens.begin() + static_cast<long>(i),
                           gens.begin() + static_cast<long>(i) + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    BladeMask mask = 0;
    for (unsigned g : gens) mask |= 1u << g;
    return {sign, mask};
}

std::vector<ReportEntry> algebra_anticommute(unsigned m) {
    for (unsigned j = 1; j <= m; ++j)
        for (unsigned l = 1; l <= m; ++l) {
            CliffordElement ej = CliffordElement::generator(m, j);
            CliffordElement el = CliffordElement::generator(m, l);
            CliffordElement anti = clifford_mul(ej, el) + clifford_mul(el, ej);
            CliffordElement expected =
                j == l ? CliffordElement(m, Rational(-2)) : CliffordElement::zero(m);
            if (anti != expected)
                return {make_fail("algebra", "anticommute", m, std::nullopt,
                                  "e" + std::to_string(j) + ", e" + std::to_string(l))};
        }
    return {make_pass("algebra", "anticommute", m)};
}

std::vector<ReportEntry> algebra_blade_sign_oracle(unsigned m) {
    for (BladeMask a = 0; a < (1u << m); ++a)
        for (BladeMask b = 0; b < (1u << m); ++b) {
            auto [sign, mask] = blade_product_bruteforce(a, b);
            if (sign != blade_product_sign(a, b) || mask != (a ^ b))
                return {make_fail("algebra", "blade-sign-oracle", m, std::nullopt,
                                  "a=" + blade_token(a) + " b=" + blade_token(b))};
        }
    return {make_pass("algebra", "blade-sign-oracle", m)};
}

std::vector<ReportEntry> algebra_associativity(unsigned m, std::uint64_t seed, unsigned rounds) {
    std::mt19937_64 rng(seed + m);
    for (unsigned i = 0; i < rounds; ++i) {
        CliffordElement a = random_element(rng, m), b = random_element(rng, m),
                        c = random_element(rng, m);
        if (clifford_mul(clifford_mul(a, b), c) != clifford_mul(a, clifford_mul(b, c)))
            return {make_fail("algebra", "associativity", m, i,
                              a.str() + " | " + b.str() + " | " + c.str())};
    }
    return {make_pass("algebra", "associativity", m, std::nullopt,
                      std::to_string(rounds) + " random triples")};
}

std::vector<ReportEntry> algebra_vector_identities(unsigned m, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 77 * m);
    for (unsigned i = 0; i < 100; ++i) {
        CliffordElement u = random_vector(rng, m), v = random_vector(rng, m);
        Rational inner(0);
        for (unsigned j = 1; j <= m; ++j) inner += u.coeff(1u << (j - 1)) * v.coeff(1u << (j - 1));
        CliffordElement sym = clifford_mul(u, v) + clifford_mul(v, u);
        if (sym != CliffordElement(m, Rational(-2) * inner))
            return {make_fail("algebra", "vector-identities", m, i, "uv+vu != -2<u,v>")};
        CliffordElement wedge(m);
        for (unsigned j = 1; j <= m; ++j)
            for (unsigned k = j + 1; k <= m; ++k) {
                Rational c = u.coeff(1u << (j - 1)) * v.coeff(1u << (k - 1)) -
                             u.coeff(1u << (k - 1)) * v.coeff(1u << (j - 1));
                wedge.add_term((1u << (j - 1)) | (1u << (k - 1)), c);
            }
        CliffordElement asym = clifford_mul(u, v) - clifford_mul(v, u);
        if (asym != wedge * Rational(2))
            return {make_fail("algebra", "vector-identities", m, i, "uv-vu != 2 u^v")};
        CliffordElement x = u + CliffordElement(m, random_rational(rng));
        CliffordElement nrm = clifford_mul(x, paravector_conjugate(x));
        Rational expect(0);
        for (const auto& [mask, coeff] : x.terms()) expect += coeff * coeff;
        if (nrm != CliffordElement(m, expect))
            return {make_fail("algebra", "vector-identities", m, i, "x conj(x) != |x|^2")};
        CliffordElement e = random_element(rng, m, 4);
        CliffordElement sum(m);
        for (unsigned g = 0; g <= m; ++g) sum += grade_project(e, g);
        if (sum != e) return {make_fail("algebra", "vector-identities", m, i, "grading incomplete")};
    }
    return {make_pass("algebra", "vector-identities", m)};
}

// ------------------------------------------------------------- polynomial

std::vector<ReportEntry> polynomial_factorization(unsigned m, std::uint64_t seed, unsigned rounds) {
    std::mt19937_64 rng(seed + 11 * m);
    for (unsigned i = 0; i < rounds; ++i) {
        CliffordPolynomial p = random_polynomial(rng, m, 4);
        CliffordPolynomial lap = laplacian(p);
        if (lap != cauchy_riemann(cauchy_riemann_bar(p)) ||
            lap != cauchy_riemann_bar(cauchy_riemann(p)))
            return {make_fail("polynomial", "factorization", m, i,
                              "CR CRbar != Laplacian on " + p.str())};
        if (partial(dirac(p), 0) != dirac(partial(p, 0)))
            return {make_fail("polynomial", "factorization", m, i,
                              "[Dx0, Dirac] != 0 on " + p.str())};
    }
    return {make_pass("polynomial", "factorization", m, std::nullopt,
                      std::to_string(rounds) + " random polynomials")};
}

std::vector<ReportEntry> polynomial_vecpower_laplacian(unsigned m) {
    for (unsigned j = 2; j <= 10; ++j) {
        CliffordPolynomial lhs = laplacian(variable_power(VarBase::xunderline, j, m));
        CliffordPolynomial rhs =
            variable_power(VarBase::xunderline, j - 2, m) * vector_power_laplacian_coeff(m, j);
        if (lhs != rhs)
            return {make_fail("polynomial", "vecpower-laplacian", m, j,
                              "lhs = " + lhs.str() + "; rhs = " + rhs.str())};
    }
    return {make_pass("polynomial", "vecpower-laplacian", m)};
}

std::vector<ReportEntry> polynomial_dirac_split(unsigned m, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 13 * m);
    for (unsigned i = 0; i < 50; ++i) {
        CliffordPolynomial F(m);
        for (unsigned j = 1; j <= m; ++j) {
            CliffordPolynomial comp = random_polynomial(rng, m, 3, 3);
            for (const auto& [mono, c] : comp.terms())
                F.add_term(mono, CliffordElement::generator(m, j) * c.scalar_part());
        }
        if (F.is_zero()) continue;
        CliffordPolynomial expect =
            -vector_op_product(VectorOpKind::inner, F) + vector_op_product(VectorOpKind::wedge, F);
        if (dirac(F) != expect)
            return {make_fail("polynomial", "dirac-split", m, i, "Dirac != -inner + wedge")};
    }
    return {make_pass("polynomial", "dirac-split", m)};
}

// ------------------------------------------------------------------ axial

std::vector<ReportEntry> axial_radial_1n(unsigned m) {
    for (unsigned n = 0; n <= 20; ++n) {
        Parity par = n % 2 == 0 ? Parity::even : Parity::odd;
        for (unsigned s = 1; s <= 4; ++s) {
            RadialPolynomial g(m, par);
            g.add_term(0, n, Rational(1));
            RadialPolynomial got =
                radial_power(par == Parity::even ? RadialOpKind::lower : RadialOpKind::raise, s, g);
            unsigned j = n / 2;
            RadialPolynomial expect(m, par);
            if (j >= s) {
                Rational c = Rational(2).pow(s) * Rational(factorial(j), factorial(j - s));
                expect.add_term(0, n - 2 * s, c);
            }
            if (got != expect)
                return {make_fail("axial", "radial-1N", m, n, "s=" + std::to_string(s))};
        }
    }
    return {make_pass("axial", "radial-1N", m)};
}

std::vector<ReportEntry> axial_lemma51(unsigned m, unsigned kmax) {
    for (unsigned k = 0; k <= kmax; ++k) {
        auto [alpha, beta] = intrinsic_components(UnivariatePoly::monomial(m, k));
        for (unsigned j = 1; 2 * j <= m - 1; ++j) {
            Rational prod(1);
            for (unsigned l = 1; l <= j; ++l)
                prod *= Rational(static_cast<long long>(m) - 2 * static_cast<long long>(l) + 1);
            CliffordPolynomial ha =
                radial_to_polynomial(AxialPair(alpha, RadialPolynomial(m, Parity::odd)));
            CliffordPolynomial lhs_a = laplacian_power(ha, j);
            CliffordPolynomial rhs_a =
                radial_to_polynomial(AxialPair(radial_power(RadialOpKind::lower, j, alpha),
                                               RadialPolynomial(m, Parity::odd))) *
                prod;
            if (lhs_a != rhs_a)
                return {make_fail("axial", "lemma51", m, k,
                                  "alpha branch, j=" + std::to_string(j) + "; lhs = " + lhs_a.str() +
                                      "; rhs = " + rhs_a.str())};
            CliffordPolynomial hb =
                radial_to_polynomial(AxialPair(RadialPolynomial(m, Parity::even), beta));
            CliffordPolynomial lhs_b = laplacian_power(hb, j);
            CliffordPolynomial rhs_b =
                radial_to_polynomial(AxialPair(RadialPolynomial(m, Parity::even),
                                               radial_power(RadialOpKind::raise, j, beta))) *
                prod;
            if (lhs_b != rhs_b)
                return {make_fail("axial", "lemma51", m, k, "beta branch, j=" + std::to_string(j))};
        }
    }
    return {make_pass("axial", "lemma51", m)};
}

std::vector<ReportEntry> axial_vekua_gck(unsigned m, unsigned kmax) {
    for (unsigned k = 0; k <= kmax; ++k) {
        CliffordPolynomial g = gck_extend(UnivariatePoly::monomial(m, k), m);
        AxialPair pair = axial_decompose(g);
        auto [r1, r2] = vekua_residual(pair);
        if (!r1.is_zero() || !r2.is_zero())
            return {make_fail("axial", "vekua-gck", m, k,
                              "residuals (" + r1.str() + ", " + r2.str() + ")")};
        if (radial_to_polynomial(pair) != g)
            return {make_fail("axial", "vekua-gck", m, k, "decompose/rebuild round-trip failed")};
    }
    return {make_pass("axial", "vekua-gck", m)};
}

std::vector<ReportEntry> axial_roundtrip(unsigned m, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 29 * m);
    std::uniform_int_distribution<unsigned> expo(0, 4);
    for (unsigned i = 0; i < 40; ++i) {
        RadialPolynomial A(m, Parity::even), B(m, Parity::odd);
        for (unsigned t = 0; t < 3; ++t) {
            A.add_term(expo(rng), 2 * expo(rng), random_rational(rng));
            B.add_term(expo(rng), 2 * expo(rng) + 1, random_rational(rng));
        }
        AxialPair pair(A, B);
        AxialPair back = axial_decompose(radial_to_polynomial(pair));
        if (back.A != pair.A || back.B != pair.B)
            return {make_fail("axial", "roundtrip", m, i, "decompose(rebuild) != id")};
    }
    try {
        CliffordPolynomial bad(m);
        Monomial mono(m + 1, 0);
        mono[1] = 1;
        bad.add_term(mono, CliffordElement::generator(m, std::min(2u, m)));
        axial_decompose(bad);
        return {make_fail("axial", "roundtrip", m, std::nullopt, "x1 e2 accepted as axial")};
    } catch (const NotAxial&) {
    }
    return {make_pass("axial", "roundtrip", m)};
}

// --------------------------------------------------------------------- ck

std::vector<ReportEntry> ck_harmonic_monogenic(unsigned m, unsigned k) {
    std::vector<ReportEntry> out;
    UnivariatePoly zero = UnivariatePoly::zero(m);
    UnivariatePoly mono = UnivariatePoly::monomial(m, k);
    CliffordPolynomial h0 = hgck_extend(mono, zero, m);
    CliffordPolynomial h1 = hgck_extend(zero, mono, m);
    bool harmonic = laplacian(h0).is_zero() && laplacian(h1).is_zero() &&
                    UnivariatePoly::from_restriction(restrict_to_real_line(h0), m) == mono;
    out.push_back(harmonic ? make_pass("ck", "hgck-harmonic", m, k)
                           : make_fail("ck", "hgck-harmonic", m, k,
                                       "Laplacian residual or restriction mismatch"));
    out.push_back(cauchy_riemann(gck_extend(mono, m)).is_zero()
                      ? make_pass("ck", "gck-monogenic", m, k)
                      : make_fail("ck", "gck-monogenic", m, k, "CR residual nonzero"));
    out.push_back(cauchy_riemann(cauchy_riemann_bar(hgck_extend(mono, mono, m))).is_zero()
                      ? make_pass("ck", "dbar-hgck-monogenic", m, k)
                      : make_fail("ck", "dbar-hgck-monogenic", m, k, "CR(CRbar(HGCK)) != 0"));
    return out;
}

std::vector<ReportEntry> ck_recursion(unsigned m, unsigned kmax) {
    UnivariatePoly a0 = UnivariatePoly::monomial(m, kmax);
    UnivariatePoly a1 = UnivariatePoly::monomial(m, kmax > 0 ? kmax - 1 : 0);
    unsigned jmax = kmax + 2;
    auto seq = ck_recursion_sequence(a0, a1, m, jmax);
    CkCoefficients ck = CkCoefficients::make(m, jmax / 2 + 2);
    for (unsigned j = 0; j <= jmax; ++j) {
        UnivariatePoly expect =
            j % 2 == 0 ? a0.derivative(j) * ck.even[j / 2] : a1.derivative(j - 1) * ck.odd[j / 2];
        if (seq[j] != expect)
            return {make_fail("ck", "recursion-NN", m, j, "A_j mismatch")};
    }
    return {make_pass("ck", "recursion-NN", m)};
}

std::vector<ReportEntry> ck_recovery_split(unsigned m, unsigned k) {
    std::vector<ReportEntry> out;
    UnivariatePoly zero = UnivariatePoly::zero(m);
    UnivariatePoly a0 = UnivariatePoly::monomial(m, k);
    UnivariatePoly a1 = UnivariatePoly::monomial(m, k > 1 ? k - 1 : k);
    auto [r0, r1] = recover_initial(hgck_extend(a0, a1, m), m);
    out.push_back(r0 == a0 && r1 == a1
                      ? make_pass("ck", "recovery", m, k)
                      : make_fail("ck", "recovery", m, k, "recover(hgck) != (A0, A1)"));
    bool h1ok = false;
    try {
        h1ok = hgck_gck_split(a0, a1, m) == hgck_extend(a0, a1, m);
    } catch (const std::logic_error&) {
    }
    out.push_back(h1ok ? make_pass("ck", "split-H1", m, k)
                       : make_fail("ck", "split-H1", m, k, "split route mismatch"));
    CliffordPolynomial h2 =
        hgck_extend(a0, zero, m) + hgck_extend(zero, a0.derivative(), m) * Rational(1, m);
    out.push_back(gck_extend(a0, m) == h2 ? make_pass("ck", "split-H2", m, k)
                                          : make_fail("ck", "split-H2", m, k, ""));
    return out;
}

std::vector<ReportEntry> ck_recovery_random(unsigned m, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 41 * m);
    for (unsigned i = 0; i < 5; ++i) {
        UnivariatePoly a0(m), a1(m);
        for (unsigned d = 0; d <= 4; ++d) {
            a0.add_term(d, random_rational(rng));
            a1.add_term(d, random_rational(rng));
        }
        auto [r0, r1] = recover_initial(hgck_extend(a0, a1, m), m);
        if (r0 != a0 || r1 != a1)
            return {make_fail("ck", "recovery-random", m, std::nullopt,
                              "random data round-trip failed")};
    }
    return {make_pass("ck", "recovery-random", m)};
}

// --------------------------------------------------------------- families

std::vector<ReportEntry> families_identities(unsigned m, unsigned k) {
    std::vector<ReportEntry> out;
    auto check = [&](const char* name, bool ok, const std::string& wit = "") {
        out.push_back(ok ? make_pass("families", name, m, k)
                         : make_fail("families", name, m, k, wit));
        return ok;
    };
    CliffordPolynomial P = family_poly(FamilyKind::P, k, m);
    CliffordPolynomial Q = family_poly(FamilyKind::Q, k, m);
    check("P-harmonic", laplacian(P).is_zero(), "Laplacian residual nonzero");
    check("Q-monogenic", cauchy_riemann(Q).is_zero(), "CR residual nonzero");
    if (k >= 1) {
        CliffordPolynomial lhs = P * Rational(static_cast<long long>(m) - 1);
        CliffordPolynomial rhs =
            Q * Rational(static_cast<long long>(k + m) - 1) -
            variable_power(VarBase::x, 1, m) * family_poly(FamilyKind::Q, k - 1, m) *
                Rational(static_cast<long long>(k));
        check("rell", lhs == rhs, "lhs = " + lhs.str() + "; rhs = " + rhs.str());
        check("appell",
              cauchy_riemann_bar(Q) * Rational(1, 2) ==
                  family_poly(FamilyKind::Q, k - 1, m) * Rational(static_cast<long long>(k)),
              "(1/2) CRbar Q_k != k Q_{k-1}");
    }
    // coefficient lemmas
    Rational sum(0);
    bool sym = true, idd = true, idd1 = true;
    for (unsigned s = 0; s <= k; ++s) {
        Rational t = family_coeff(CoeffKind::harmonic, k, s, m);
        sum += t;
        sym = sym && t == family_coeff(CoeffKind::harmonic, k, k - s, m);
        Rational mm1(static_cast<long long>(m) - 1);
        Rational kpm(static_cast<long long>(k + m) - 1);
        if (s == k) {
            idd = idd && mm1 * t == kpm * family_coeff(CoeffKind::appell, k, k, m);
        } else {
            idd1 = idd1 && mm1 * t == kpm * family_coeff(CoeffKind::appell, k, s, m) -
                                          Rational(static_cast<long long>(k)) *
                                              family_coeff(CoeffKind::appell, k - 1, s, m);
        }
    }
    check("sum-symmetry", sym, "T_s != T_{k-s}");
    check("sum-one", sum == Rational(1), "sum = " + sum.str());
    check("idd", idd, "(m-1) T_k^k != (k+m-1) appell T_k^k");
    check("idd1", idd1, "(m-1) T_s^k != (k+m-1) T_s^k - k T_s^{k-1}");
    // real-valuedness of P: axial profile has B = 0, A scalar.
    try {
        AxialPair pair = axial_decompose(P);
        bool a_real = true;
        for (const auto& [key, c] : pair.A.terms()) a_real = a_real && c.pure_grades(0x1);
        check("P-real", pair.B.is_zero() && a_real, "axial profile not real");
    } catch (const NotAxial& e) {
        check("P-real", false, e.what());
    }
    // H1 via grade projection vs the explicit coefficient formula.
    check("H1-two-routes", family_poly(FamilyKind::H1, k, m) == h1_explicit(k, m), "");
    return out;
}

std::vector<ReportEntry> families_basis(unsigned m, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 53 * m);
    for (unsigned i = 0; i < 10; ++i) {
        UnivariatePoly a0(m), a1(m);
        CliffordPolynomial combo(m);
        std::uniform_int_distribution<unsigned> degd(0, 5);
        unsigned da = degd(rng), db = degd(rng);
        for (unsigned j = 0; j <= da; ++j) {
            Rational c = random_rational(rng);
            a0.add_term(j, c);
            combo += family_poly(FamilyKind::H0, j, m) * c;
        }
        for (unsigned l = 0; l <= db; ++l) {
            Rational c = random_rational(rng);
            a1.add_term(l, c);
            combo += family_poly(FamilyKind::H1, l, m) * c;
        }
        if (hgck_extend(a0, a1, m) != combo)
            return {make_fail("families", "basis-reconstruction", m, i, "")};
    }
    return {make_pass("families", "basis-reconstruction", m)};
}

/// Pins the H0/H1 derivative system empirically at k <= 3, then sweeps.
/// The sign/factor candidates the pinning decided against are reported as
/// info entries so the resolved conventions are on record.
std::vector<ReportEntry> families_derivative_system(unsigned m, unsigned kmax) {
    std::vector<ReportEntry> out;
    // Pin signs at small k: test dx0 H0_k = s * k * H0_{k-1} for s in {1,-1}.
    int pin_dx0 = 0;
    for (int s : {1, -1}) {
        bool ok = true;
        for (unsigned k = 1; k <= 3; ++k)
            ok = ok && partial(family_poly(FamilyKind::H0, k, m), 0) ==
                           family_poly(FamilyKind::H0, k - 1, m) *
                               Rational(s * static_cast<long long>(k));
        if (ok) pin_dx0 = s;
    }
    // Pin the divergence factor: inner(H1_{k-1}) = c * H0_{k-1}, c in {m, k}.
    bool inner_is_m = true, inner_is_k = true;
    for (unsigned k = 1; k <= 3; ++k) {
        CliffordPolynomial innr =
            vector_op_product(VectorOpKind::inner, family_poly(FamilyKind::H1, k - 1, m));
        inner_is_m =
            inner_is_m && innr == family_poly(FamilyKind::H0, k - 1, m) * Rational(m);
        inner_is_k = inner_is_k &&
                     innr == family_poly(FamilyKind::H0, k - 1, m) *
                                 Rational(static_cast<long long>(k));
    }
    if (pin_dx0 == 0 || !inner_is_m) {
        out.push_back(make_fail("families", "derivative-system", m, std::nullopt,
                                "could not pin the system at k <= 3"));
        return out;
    }
    for (unsigned k = 1; k <= kmax; ++k) {
        // dx0 H0_k = k H0_{k-1};  dx0 H1_k = k H1_{k-1}
        if (partial(family_poly(FamilyKind::H0, k, m), 0) !=
            family_poly(FamilyKind::H0, k - 1, m) * Rational(pin_dx0 * static_cast<long long>(k)))
            return {make_fail("families", "derivative-system", m, k, "dx0 H0_k != k H0_{k-1}")};
        if (partial(family_poly(FamilyKind::H1, k, m), 0) !=
            family_poly(FamilyKind::H1, k - 1, m) * Rational(pin_dx0 * static_cast<long long>(k)))
            return {make_fail("families", "derivative-system", m, k, "dx0 H1_k != k H1_{k-1}")};
        // inner(dx, H1_{k-1}) = m H0_{k-1};  wedge(dx, H1_{k-1}) = 0
        CliffordPolynomial h1prev = family_poly(FamilyKind::H1, k - 1, m);
        if (vector_op_product(VectorOpKind::inner, h1prev) !=
            family_poly(FamilyKind::H0, k - 1, m) * Rational(m))
            return {make_fail("families", "derivative-system", m, k, "inner != m H0_{k-1}")};
        if (!vector_op_product(VectorOpKind::wedge, h1prev).is_zero())
            return {make_fail("families", "derivative-system", m, k, "wedge != 0")};
        // Dirac H0_k = -(k(k-1)/m) H1_{k-2}
        if (k >= 2) {
            Rational c = Rational(-(static_cast<long long>(k) * (static_cast<long long>(k) - 1)),
                                  static_cast<long long>(m));
            if (dirac(family_poly(FamilyKind::H0, k, m)) !=
                family_poly(FamilyKind::H1, k - 2, m) * c)
                return {make_fail("families", "derivative-system", m, k,
                                  "Dirac H0_k != -(k(k-1)/m) H1_{k-2}")};
        }
    }
    out.push_back(make_pass("families", "derivative-system", m, std::nullopt,
                            "pinned: dx0 H0_k = +k H0_{k-1}, inner = m H0"));
    if (pin_dx0 > 0)
        out.push_back(make_info("families", "derivative-system-deviation", m, std::nullopt,
                                "candidate dx0 H0_k = -k H0_{k-1} rejected; computed sign is +k"));
    if (inner_is_m && !inner_is_k)
        out.push_back(
            make_info("families", "derivative-system-deviation", m, std::nullopt,
                      "candidate <dx, H1_{k-1}> = k H0_{k-1} rejected; computed factor is m"));
    return out;
}

std::vector<ReportEntry> families_gegenbauer(unsigned m, unsigned kmax) {
    for (unsigned k = 0; k <= kmax; ++k) {
        Rational scale =
            Rational(factorial(k), BigInt(1)) / pochhammer(Rational(m - 1), k);
        if (gegenbauer_paravector(k, m) * scale != family_poly(FamilyKind::P, k, m))
            return {make_fail("families", "gegenbauer", m, k,
                              "k!/(m-1)_k |x|^k C_k(x0/|x|) != P_k^m")};
    }
    return {make_pass("families", "gegenbauer", m, std::nullopt,
                      "scalar-cosine reading of the Gegenbauer argument")};
}

std::vector<ReportEntry> families_gamma() {
    if (gamma_m(3) != Rational(-2)) return {make_fail("families", "gamma", 3, std::nullopt, "")};
    if (gamma_m(5) != Rational(8, 3)) return {make_fail("families", "gamma", 5, std::nullopt, "")};
    if (gamma_m(7) != Rational(-16, 5)) return {make_fail("families", "gamma", 7, std::nullopt, "")};
    return {make_pass("families", "gamma", 3, std::nullopt, "gamma_3 = -2, gamma_5 = 8/3, gamma_7 = -16/5")};
}

std::vector<ReportEntry> families_riesz_real_line() {
    // On the real line (m = 3): sum_{k<=N} (k+1) t^k has a rational closed
    // form; exact identity at t = 1/2.
    unsigned m = 3, N = 40;
    Rational t(1, 2);
    std::vector<Rational> point(m + 1, Rational(0));
    point[0] = t;
    CliffordElement sum = riesz_partial_sum(N, m, point);
    Rational one_minus = Rational(1) - t;
    Rational closed = (Rational(1) - Rational(N + 2) * t.pow(N + 1) +
                       Rational(N + 1) * t.pow(N + 2)) /
                      (one_minus * one_minus);
    if (sum != CliffordElement(m, closed))
        return {make_fail("families", "riesz-real-line", m, N,
                          "partial sum != geometric closed form")};
    return {make_pass("families", "riesz-real-line", m)};
}

// ----------------------------------------------------------------- fueter

std::vector<ReportEntry> fueter_checks_at_k(unsigned m, unsigned k) {
    std::vector<ReportEntry> out;
    out.push_back(diagram_check(DiagramCheckKind::FG, k, m));
    out.push_back(diagram_check(DiagramCheckKind::Sceconn, k, m));
    out.push_back(diagram_check(DiagramCheckKind::S1, k, m));
    out.push_back(diagram_check(DiagramCheckKind::S2, k, m));
    for (unsigned ell = 0; 2 * ell <= m - 1; ++ell)
        out.push_back(diagram_check(DiagramCheckKind::Lappn, k, m, ell));
    if (k >= m - 2) out.push_back(diagram_check(DiagramCheckKind::Monomial, k, m));
    return out;
}

std::vector<ReportEntry> fueter_mapping_at_k(unsigned m, unsigned k) {
    UnivariatePoly f0 = UnivariatePoly::monomial(m, k);
    CliffordPolynomial slice = slice_extend(f0, m);
    if (slice != variable_power(VarBase::x, k, m))
        return {make_fail("fueter", "mapping", m, k, "S[x0^k] != x^k")};
    if (!cauchy_riemann(fueter_map(FueterMapKind::full, slice, m)).is_zero())
        return {make_fail("fueter", "mapping", m, k, "full map output not monogenic")};
    if (!laplacian(fueter_map(FueterMapKind::harmonic_factor, slice, m)).is_zero())
        return {make_fail("fueter", "mapping", m, k, "harmonic factor output not harmonic")};
    return {make_pass("fueter", "mapping", m, k)};
}

std::vector<ReportEntry> fueter_recovery(unsigned m, unsigned kmax) {
    // Restriction data of Delta^{(m-3)/2} D S[x0^k]: A0 = gamma_m k!/(k-m+2)! x0^{k-m+2},
    // A1 = 0.
    for (unsigned k = m - 2; k <= kmax; ++k) {
        CliffordPolynomial g =
            fueter_map(FueterMapKind::harmonic_factor,
                       slice_extend(UnivariatePoly::monomial(m, k), m), m);
        UnivariatePoly a0 = UnivariatePoly::from_restriction(restrict_to_real_line(g), m);
        UnivariatePoly expect =
            UnivariatePoly::monomial(m, k - m + 2,
                                     gamma_m(m) * Rational(factorial(k), factorial(k - m + 2)));
        if (a0 != expect)
            return {make_fail("fueter", "recovery-consistency", m, k, "A0 mismatch")};
        UnivariatePoly a1 =
            UnivariatePoly::from_restriction(restrict_to_real_line(dirac(g)), m) * Rational(-1, m);
        if (!a1.is_zero())
            return {make_fail("fueter", "recovery-consistency", m, k, "A1 branch not zero")};
    }
    return {make_pass("fueter", "recovery-consistency", m)};
}

std::vector<ReportEntry> fueter_ff_and_remark(unsigned kmax) {
    // m = 3: D S[f0] = -2 HGCK[f0', 0]  and  D x^k = -2 sum_{s=1}^k x^{k-s} xbar^{s-1}.
    unsigned m = 3;
    UnivariatePoly zero = UnivariatePoly::zero(m);
    for (unsigned k = 0; k <= kmax; ++k) {
        UnivariatePoly f0 = UnivariatePoly::monomial(m, k);
        CliffordPolynomial lhs = cauchy_riemann(slice_extend(f0, m));
        CliffordPolynomial rhs = hgck_extend(f0.derivative(), zero, m) * Rational(-2);
        if (lhs != rhs) return {make_fail("fueter", "FF", m, k, "D S[f0] != -2 HGCK[f0',0]")};
        CliffordPolynomial sum(m);
        for (unsigned s = 1; s <= k; ++s)
            sum += variable_power(VarBase::x, k - s, m) * variable_power(VarBase::xbar, s - 1, m);
        if (lhs != sum * Rational(-2))
            return {make_fail("fueter", "Dxk-remark", m, k,
                              "D x^k != -2 sum x^{k-s} xbar^{s-1}")};
    }
    return {make_pass("fueter", "FF", m), make_pass("fueter", "Dxk-remark", m)};
}

// -------------------------------------------------------------- planewave

std::vector<ReportEntry> planewave_reconstruct_sweep(unsigned m, unsigned degmax) {
    for (unsigned a = 0; a <= degmax; ++a)
        for (unsigned b = 0; b <= degmax; ++b) {
            UnivariatePoly a0 = UnivariatePoly::monomial(m, a);
            UnivariatePoly a1 = UnivariatePoly::monomial(m, b);
            CliffordPolynomial rec = planewave_reconstruct(a0, a1, m);
            CliffordPolynomial ref = hgck_extend(a0, a1, m);
            if (rec != ref)
                return {make_fail("planewave", "reconstruct", m,
                                  static_cast<long long>(a * 100 + b),
                                  "pair (x0^" + std::to_string(a) + ", x0^" + std::to_string(b) +
                                      "): lhs = " + rec.str() + "; rhs = " + ref.str())};
        }
    return {make_pass("planewave", "reconstruct", m, std::nullopt,
                      "all monomial pairs deg <= " + std::to_string(degmax))};
}

std::vector<ReportEntry> planewave_moments(unsigned m) {
    // Funk-Hecke vs the P1/P2 rearrangements.
    for (unsigned j = 0; j <= 6; ++j) {
        PiRational fh = sphere_moment(2 * j, 0, m).value;
        PiRational p1{Rational(2), static_cast<int>(m) - 1};
        p1 *= gamma_exact(Rational(2 * j + 1, 2));
        PiRational den = gamma_exact(Rational(m + 2 * j, 2));
        p1.coeff /= den.coeff;
        p1.sqrt_pi_pow -= den.sqrt_pi_pow;
        if (!(fh == p1))
            return {make_fail("planewave", "moment-P1", m, j, fh.str() + " vs " + p1.str())};

        PiRational fh1 = sphere_moment(2 * j + 1, 1, m).value;
        PiRational p2{Rational(2 * j + 1), static_cast<int>(m) - 1};
        p2 *= gamma_exact(Rational(2 * j + 1, 2));
        PiRational den2 = gamma_exact(Rational(m + 2 * j + 2, 2));
        p2.coeff /= den2.coeff;
        p2.sqrt_pi_pow -= den2.sqrt_pi_pow;
        if (!(fh1 == p2))
            return {make_fail("planewave", "moment-P2", m, j, fh1.str() + " vs " + p2.str())};
    }
    return {make_pass("planewave", "moment-P1", m), make_pass("planewave", "moment-P2", m)};
}

std::vector<ReportEntry> planewave_moment_spots() {
    std::vector<ReportEntry> out;
    SphereMoment m20 = sphere_moment(2, 0, 3);
    if (m20.value == PiRational{Rational(4, 3), 2})
        out.push_back(make_pass("planewave", "moment-spot", 3, 2, "moment(2,0,3) = (4/3) pi"));
    else
        out.push_back(make_fail("planewave", "moment-spot", 3, 2, "got " + m20.value.str()));
    SphereMoment m11 = sphere_moment(1, 1, 3);
    if (m11.value == PiRational{Rational(4, 3), 2})
        out.push_back(make_pass("planewave", "moment-spot", 3, 1, "moment(1,1,3) = (4/3) pi"));
    else
        out.push_back(make_fail("planewave", "moment-spot", 3, 1, "got " + m11.value.str()));
    if (!sphere_moment(1, 0, 4).value.is_zero())
        out.push_back(make_fail("planewave", "moment-spot", 4, 1, "odd moment not zero"));
    return out;
}

std::vector<ReportEntry> planewave_mc_check(std::uint64_t samples, std::uint64_t seed) {
    // A0 = x0^2, A1 = 0, m = 3 at (1, 0.5, 0, 0): exact value 11/12 on the
    // scalar blade (P_2^3(1, 0.5, 0, 0) = 1 - 0.25/3).
    unsigned m = 3;
    UnivariatePoly a0 = UnivariatePoly::monomial(m, 2);
    UnivariatePoly a1 = UnivariatePoly::zero(m);
    std::vector<double> point{1.0, 0.5, 0.0, 0.0};
    McResult r1 = planewave_mc(a0, a1, m, samples, seed, point);
    double exact = 11.0 / 12.0;
    double err = std::abs(r1.estimate.coeff[0] - exact);
    double se = r1.stderr_.coeff[0];
    std::vector<ReportEntry> out;
    std::ostringstream d1;
    d1 << "estimate " << r1.estimate.coeff[0] << ", exact " << exact << ", stderr " << se;
    if (err <= 3 * se)
        out.push_back(make_pass("planewave", "mc-estimate", m, static_cast<long long>(samples),
                                d1.str()));
    else
        out.push_back(make_fail("planewave", "mc-estimate", m, static_cast<long long>(samples),
                                d1.str()));
    McResult r4 = planewave_mc(a0, a1, m, samples * 4, seed, point);
    double ratio = se / r4.stderr_.coeff[0];
    std::ostringstream d2;
    d2 << "stderr ratio N->4N = " << ratio;
    if (ratio >= 1.8 && ratio <= 2.2)
        out.push_back(make_pass("planewave", "mc-convergence", m, std::nullopt, d2.str()));
    else
        out.push_back(make_fail("planewave", "mc-convergence", m, std::nullopt, d2.str()));
    return out;
}

// ---------------------------------------------------------------- numeric

std::vector<ReportEntry> numeric_bessel(double tol) {
    // Half-integer closed forms as oracles on rho in [0.25, 2].
    auto closed = [](unsigned nu_twice, double rho) {
        double c = std::sqrt(2.0 / M_PI);
        double s = std::sin(rho), co = std::cos(rho);
        switch (nu_twice) {
            case 1: return c * s / rho;
            case 3: return c * (s - rho * co) / (rho * rho * rho);
            case 5: return c * ((3.0 - rho * rho) * s - 3.0 * rho * co) / std::pow(rho, 5);
            default: throw std::logic_error("no closed form");
        }
    };
    for (unsigned nu_twice : {1u, 3u, 5u}) {
        for (double rho = 0.25; rho <= 2.0 + 1e-12; rho += 0.25) {
            double got = bessel_tilde(nu_twice, rho, 25);
            double want = closed(nu_twice, rho);
            if (std::abs(got - want) > tol)
                return {make_fail("numeric", "bessel-closed", 0, nu_twice,
                                  "rho=" + std::to_string(rho) + " diff=" +
                                      std::to_string(std::abs(got - want)))};
        }
        // rho -> 0 limit equals the j = 0 term.
        double limit = 1.0 / (std::pow(2.0, nu_twice / 2.0) *
                              gamma_exact(Rational(nu_twice + 2, 2)).to_double());
        if (std::abs(bessel_tilde(nu_twice, 0.0, 5) - limit) > tol)
            return {make_fail("numeric", "bessel-closed", 0, nu_twice, "rho=0 limit")};
    }
    return {make_pass("numeric", "bessel-closed", 0)};
}

std::vector<ReportEntry> numeric_hermite() {
    for (unsigned n = 0; n <= 16; ++n)
        for (double x : {-2.0, -0.5, 0.0, 0.7, 1.0, 2.0}) {
            double a = hermite(n, x), b = hermite_recurrence(n, x);
            double scale = std::max(1.0, std::abs(b));
            if (std::abs(a - b) > 1e-9 * scale)
                return {make_fail("numeric", "hermite-oracle", 0, n, "x=" + std::to_string(x))};
        }
    if (hermite(1, 0.5) != 0.5 || hermite(0, 3.0) != 1.0)
        return {make_fail("numeric", "hermite-oracle", 0, std::nullopt, "H_0/H_1 spot values")};
    return {make_pass("numeric", "hermite-oracle", 0)};
}

std::vector<ReportEntry> numeric_riesz(double tol) {
    // m = 3, x = 0.3 e1: riesz = 100/109 exactly; partial sums are exact
    // rationals, so the whole convergence statement is checked exactly.
    unsigned m = 3;
    std::vector<Rational> point(m + 1, Rational(0));
    point[1] = Rational(3, 10);
    Rational target(100, 109);
    Rational prev_err;
    bool have_prev = false;
    for (unsigned N = 5; N <= 25; ++N) {
        Rational err = (riesz_partial_sum(N, m, point).scalar_part() - target).abs();
        if (have_prev && err > prev_err)
            return {make_fail("numeric", "riesz-monotone", m, N, "error increased")};
        prev_err = err;
        have_prev = true;
    }
    Rational final_err = (riesz_partial_sum(25, m, point).scalar_part() - target).abs();
    if (final_err.to_double() > tol)
        return {make_fail("numeric", "riesz-converges", m, 25,
                          "error = " + std::to_string(final_err.to_double()))};
    std::vector<double> fpoint{0.0, 0.3, 0.0, 0.0};
    double fdiff = std::abs(riesz_partial_sum(25, m, point).scalar_part().to_double() -
                            riesz_eval(m, fpoint));
    if (fdiff > tol)
        return {make_fail("numeric", "riesz-converges", m, 25, "float eval disagrees")};
    return {make_pass("numeric", "riesz-converges", m), make_pass("numeric", "riesz-monotone", m)};
}

std::vector<ReportEntry> numeric_examples(const VerifyOptions& opt) {
    std::vector<ReportEntry> out;
    unsigned m = 3;
    unsigned N = opt.numeric_n;

    // Spot residuals at the catalogue points.
    double r31 = example_residual(NumericExample::ex31, m, {0.5, 0.5, 0.0, 0.0}, N);
    out.push_back(r31 <= opt.tol_ex31
                      ? make_pass("numeric", "ex31-residual", m, N, "residual = " + std::to_string(r31))
                      : make_fail("numeric", "ex31-residual", m, N,
                                  "residual = " + std::to_string(r31)));
    double r31_origin = example_residual(NumericExample::ex31, m, {0.7, 0.0, 0.0, 0.0}, N);
    out.push_back(r31_origin <= 1e-12
                      ? make_pass("numeric", "ex31-restriction", m, N,
                                  "both sides reduce to e^{x0} at r = 0")
                      : make_fail("numeric", "ex31-restriction", m, N,
                                  "residual = " + std::to_string(r31_origin)));
    double r32 = example_residual(NumericExample::ex32, m, {0.5, 0.5, 0.0, 0.0}, N);
    out.push_back(r32 <= opt.tol_ex32
                      ? make_pass("numeric", "ex32-residual", m, N, "residual = " + std::to_string(r32))
                      : make_fail("numeric", "ex32-residual", m, N,
                                  "residual = " + std::to_string(r32)));
    double r33 = example_residual(NumericExample::ex33, m, {0.2, 0.0, 0.3, 0.0}, N);
    out.push_back(r33 <= opt.tol_ex33
                      ? make_pass("numeric", "ex33-residual", m, N, "residual = " + std::to_string(r33))
                      : make_fail("numeric", "ex33-residual", m, N,
                                  "residual = " + std::to_string(r33)));

    // Truncation regression on box points with r large enough that the
    // N = 10 truncation error sits well above float noise.
    std::vector<std::vector<double>> box = {
        {1.0, 2.0, 0.0, 0.0}, {-1.0, 0.0, 2.0, 0.0}, {1.0, 1.9, 0.6, 0.0}};
    for (NumericExample which :
         {NumericExample::ex31, NumericExample::ex32, NumericExample::ex33}) {
        const char* name = which == NumericExample::ex31   ? "ex31"
                           : which == NumericExample::ex32 ? "ex32"
                                                           : "ex33";
        for (std::size_t i = 0; i < box.size(); ++i) {
            double hi = example_residual(which, m, box[i], 10);
            double lo = example_residual(which, m, box[i], 25);
            if (!(lo < hi))
                return {make_fail("numeric", std::string(name) + "-regression", m,
                                  static_cast<long long>(i),
                                  "residual(25) = " + std::to_string(lo) +
                                      " !< residual(10) = " + std::to_string(hi))};
        }
        out.push_back(make_pass("numeric", std::string(name) + "-regression", m));
    }

    // Resolve the Hermite normalization question: exactly one pairing is
    // derivative-consistent with the Gaussian data; record both residuals.
    std::vector<double> probe{0.5, 1.0, 0.0, 0.0};
    double ex32_phys = example_residual(NumericExample::ex32, m, probe, N, HermiteReading::physicists);
    double ex32_prob = example_residual(NumericExample::ex32, m, probe, N, HermiteReading::probabilists);
    double ex33_phys = example_residual(NumericExample::ex33, m, probe, N, HermiteReading::physicists);
    double ex33_prob = example_residual(NumericExample::ex33, m, probe, N, HermiteReading::probabilists);
    bool resolved = ex32_phys <= opt.tol_ex32 && ex33_phys <= opt.tol_ex33 &&
                    ex32_prob > 1e-3 && ex33_prob > 1e-3;
    std::ostringstream d;
    d << "resolved reading: physicists' Hermite with exp(-x0^2) "
      << "(ex32 residual " << ex32_phys << ", ex33 " << ex33_phys
      << "); probabilists'+exp(-x0^2/2) reading residuals: ex32 " << ex32_prob
      << ", ex33 " << ex33_prob;
    out.push_back(resolved ? make_pass("numeric", "hermite-normalization", m, std::nullopt, d.str())
                           : make_fail("numeric", "hermite-normalization", m, std::nullopt, d.str()));
    return out;
}

// ----------------------------------------------------------------- parser

std::vector<ReportEntry> parser_roundtrip(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 99);
    for (unsigned i = 0; i < 1000; ++i) {
        unsigned m = 2 + static_cast<unsigned>(rng() % 3);  // 2..4
        CliffordPolynomial p = random_polynomial(rng, m, 5);
        CliffordPolynomial back = parse_polynomial(print_polynomial(p), m);
        if (back != p)
            return {make_fail("parser", "roundtrip", m, i,
                              "text was: " + print_polynomial(p))};
    }
    return {make_pass("parser", "roundtrip", 4, std::nullopt, "1000 random polynomials")};
}

std::vector<ReportEntry> parser_spots() {
    CliffordPolynomial p =
        parse_polynomial("x0^2 - 1/3 x1^2 - 1/3 x2^2 - 1/3 x3^2", 3);
    if (p != family_poly(FamilyKind::P, 2, 3))
        return {make_fail("parser", "spot", 3, std::nullopt, "P_2^3 text mismatch")};
    CliffordPolynomial one = parse_polynomial("1", 3);
    if (one != CliffordPolynomial::scalar(3, Rational(1)))
        return {make_fail("parser", "spot", 3, std::nullopt, "unit polynomial")};
    CliffordPolynomial mixed = parse_polynomial("2 x0 e12 + x1", 3);
    CliffordPolynomial expect(3);
    Monomial m0(4, 0);
    m0[0] = 1;
    expect.add_term(m0, CliffordElement::blade(3, 0x3, Rational(2)));
    Monomial m1(4, 0);
    m1[1] = 1;
    expect.add_term(m1, CliffordElement::one(3));
    if (mixed != expect) return {make_fail("parser", "spot", 3, std::nullopt, "mixed-grade text")};
    for (const char* bad : {"x9", "e21", "x0 ^", "1/0", "e0", "+"}) {
        try {
            parse_polynomial(bad, 3);
            return {make_fail("parser", "spot", 3, std::nullopt,
                              std::string("accepted malformed input '") + bad + "'")};
        } catch (const ParseError&) {
        }
    }
    return {make_pass("parser", "spot", 3)};
}

}  // namespace

// -------------------------------------------------------------- suites

VerificationReport run_algebra_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {2, 3, 4, 5, 6}))
        jobs.push_back([m] { return algebra_anticommute(m); });
    for (unsigned m : {2u, 3u, 4u})
        jobs.push_back([m] { return algebra_blade_sign_oracle(m); });
    for (unsigned m : {2u, 3u, 4u, 5u})
        jobs.push_back([m, &opt] { return algebra_associativity(m, opt.seed, 250); });
    for (unsigned m : m_or(opt, {2, 3, 4, 5}))
        jobs.push_back([m, &opt] { return algebra_vector_identities(m, opt.seed); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_polynomial_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {2, 3, 4}))
        jobs.push_back([m, &opt] { return polynomial_factorization(m, opt.seed, 70); });
    for (unsigned m : m_or(opt, {2, 3, 4, 5, 6, 7}))
        jobs.push_back([m] { return polynomial_vecpower_laplacian(m); });
    for (unsigned m : m_or(opt, {2, 3, 4}))
        jobs.push_back([m, &opt] { return polynomial_dirac_split(m, opt.seed); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_axial_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    unsigned kmax = k_or(opt, 8);
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {2, 3, 5}))
        jobs.push_back([m] { return axial_radial_1n(m); });
    for (unsigned m : m_or(opt, {5, 7})) {
        if (m >= 3 && m % 2 == 1)
            jobs.push_back([m, kmax] { return axial_lemma51(m, kmax); });
    }
    for (unsigned m : m_or(opt, {3, 5, 7}))
        jobs.push_back([m, kmax] { return axial_vekua_gck(m, kmax); });
    for (unsigned m : m_or(opt, {2, 3, 4}))
        jobs.push_back([m, &opt] { return axial_roundtrip(m, opt.seed); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_ck_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    unsigned kmax = k_or(opt, 10);
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {2, 3, 4, 5, 6, 7})) {
        for (unsigned k = 0; k <= kmax; ++k) {
            jobs.push_back([m, k] { return ck_harmonic_monogenic(m, k); });
            jobs.push_back([m, k] { return ck_recovery_split(m, k); });
        }
        jobs.push_back([m, kmax] { return ck_recursion(m, kmax); });
        jobs.push_back([m, &opt] { return ck_recovery_random(m, opt.seed); });
    }
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_families_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    unsigned kmax = k_or(opt, 8);
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {3, 5, 7, 9})) {
        for (unsigned k = 0; k <= kmax; ++k)
            jobs.push_back([m, k] { return families_identities(m, k); });
        jobs.push_back([m, &opt] { return families_basis(m, opt.seed); });
    }
    for (unsigned m : m_or(opt, {3, 5, 7}))
        jobs.push_back([m, kmax] { return families_derivative_system(m, kmax); });
    for (unsigned m : m_or(opt, {3, 5, 7})) {
        if (m % 2 == 1)
            jobs.push_back([m, kmax] { return families_gegenbauer(m, kmax); });
    }
    jobs.push_back([] { return families_gamma(); });
    jobs.push_back([] { return families_riesz_real_line(); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_fueter_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {3, 5, 7})) {
        if (m < 3 || m % 2 == 0)
            throw std::invalid_argument("fueter suite: m must be odd and >= 3");
        unsigned kmax = opt.kmax ? opt.kmax : m + 6;
        for (unsigned k = 0; k <= kmax; ++k) {
            jobs.push_back([m, k] { return fueter_checks_at_k(m, k); });
            jobs.push_back([m, k] { return fueter_mapping_at_k(m, k); });
        }
        jobs.push_back([m, kmax] { return fueter_recovery(m, kmax); });
    }
    jobs.push_back([&opt] { return fueter_ff_and_remark(k_or(opt, 8)); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_planewave_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    unsigned degmax = k_or(opt, 6);
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    for (unsigned m : m_or(opt, {2, 3, 4, 5, 6, 7})) {
        jobs.push_back([m, degmax] { return planewave_reconstruct_sweep(m, degmax); });
        jobs.push_back([m] { return planewave_moments(m); });
    }
    jobs.push_back([] { return planewave_moment_spots(); });
    jobs.push_back([&opt] { return planewave_mc_check(opt.mc_samples, opt.seed); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_numeric_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    jobs.push_back([&opt] { return numeric_bessel(opt.tol_bessel); });
    jobs.push_back([] { return numeric_hermite(); });
    jobs.push_back([&opt] { return numeric_riesz(opt.tol_riesz); });
    jobs.push_back([&opt] { return numeric_examples(opt); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

VerificationReport run_parser_suite(const VerifyOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    std::vector<std::function<std::vector<ReportEntry>()>> jobs;
    jobs.push_back([&opt] { return parser_roundtrip(opt.seed); });
    jobs.push_back([] { return parser_spots(); });
    rep.entries = run_jobs(jobs, opt.threads);
    rep.finalize();
    return rep;
}

std::vector<std::string> suite_names() {
    return {"algebra", "polynomial", "axial", "ck", "families", "fueter", "planewave", "numeric",
            "parser"};
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "algebra") return run_algebra_suite(opt);
    if (suite == "polynomial") return run_polynomial_suite(opt);
    if (suite == "axial") return run_axial_suite(opt);
    if (suite == "ck") return run_ck_suite(opt);
    if (suite == "families") return run_families_suite(opt);
    if (suite == "fueter") return run_fueter_suite(opt);
    if (suite == "planewave") return run_planewave_suite(opt);
    if (suite == "numeric") return run_numeric_suite(opt);
    if (suite == "parser") return run_parser_suite(opt);
    if (suite == "all") {
        VerificationReport rep;
        rep.seed = opt.seed;
        for (const auto& name : suite_names()) rep.merge(run_suite(name, opt));
        rep.finalize();
        return rep;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace ckx

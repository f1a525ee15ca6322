#pragma once

#include "ckx/ck.hpp"

#include <cstdint>

namespace ckx {

/// Exact rational times an integer power of sqrt(pi). The sphere-moment
/// constants always combine to sqrt_pi_pow == 0 in the reconstruction,
/// which turns a numeric identity into an exact one.
struct PiRational {
    Rational coeff;
    int sqrt_pi_pow = 0;

    bool is_zero() const { return coeff.is_zero(); }
    PiRational& operator*=(const PiRational& o) {
        coeff *= o.coeff;
        sqrt_pi_pow = coeff.is_zero() ? 0 : sqrt_pi_pow + o.sqrt_pi_pow;
        return *this;
    }
    friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.coeff == b.coeff && (a.is_zero() || a.sqrt_pi_pow == b.sqrt_pi_pow);
    }
    double to_double() const;
    std::string str() const;
};

/// Gamma of a positive integer or half-integer argument, exactly:
/// Gamma(n) = (n-1)!, Gamma(n + 1/2) = (2n)!/(4^n n!) sqrt(pi).
PiRational gamma_exact(const Rational& a);

/// Funk-Hecke sphere moment for harmonic degree k in {0,1}:
///   integral over S^{m-1} of <x,w>^n w^k dS = value * |x|^{n-k} x^k
/// (x the 1-vector variable). Zero when n-k is odd.
struct SphereMoment {
    unsigned m = 0;
    unsigned n = 0;
    unsigned k = 0;
    PiRational value;
};

SphereMoment sphere_moment(unsigned n, unsigned k, unsigned m);

/// Plane-wave reconstruction of the harmonic CK-extension (sphere-moment
/// route, disjoint from the coefficient-series engine):
///   c_m sum_j (-1)^j/(2j)!   moment(2j,0)   |x|^{2j}    A0^{(2j)}
/// + m c_m sum_j (-1)^j/(2j+1)! moment(2j+1,1) |x|^{2j} x A1^{(2j)},
/// c_m = Gamma(m/2)/(2 pi^{m/2}). Every pi exponent must cancel; a leftover
/// exponent throws (it would mean a moment bug).
CliffordPolynomial planewave_reconstruct(const UnivariatePoly& A0, const UnivariatePoly& A1,
                                         unsigned m);

/// Dense multivector with double coefficients, indexed by blade mask.
struct FloatMultivector {
    unsigned m = 0;
    std::vector<double> coeff;  // size 2^m

    explicit FloatMultivector(unsigned m_) : m(m_), coeff(std::size_t(1) << m_, 0.0) {}
    static FloatMultivector from_exact(const CliffordElement& e);
    double max_abs_diff(const FloatMultivector& o) const;
};

struct McResult {
    FloatMultivector estimate;
    FloatMultivector stderr_;
    std::uint64_t samples = 0;

    McResult(unsigned m) : estimate(m), stderr_(m) {}
};

/// Monte-Carlo witness of the plane-wave decomposition: averages the
/// bracketed integrand over uniform w in S^{m-1} (Gaussian normalization
/// sampling); c_m |S^{m-1}| = 1 so the sample mean already estimates the
/// function value at `point`. Deterministic for a fixed seed, independent
/// of any chunking.
McResult planewave_mc(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m,
                      std::uint64_t samples, std::uint64_t seed, const std::vector<double>& point);

}  // namespace ckx

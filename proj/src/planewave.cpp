#include "ckx/planewave.hpp"

#include <cmath>

namespace ckx {

double PiRational::to_double() const {
    return coeff.to_double() * std::pow(std::sqrt(M_PI), sqrt_pi_pow);
}

std::string PiRational::str() const {
    if (sqrt_pi_pow == 0 || coeff.is_zero()) return coeff.str();
    std::string s = coeff.str();
    if (sqrt_pi_pow % 2 == 0) {
        s += " pi";
        if (sqrt_pi_pow != 2) s += "^" + std::to_string(sqrt_pi_pow / 2);
    } else {
        s += " pi^(" + std::to_string(sqrt_pi_pow) + "/2)";
    }
    return s;
}

PiRational gamma_exact(const Rational& a) {
    if (a <= Rational(0)) throw std::invalid_argument("gamma_exact: positive argument required");
    if (a.is_integer()) {
        unsigned n = static_cast<unsigned>(a.numerator());
        return {Rational(factorial(n - 1), BigInt(1)), 0};
    }
    if (a.denominator() != 2)
        throw std::invalid_argument("gamma_exact: argument must be integer or half-integer");
    // a = n + 1/2: Gamma = (2n)!/(4^n n!) sqrt(pi)
    unsigned n = static_cast<unsigned>((a - Rational(1, 2)).numerator());
    Rational r(factorial(2 * n), BigInt(1));
    r /= Rational(4).pow(n) * Rational(factorial(n), BigInt(1));
    return {r, 1};
}

SphereMoment sphere_moment(unsigned n, unsigned k, unsigned m) {
    if (k > 1) throw std::invalid_argument("sphere_moment: only k in {0,1} supported");
    if (n < k) throw std::invalid_argument("sphere_moment: n >= k required");
    SphereMoment mom{m, n, k, {Rational(0), 0}};
    if ((n - k) % 2 == 1) return mom;  // odd moment vanishes
    // n!/(n-k)! * 2 pi^{(m-1)/2} / 2^k * Gamma((n-k+1)/2) / Gamma((m+n+k)/2)
    PiRational v{Rational(factorial(n), factorial(n - k)) * Rational(2) / Rational(2).pow(k),
                 static_cast<int>(m) - 1};
    v *= gamma_exact(Rational(n - k + 1, 2));
    PiRational den = gamma_exact(Rational(m + n + k, 2));
    v.coeff /= den.coeff;
    v.sqrt_pi_pow -= den.sqrt_pi_pow;
    mom.value = v;
    return mom;
}

CliffordPolynomial planewave_reconstruct(const UnivariatePoly& A0, const UnivariatePoly& A1,
                                         unsigned m) {
    if (m < 2) throw std::invalid_argument("planewave_reconstruct: m >= 2 required");
    if (A0.dim() != m || A1.dim() != m)
        throw std::invalid_argument("planewave_reconstruct: dimension mismatch");
    PiRational gm = gamma_exact(Rational(m, 2));
    PiRational cm{gm.coeff / Rational(2), gm.sqrt_pi_pow - static_cast<int>(m)};

    CliffordPolynomial out(m);
    unsigned jmax = std::max(A0.degree(), A1.degree()) / 2 + 1;
    for (unsigned j = 0; j <= jmax; ++j) {
        UnivariatePoly d0 = A0.derivative(2 * j);
        if (!d0.is_zero()) {
            PiRational c = cm * sphere_moment(2 * j, 0, m).value;
            if (c.sqrt_pi_pow != 0)
                throw std::logic_error("planewave_reconstruct: pi exponent did not cancel");
            Rational scale = c.coeff / Rational(factorial(2 * j), BigInt(1));
            if (j % 2 == 1) scale = -scale;
            out += radius_sq_power(j, m) * scale * d0.to_polynomial();
        }
        UnivariatePoly d1 = A1.derivative(2 * j);
        if (!d1.is_zero()) {
            PiRational c = cm * sphere_moment(2 * j + 1, 1, m).value;
            if (c.sqrt_pi_pow != 0)
                throw std::logic_error("planewave_reconstruct: pi exponent did not cancel");
            Rational scale = c.coeff * Rational(m) / Rational(factorial(2 * j + 1), BigInt(1));
            if (j % 2 == 1) scale = -scale;
            CliffordPolynomial xu(m);
            for (unsigned i = 1; i <= m; ++i) {
                Monomial mono(m + 1, 0);
                mono[i] = 1;
                xu.add_term(mono, CliffordElement::generator(m, i));
            }
            out += radius_sq_power(j, m) * scale * xu * d1.to_polynomial();
        }
    }
    return out;
}

FloatMultivector FloatMultivector::from_exact(const CliffordElement& e) {
    FloatMultivector f(e.dim());
    for (const auto& [mask, c] : e.terms()) f.coeff[mask] = c.to_double();
    return f;
}

double FloatMultivector::max_abs_diff(const FloatMultivector& o) const {
    double d = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i)
        d = std::max(d, std::abs(coeff[i] - o.coeff[i]));
    return d;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Portable deterministic RNG: 53-bit uniforms + Box-Muller Gaussians from
/// raw splitmix64 streams; no library distributions involved.
struct Gaussian {
    std::uint64_t state;
    bool have_spare = false;
    double spare = 0;

    explicit Gaussian(std::uint64_t seed) : state(seed) {}

    double uniform() {
        return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    }
    double operator()() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double mag = std::sqrt(-2.0 * std::log(u1));
        spare = mag * std::sin(2.0 * M_PI * u2);
        have_spare = true;
        return mag * std::cos(2.0 * M_PI * u2);
    }
};

constexpr std::uint64_t kBlockSize = 1u << 13;

}  // namespace

McResult planewave_mc(const UnivariatePoly& A0, const UnivariatePoly& A1, unsigned m,
                      std::uint64_t samples, std::uint64_t seed, const std::vector<double>& point) {
    if (samples == 0) throw std::invalid_argument("planewave_mc: samples > 0 required");
    if (m < 2 || m > 7) throw std::invalid_argument("planewave_mc: m in {2..7} required");
    if (point.size() != m + 1) throw std::invalid_argument("planewave_mc: point must have m+1 entries");

    double x0 = point[0];
    std::vector<double> xu(point.begin() + 1, point.end());

    // Evaluate the x0-derivative stacks once.
    auto eval_derivs = [&](const UnivariatePoly& a) {
        std::vector<FloatMultivector> v;
        for (unsigned n = 0; n <= a.degree() + 1; n += 2) {
            UnivariatePoly d = a.derivative(n);
            FloatMultivector f(m);
            for (const auto& [kk, c] : d.coeffs())
                for (const auto& [mask, r] : c.terms())
                    f.coeff[mask] += r.to_double() * std::pow(x0, static_cast<double>(kk));
            v.push_back(std::move(f));
        }
        return v;
    };
    std::vector<FloatMultivector> v0 = eval_derivs(A0);
    std::vector<FloatMultivector> v1 = eval_derivs(A1);

    std::size_t nblades = std::size_t(1) << m;
    std::vector<double> sum(nblades, 0.0), sq(nblades, 0.0);
    std::vector<double> omega(m);

    std::uint64_t nblocks = (samples + kBlockSize - 1) / kBlockSize;
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        std::uint64_t st = seed;
        for (int i = 0; i < 3; ++i) splitmix64(st);
        Gaussian rng(st ^ (0x51eed5eedULL + b * 0x9e3779b97f4a7c15ULL));
        std::uint64_t lo = b * kBlockSize;
        std::uint64_t hi = std::min(samples, lo + kBlockSize);
        std::vector<double> bsum(nblades, 0.0), bsq(nblades, 0.0);
        std::vector<double> val(nblades);
        for (std::uint64_t s = lo; s < hi; ++s) {
            double norm = 0;
            do {
                norm = 0;
                for (unsigned i = 0; i < m; ++i) {
                    omega[i] = rng();
                    norm += omega[i] * omega[i];
                }
            } while (norm == 0.0);
            double inv = 1.0 / std::sqrt(norm);
            double t = 0;
            for (unsigned i = 0; i < m; ++i) {
                omega[i] *= inv;
                t += omega[i] * xu[i];
            }
            std::fill(val.begin(), val.end(), 0.0);
            // cosh branch: sum_j (-1)^j t^{2j} A0^{(2j)} / (2j)!
            double tp = 1.0, fact = 1.0;
            for (std::size_t j = 0; j < v0.size(); ++j) {
                double c = (j % 2 ? -tp : tp) / fact;
                for (std::size_t i = 0; i < nblades; ++i) val[i] += c * v0[j].coeff[i];
                tp *= t * t;
                fact *= (2.0 * j + 1) * (2.0 * j + 2);
            }
            // sinh branch: m sum_j (-1)^j t^{2j+1} w A1^{(2j)} / (2j+1)!
            tp = t;
            fact = 1.0;
            for (std::size_t j = 0; j < v1.size(); ++j) {
                double c = static_cast<double>(m) * (j % 2 ? -tp : tp) / fact;
                for (unsigned i = 0; i < m; ++i) {
                    double ci = c * omega[i];
                    if (ci == 0.0) continue;
                    const FloatMultivector& f = v1[j];
                    BladeMask ei = 1u << i;
                    for (BladeMask mask = 0; mask < nblades; ++mask) {
                        double x = f.coeff[mask];
                        if (x == 0.0) continue;
                        int sign = blade_product_sign(ei, mask);
                        val[ei ^ mask] += sign * ci * x;
                    }
                }
                tp *= t * t;
                fact *= (2.0 * j + 2) * (2.0 * j + 3);
            }
            for (std::size_t i = 0; i < nblades; ++i) {
                bsum[i] += val[i];
                bsq[i] += val[i] * val[i];
            }
        }
        for (std::size_t i = 0; i < nblades; ++i) {
            sum[i] += bsum[i];
            sq[i] += bsq[i];
        }
    }

    McResult res(m);
    double n = static_cast<double>(samples);
    for (std::size_t i = 0; i < nblades; ++i) {
        double mean = sum[i] / n;
        res.estimate.coeff[i] = mean;
        if (samples > 1) {
            double var = std::max(0.0, (sq[i] - n * mean * mean) / (n - 1));
            res.stderr_.coeff[i] = std::sqrt(var / n);
        }
    }
    res.samples = samples;
    return res;
}

}  // namespace ckx

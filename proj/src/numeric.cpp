#include "ckx/numeric.hpp"

#include <cmath>

namespace ckx {

namespace {

double gamma_half(unsigned twice) {  // Gamma(twice/2) for twice >= 1
    return gamma_exact(Rational(twice, 2)).to_double();
}

}  // namespace

double bessel_tilde(unsigned nu_twice, double rho, unsigned terms) {
    if (terms < 1) throw std::invalid_argument("bessel_tilde: terms >= 1 required");
    double nu = nu_twice / 2.0;
    double sum = 0.0;
    double rho2 = rho * rho;
    double power = 1.0;  // rho^{2j}
    for (unsigned j = 0; j < terms; ++j) {
        double denom = std::pow(2.0, 2.0 * j + nu) * std::tgamma(j + 1.0) *
                       gamma_half(nu_twice + 2 * j + 2);
        sum += (j % 2 ? -power : power) / denom;
        power *= rho2;
    }
    return sum;
}

double hermite(unsigned n, double x0) {
    double sum = 0.0;
    double nfact = std::tgamma(n + 1.0);
    for (unsigned i = 0; 2 * i <= n; ++i) {
        double term = std::pow(x0, static_cast<double>(n - 2 * i)) /
                      (std::tgamma(i + 1.0) * std::pow(2.0, static_cast<double>(i)) *
                       std::tgamma(n - 2 * i + 1.0));
        sum += (i % 2 ? -term : term);
    }
    return nfact * sum;
}

double hermite_recurrence(unsigned n, double x0) {
    double prev = 1.0;  // H_0
    if (n == 0) return prev;
    double cur = x0;    // H_1
    for (unsigned i = 1; i < n; ++i) {
        double next = x0 * cur - static_cast<double>(i) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double riesz_eval(unsigned m, const std::vector<double>& point) {
    if (point.size() != m + 1) throw std::invalid_argument("riesz_eval: point must have m+1 entries");
    double norm_sq = (1.0 - point[0]) * (1.0 - point[0]);
    for (unsigned i = 1; i <= m; ++i) norm_sq += point[i] * point[i];
    if (norm_sq == 0.0) throw std::invalid_argument("riesz_eval: pole at x = 1");
    return std::pow(norm_sq, -0.5 * static_cast<double>(m - 1));
}

namespace {

/// Degree-2N Taylor truncations of the entire initial data, exact.
UnivariatePoly exp_trunc(unsigned m, unsigned N) {
    UnivariatePoly p(m);
    for (unsigned k = 0; k <= 2 * N; ++k) p.add_term(k, Rational(BigInt(1), factorial(k)));
    return p;
}

UnivariatePoly gauss_trunc(unsigned m, unsigned N) {  // e^{-x0^2}
    UnivariatePoly p(m);
    for (unsigned j = 0; 2 * j <= 2 * N; ++j) {
        Rational c(BigInt(1), factorial(j));
        p.add_term(2 * j, j % 2 ? -c : c);
    }
    return p;
}

std::pair<UnivariatePoly, UnivariatePoly> example_data(NumericExample which, unsigned m,
                                                       unsigned N) {
    switch (which) {
        case NumericExample::ex31:
            return {exp_trunc(m, N), exp_trunc(m, N)};
        case NumericExample::ex32:
            return {exp_trunc(m, N), gauss_trunc(m, N).derivative()};
        case NumericExample::ex33:
            return {gauss_trunc(m, N), exp_trunc(m, N)};
    }
    throw std::logic_error("example_data: unreachable");
}

double eval_univariate(const UnivariatePoly& p, double x0) {
    double v = 0.0;
    for (const auto& [k, c] : p.coeffs())
        v += c.scalar_part().to_double() * std::pow(x0, static_cast<double>(k));
    return v;
}

double hermite_read(unsigned n, double x0, HermiteReading reading) {
    if (reading == HermiteReading::probabilists) return hermite_recurrence(n, x0);
    return std::pow(2.0, n / 2.0) * hermite_recurrence(n, x0 * std::sqrt(2.0));
}

double gauss_read(double x0, HermiteReading reading) {
    return reading == HermiteReading::probabilists ? std::exp(-x0 * x0 / 2.0)
                                                   : std::exp(-x0 * x0);
}

}  // namespace

FloatMultivector example_series_value(NumericExample which, unsigned m,
                                      const std::vector<double>& point, unsigned N) {
    if (point.size() != m + 1)
        throw std::invalid_argument("example_series_value: point must have m+1 entries");
    auto [a0, a1] = example_data(which, m, N);
    double x0 = point[0];
    double r2 = 0.0;
    for (unsigned i = 1; i <= m; ++i) r2 += point[i] * point[i];

    CkCoefficients ck = CkCoefficients::make(m, N + 2);
    double scalar = 0.0, vec = 0.0;
    double r2j = 1.0;
    for (unsigned j = 0; j <= N; ++j) {
        double sign = (j % 2 ? -1.0 : 1.0);
        UnivariatePoly d0 = a0.derivative(2 * j);
        if (!d0.is_zero()) scalar += sign * r2j * ck.even[j].to_double() * eval_univariate(d0, x0);
        UnivariatePoly d1 = a1.derivative(2 * j);
        if (!d1.is_zero()) vec += sign * r2j * ck.odd[j].to_double() * eval_univariate(d1, x0);
        r2j *= r2;
    }
    FloatMultivector out(m);
    out.coeff[0] = scalar;
    for (unsigned i = 1; i <= m; ++i) out.coeff[1u << (i - 1)] = vec * point[i];
    return out;
}

FloatMultivector example_closed_form(NumericExample which, unsigned m,
                                     const std::vector<double>& point, unsigned N,
                                     HermiteReading reading) {
    if (point.size() != m + 1)
        throw std::invalid_argument("example_closed_form: point must have m+1 entries");
    double x0 = point[0];
    double r2 = 0.0;
    for (unsigned i = 1; i <= m; ++i) r2 += point[i] * point[i];
    double r = std::sqrt(r2);

    double gm = gamma_half(m);                       // Gamma(m/2)
    double lead = gm * std::pow(2.0, m / 2.0 - 1.0); // Gamma(m/2) 2^{m/2-1}
    double scalar = 0.0, vec = 0.0;

    // Hermite series coefficients share Gamma(m/2 + l (+1)) denominators.
    auto hermite_series = [&](bool odd_indices) {
        double sum = 0.0;
        double r2l = 1.0;
        for (unsigned l = 0; l < N; ++l) {
            unsigned n = odd_indices ? 2 * l + 1 : 2 * l;
            unsigned gamma_arg_twice = odd_indices ? m + 2 * l + 2 : m + 2 * l;
            double denom = gamma_half(gamma_arg_twice) *
                           std::pow(2.0, odd_indices ? 2.0 * l + 1 : 2.0 * l) *
                           std::tgamma(l + 1.0);
            double term = r2l * hermite_read(n, x0, reading) / denom;
            sum += (l % 2 ? -term : term);
            r2l *= r2;
        }
        return sum;
    };

    switch (which) {
        case NumericExample::ex31:
            scalar = lead * bessel_tilde(m - 2, r, N) * std::exp(x0);
            vec = lead * m * bessel_tilde(m, r, N) * std::exp(x0);
            break;
        case NumericExample::ex32:
            scalar = lead * bessel_tilde(m - 2, r, N) * std::exp(x0);
            vec = -gm * m * hermite_series(true) * gauss_read(x0, reading);
            break;
        case NumericExample::ex33:
            scalar = gm * hermite_series(false) * gauss_read(x0, reading);
            vec = lead * m * bessel_tilde(m, r, N) * std::exp(x0);
            break;
    }

    FloatMultivector out(m);
    out.coeff[0] = scalar;
    for (unsigned i = 1; i <= m; ++i) out.coeff[1u << (i - 1)] = vec * point[i];
    return out;
}

double example_residual(NumericExample which, unsigned m, const std::vector<double>& point,
                        unsigned N, HermiteReading reading) {
    if (N < 5) throw std::invalid_argument("example_residual: N >= 5 required");
    FloatMultivector closed = example_closed_form(which, m, point, N, reading);
    FloatMultivector series = example_series_value(which, m, point, N);
    return closed.max_abs_diff(series);
}

}  // namespace ckx

#pragma once

#include "ckx/planewave.hpp"

namespace ckx {

/// Normalized Bessel partial sum: J~_nu(rho) = rho^{-nu} J_nu(rho)
///   = sum_{j<terms} (-1)^j rho^{2j} / (2^{2j+nu} j! Gamma(nu+j+1)).
/// Alternating for rho in the test range, so the truncation error is
/// bounded by the first omitted term. nu = nu_twice/2.
double bessel_tilde(unsigned nu_twice, double rho, unsigned terms);

/// Hermite polynomial by the explicit sum
///   H_n(x) = n! sum_i (-1)^i x^{n-2i} / (i! 2^i (n-2i)!)
/// (probabilists' normalization: H_1 = x, H_2 = x^2 - 1).
double hermite(unsigned n, double x0);

/// Same polynomial through the three-term recurrence
/// H_{n+1} = x H_n - n H_{n-1}; the independent oracle, also used
/// internally where n gets large.
double hermite_recurrence(unsigned n, double x0);

/// Riesz potential |1 - x|^{-(m-1)} at a float paravector (x0, x1..xm).
double riesz_eval(unsigned m, const std::vector<double>& point);

enum class NumericExample { ex31, ex32, ex33 };

/// Which normalization the Gaussian examples' Hermite series uses in the
/// closed form: probabilists' H_n (H_1 = x) paired with exp(-x0^2/2), or
/// physicists' H_n (= 2^{n/2} H_n(sqrt(2) x0) in the probabilists'
/// convention) paired with exp(-x0^2). Only the physicists' pairing is
/// derivative-consistent with Gaussian initial data.
enum class HermiteReading { probabilists, physicists };

/// Closed form minus the truncated HGCK series (initial data Taylor-cut at
/// degree 2N), max blade-wise absolute difference at `point`.
double example_residual(NumericExample which, unsigned m, const std::vector<double>& point,
                        unsigned N, HermiteReading reading = HermiteReading::physicists);

/// Closed form of an example at a point (exposed for the CLI).
FloatMultivector example_closed_form(NumericExample which, unsigned m,
                                     const std::vector<double>& point, unsigned N,
                                     HermiteReading reading);

/// Truncated-data HGCK value of an example at a point.
FloatMultivector example_series_value(NumericExample which, unsigned m,
                                      const std::vector<double>& point, unsigned N);

}  // namespace ckx

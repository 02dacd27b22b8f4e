#pragma once

#include <cmath>

#include "vind/errors.hpp"

namespace vind {

namespace detail {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
// Relative accuracy ~1e-15 over the positive axis.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline double lgamma_lanczos(double x) {
  // Accurate for x >= 1; callers shift smaller arguments up.
  double acc = kLanczos[0];
  for (int i = 1; i < 15; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x - 0.5 + kLanczosG;
  constexpr double kHalfLogTwoPi = 0.91893853320467274178;
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

// log Gamma(x) for x > 0.
inline double lgamma(double x) {
  if (!(x > 0.0)) throw DomainError("lgamma: x must be > 0");
  if (x >= 1.0) return detail::lgamma_lanczos(x);
  // lgamma(x) = lgamma(x+1) - log(x); no cancellation for x < 1.
  return detail::lgamma_lanczos(x + 1.0) - std::log(x);
}

// psi(x) = d/dx log Gamma(x), x > 0. Recurrence up to x >= 10, then the
// Bernoulli asymptotic series through x^-12.
inline double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: x must be > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv;
  series -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
  return acc + series;
}

// psi'(x), x > 0. Same recurrence/asymptotic scheme as digamma.
inline double trigamma(double x) {
  if (!(x > 0.0)) throw DomainError("trigamma: x must be > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = inv * (1.0 + 0.5 * inv);
  series += inv * inv2 * (1.0 / 6.0 - inv2 * (1.0 / 30.0 - inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0 - inv2 * (5.0 / 66.0)))));
  return acc + series;
}

// log of the multivariate gamma function Gamma_p(a), a > (p-1)/2.
inline double mvlgamma(double a, int p) {
  if (p < 1) throw DomainError("mvlgamma: p must be >= 1");
  if (!(a > 0.5 * (p - 1))) throw DomainError("mvlgamma: need a > (p-1)/2");
  constexpr double kLogPi = 1.1447298858494001741;
  double acc = 0.25 * p * (p - 1) * kLogPi;
  for (int j = 1; j <= p; ++j) acc += lgamma(a + 0.5 * (1 - j));
  return acc;
}

// Derivative of mvlgamma in a.
inline double mvdigamma(double a, int p) {
  if (p < 1) throw DomainError("mvdigamma: p must be >= 1");
  if (!(a > 0.5 * (p - 1))) throw DomainError("mvdigamma: need a > (p-1)/2");
  double acc = 0.0;
  for (int j = 1; j <= p; ++j) acc += digamma(a + 0.5 * (1 - j));
  return acc;
}

}  // namespace vind

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "vind/linalg.hpp"
#include "vind/random.hpp"
#include "vind/special_functions.hpp"

namespace vind {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kLogTwoPi = 1.8378770664093454836;

namespace detail {

// Marsaglia-Tsang squeeze for shape >= 1, unit rate.
inline double gamma_unit_rate_ge1(RandomStream& rs, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = rs.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rs.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline double gamma_unit_rate(RandomStream& rs, double shape) {
  if (shape >= 1.0) return gamma_unit_rate_ge1(rs, shape);
  // Shape boost: Gamma(a) = Gamma(a+1) * U^{1/a}. Exact, and unlike
  // rejection samplers it stays usable down to a ~ 1e-3 (tiny draws
  // underflow to 0, which is the closest double to the true value).
  const double g = gamma_unit_rate_ge1(rs, shape + 1.0);
  const double u = rs.uniform();
  return g * std::exp(std::log(u) / shape);
}

inline long long poisson_knuth(RandomStream& rs, double rate) {
  const double limit = std::exp(-rate);
  long long k = 0;
  double prod = 1.0;
  do {
    ++k;
    prod *= rs.uniform();
  } while (prod > limit);
  return k - 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

inline double sample_gamma(RandomStream& rs, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) throw DomainError("sample_gamma: shape and rate must be > 0");
  return detail::gamma_unit_rate(rs, shape) / rate;
}

inline double sample_chi_square(RandomStream& rs, double df) {
  if (!(df > 0.0)) throw DomainError("sample_chi_square: df must be > 0");
  return sample_gamma(rs, 0.5 * df, 0.5);
}

inline Vector sample_std_normal_vec(RandomStream& rs, int p) {
  if (p < 1) throw DomainError("sample_std_normal_vec: p must be >= 1");
  Vector z(p);
  for (int i = 0; i < p; ++i) z[i] = rs.normal();
  return z;
}

// W(df, I_p) via the Bartlett construction; requires df > p - 1.
inline Matrix sample_wishart_identity(RandomStream& rs, double df, int p) {
  if (p < 1) throw DomainError("sample_wishart_identity: p must be >= 1");
  if (!(df > p - 1)) throw DomainError("sample_wishart_identity: need df > p - 1");
  Matrix a = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    a(i, i) = std::sqrt(sample_chi_square(rs, df - i));
    for (int j = 0; j < i; ++j) a(i, j) = rs.normal();
  }
  return a * a.transpose();
}

inline long long sample_poisson(RandomStream& rs, double rate) {
  if (!(rate > 0.0)) throw DomainError("sample_poisson: rate must be > 0");
  long long total = 0;
  // Poisson additivity keeps the Knuth product away from exp underflow.
  while (rate > 30.0) {
    total += detail::poisson_knuth(rs, 30.0);
    rate -= 30.0;
  }
  return total + detail::poisson_knuth(rs, rate);
}

// Poisson(rate) conditioned on being >= 1.
inline long long sample_poisson_positive(RandomStream& rs, double rate) {
  if (!(rate > 0.0)) throw DomainError("sample_poisson_positive: rate must be > 0");
  if (rate >= 0.1) {
    for (;;) {
      const long long k = sample_poisson(rs, rate);
      if (k > 0) return k;
    }
  }
  // Tiny rates: invert the conditional pmf directly instead of rejecting
  // ~1/rate times.
  const double u = rs.uniform();
  double pk = rate * std::exp(-rate) / (-std::expm1(-rate));
  double cum = pk;
  long long k = 1;
  while (u > cum && k < 1100) {
    ++k;
    pk *= rate / static_cast<double>(k);
    cum += pk;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Log-densities (normalizing constants included; out-of-support points give
// -inf, invalid parameters or non-finite inputs throw)
// ---------------------------------------------------------------------------

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite input");
}

inline double log_pdf_gamma(double theta, double shape, double rate) {
  require_finite(theta, "log_pdf_gamma");
  if (!(shape > 0.0) || !(rate > 0.0)) throw DomainError("log_pdf_gamma: shape and rate must be > 0");
  if (theta <= 0.0) return kNegInf;
  return shape * std::log(rate) - lgamma(shape) + (shape - 1.0) * std::log(theta) - rate * theta;
}

inline double log_pdf_beta(double theta, double a, double b) {
  require_finite(theta, "log_pdf_beta");
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_pdf_beta: a and b must be > 0");
  if (theta <= 0.0 || theta >= 1.0) return kNegInf;
  return lgamma(a + b) - lgamma(a) - lgamma(b) + (a - 1.0) * std::log(theta) + (b - 1.0) * std::log1p(-theta);
}

inline double log_pdf_dirichlet(const Vector& theta, const Vector& alpha) {
  if (theta.size() != alpha.size() || theta.size() < 2) throw DomainError("log_pdf_dirichlet: dimension mismatch");
  double asum = 0.0;
  for (int i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > 0.0)) throw DomainError("log_pdf_dirichlet: alpha must be positive");
    asum += alpha[i];
  }
  double tsum = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    require_finite(theta[i], "log_pdf_dirichlet");
    if (theta[i] <= 0.0) return kNegInf;
    tsum += theta[i];
  }
  if (std::abs(tsum - 1.0) > 1e-9) return kNegInf;
  double acc = lgamma(asum);
  for (int i = 0; i < alpha.size(); ++i) acc += (alpha[i] - 1.0) * std::log(theta[i]) - lgamma(alpha[i]);
  return acc;
}

inline double log_pdf_normal_diag(const Vector& theta, const Vector& mu, const Vector& s) {
  if (theta.size() != mu.size() || theta.size() != s.size()) throw DomainError("log_pdf_normal_diag: dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    require_finite(theta[i], "log_pdf_normal_diag");
    if (!(s[i] > 0.0)) throw DomainError("log_pdf_normal_diag: scale must be > 0");
    const double z = (theta[i] - mu[i]) / s[i];
    acc += -std::log(s[i]) - 0.5 * kLogTwoPi - 0.5 * z * z;
  }
  return acc;
}

// W(S; df, V), density |S|^{(df-p-1)/2} exp(-tr(V^{-1}S)/2) / normalizer.
inline double log_pdf_wishart(const Matrix& S, double df, const Matrix& V) {
  const int p = static_cast<int>(V.rows());
  if (S.rows() != p || S.cols() != p || V.cols() != p) throw DomainError("log_pdf_wishart: dimension mismatch");
  if (!(df > p - 1)) throw DomainError("log_pdf_wishart: need df > p - 1");
  if (!S.allFinite()) throw DomainError("log_pdf_wishart: non-finite input");
  Eigen::LLT<Matrix> llt_v(V);
  if (llt_v.info() != Eigen::Success) throw DomainError("log_pdf_wishart: V not positive definite");
  Eigen::LLT<Matrix> llt_s(S);
  if (llt_s.info() != Eigen::Success) return kNegInf;  // outside the PD cone
  const double log_det_s = 2.0 * llt_s.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double log_det_v = 2.0 * llt_v.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double trace_term = llt_v.solve(S).trace();
  return 0.5 * (df - p - 1) * log_det_s - 0.5 * trace_term - 0.5 * df * p * std::numbers::ln2 - 0.5 * df * log_det_v - mvlgamma(0.5 * df, p);
}

// Multivariate Student with center mu, symmetric PD scale S (Sigma = S^2)
// and df degrees of freedom:
//   q(theta) ∝ [1 + (theta-mu)^T S^{-2} (theta-mu) / df]^{-(df+p)/2}.
inline double log_pdf_student_mv(const Vector& theta, double df, const Vector& mu, const Matrix& S) {
  const int p = static_cast<int>(mu.size());
  if (theta.size() != p || S.rows() != p || S.cols() != p) throw DomainError("log_pdf_student_mv: dimension mismatch");
  if (!(df > 0.0)) throw DomainError("log_pdf_student_mv: df must be > 0");
  if (!theta.allFinite()) throw DomainError("log_pdf_student_mv: non-finite input");
  Eigen::LLT<Matrix> llt(S);
  if (llt.info() != Eigen::Success) throw DomainError("log_pdf_student_mv: S not positive definite");
  const double log_det_s = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  // S symmetric: (theta-mu)^T S^{-2} (theta-mu) = |S^{-1}(theta-mu)|^2.
  const double m = llt.solve(theta - mu).squaredNorm();
  return lgamma(0.5 * (df + p)) - lgamma(0.5 * df) - 0.5 * p * std::log(df * std::numbers::pi) - log_det_s - 0.5 * (df + p) * std::log1p(m / df);
}

inline double log_pmf_poisson(long long k, double rate) {
  if (!(rate > 0.0)) throw DomainError("log_pmf_poisson: rate must be > 0");
  if (k < 0) return kNegInf;
  return static_cast<double>(k) * std::log(rate) - rate - lgamma(static_cast<double>(k) + 1.0);
}

}  // namespace vind

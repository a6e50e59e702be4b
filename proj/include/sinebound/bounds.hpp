#pragma once

// Left-hand products and right-hand bounds for the weighted sine-product
// inequalities, all carried in log space as (sigma, lambda, log_value)
// triples. Every right-hand side has the canonical shape
// sin(pi*sigma/lambda)^lambda; the sigma/lambda polynomials per bound form
// live in detail::sigma_lam and are shared by every consumer.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sinebound/specfun.hpp"

namespace sinebound {

/// Angles a_i in (0,1) with positive weights w_i = 1/p_i. The Gamma-side
/// operations additionally require every w_i < 1 (the hypothesis p_i > 1).
struct WeightedAngles {
  std::vector<double> a;
  std::vector<double> w;

  WeightedAngles(std::vector<double> angles, std::vector<double> weights)
      : a(std::move(angles)), w(std::move(weights)) {
    if (a.empty() || a.size() != w.size())
      throw std::invalid_argument(
          "WeightedAngles: need equally many angles and weights (>= 1)");
    for (double v : a)
      if (!(v > 0.0 && v < 1.0))
        detail::domain_fail("WeightedAngles", "angle must lie in (0,1)", v);
    for (double v : w)
      if (!(v > 0.0) || !std::isfinite(v))
        detail::domain_fail("WeightedAngles", "weight must be positive", v);
  }

  std::size_t size() const { return a.size(); }

  /// Total weight, the 1/p of the main corollary.
  double lam() const {
    double s = 0.0;
    for (double v : w) s += v;
    return s;
  }

  bool all_weights_below_one() const {
    for (double v : w)
      if (!(v < 1.0)) return false;
    return true;
  }
};

/// The lambda_1..lambda_n parameter vector, every entry in (0,1).
struct ParamVector {
  std::vector<double> lam;

  explicit ParamVector(std::vector<double> values) : lam(std::move(values)) {
    if (lam.empty())
      throw std::invalid_argument("ParamVector: needs at least one parameter");
    for (double v : lam)
      if (!(v > 0.0 && v < 1.0))
        detail::domain_fail("ParamVector", "parameter must lie in (0,1)", v);
  }

  std::size_t size() const { return lam.size(); }
  double operator[](std::size_t i) const { return lam[i]; }

  /// Total weight of the cyclic-family bounds: sum of all entries.
  double sum() const {
    double s = 0.0;
    for (double v : lam) s += v;
    return s;
  }

  /// Total weight of the paired family: sum over pairs of (1-l_even)+l_odd.
  double paired_total() const {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < lam.size(); i += 2)
      s += (1.0 - lam[i + 1]) + lam[i];
    return s;
  }
};

/// A bound value sin(pi*sigma/lam)^lam carried in log space.
struct SineBound {
  double sigma;
  double lam;
  double arg;        // sigma / lam, always in (0,1)
  double log_value;  // lam * log sin(pi*arg), always <= 0
  double value;      // exp(log_value)
};

/// A left-hand product value, carried as its logarithm (<= 0 by construction
/// since every factor is a sine power with positive weight).
struct LogValue {
  double log_value;
  double value() const { return std::exp(log_value); }
};

inline SineBound make_sine_bound(double sigma, double lam) {
  double arg = sigma / lam;
  if (!(arg > 0.0 && arg < 1.0))
    throw std::logic_error(
        "sine bound argument fraction " + std::to_string(arg) +
        " escaped (0,1); sigma=" + std::to_string(sigma) +
        " lam=" + std::to_string(lam));
  double lv = lam * log_sin_pi(arg);
  return {sigma, lam, arg, lv, std::exp(lv)};
}

// ---------------------------------------------------------------------------
// General weighted form
// ---------------------------------------------------------------------------

/// log of prod_i sin^{w_i}(pi a_i).
inline LogValue lhs_general(const WeightedAngles& wa) {
  double s = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    s += wa.w[i] * log_sin_pi(wa.a[i]);
  return {s};
}

/// The single-sine upper bound with sigma = sum w_i a_i, lambda = sum w_i.
inline SineBound rhs_general(const WeightedAngles& wa) {
  double sigma = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i) sigma += wa.w[i] * wa.a[i];
  return make_sine_bound(sigma, wa.lam());
}

/// Both sides, in log space, of the Gamma log-convexity inequality
/// ln Gamma(sum (p/p_i) a_i) <= sum (p/p_i) ln Gamma(a_i). Requires every
/// p_i > 1, i.e. every weight below 1.
inline std::pair<double, double> gamma_lemma_sides(const WeightedAngles& wa) {
  if (!wa.all_weights_below_one())
    throw std::domain_error(
        "gamma_lemma_sides: every weight must be below 1 (p_i > 1)");
  double lam = wa.lam();
  double sigma = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i) sigma += wa.w[i] * wa.a[i];
  double left = log_gamma(sigma / lam);
  double right = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    right += (wa.w[i] / lam) * log_gamma(wa.a[i]);
  return {left, right};
}

/// Both sides, in log space, of the two-sided Gamma inequality obtained by
/// multiplying the lemma applied to (a_i) and to (1-a_i).
inline std::pair<double, double> gamma_theorem_sides(const WeightedAngles& wa) {
  if (!wa.all_weights_below_one())
    throw std::domain_error(
        "gamma_theorem_sides: every weight must be below 1 (p_i > 1)");
  double lam = wa.lam();
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    s1 += wa.w[i] * wa.a[i];
    s2 += wa.w[i] * (1.0 - wa.a[i]);
  }
  double left = log_gamma(s1 / lam) + log_gamma(s2 / lam);
  double right = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    right += (wa.w[i] / lam) * (log_gamma(wa.a[i]) + log_gamma(1.0 - wa.a[i]));
  return {left, right};
}

// ---------------------------------------------------------------------------
// Named bound forms
// ---------------------------------------------------------------------------

enum class BoundForm {
  CorMain,  // rhs_general on a WeightedAngles
  P2n,      // paired family, sigma = sum of odd-position entries
  Q2n,      // paired family, sigma = 2 sum l_odd (1 - l_even)
  Sn,       // cyclic family, sigma = sum l_{i+1}(1-l_i) + l_1 l_n
  Tn,       // cyclic family, sigma = sum l_{i+1} l_i + l_1 l_n
  C37a,     // cyclic family with doubled last entry, S-shaped sigma
  C37b,     // cyclic family with doubled last entry, T-shaped sigma
  A2,       // two angles: sigma = y, lam = 1-x+y
  B2,       // two angles: sigma = 2y(1-x), lam = 1-x+y
  S3,       // three angles: sigma = y(1-x)+z(1-y)+xz
  T3,       // three angles: sigma = xy+yz+xz
  S_yx,     // S3 with y=x: sigma = x(1-x)+z, lam = 2x+z
  T_yx,     // T3 with y=x: sigma = x(x+2z)
  S_zy,     // S3 with z=y: sigma = y(2-y), lam = x+2y
  T_zy,     // T3 with z=y: sigma = y(2x+y)
  S_zx,     // S3 with z=x: sigma = x(1+x)+y(1-2x), lam = 2x+y
  T_zx,     // T3 with z=x: sigma = x(x+2y)
  KFam_A,   // k-family constant branch sin^{k+1}(pi/(k+1))
  KFam_B,   // k-family moving branch sin^{k+1}(2 pi k y/(k+1))
  Diag,     // one angle: sin(2 pi x (1-x))
  OneD_a,   // curve sin(2 pi x (1-x))
  OneD_b,   // curve sin(pi (1+x)/3)
  OneD_c,   // curve sin(pi (1+2x)/3)
};

inline std::string_view to_string(BoundForm f) {
  switch (f) {
    case BoundForm::CorMain: return "CorMain";
    case BoundForm::P2n: return "P2n";
    case BoundForm::Q2n: return "Q2n";
    case BoundForm::Sn: return "Sn";
    case BoundForm::Tn: return "Tn";
    case BoundForm::C37a: return "C37a";
    case BoundForm::C37b: return "C37b";
    case BoundForm::A2: return "A2";
    case BoundForm::B2: return "B2";
    case BoundForm::S3: return "S3";
    case BoundForm::T3: return "T3";
    case BoundForm::S_yx: return "S_yx";
    case BoundForm::T_yx: return "T_yx";
    case BoundForm::S_zy: return "S_zy";
    case BoundForm::T_zy: return "T_zy";
    case BoundForm::S_zx: return "S_zx";
    case BoundForm::T_zx: return "T_zx";
    case BoundForm::KFam_A: return "KFam_A";
    case BoundForm::KFam_B: return "KFam_B";
    case BoundForm::Diag: return "Diag";
    case BoundForm::OneD_a: return "OneD_a";
    case BoundForm::OneD_b: return "OneD_b";
    case BoundForm::OneD_c: return "OneD_c";
  }
  return "?";
}

namespace detail {

[[noreturn]] inline void arity_fail(BoundForm f, std::size_t n,
                                    const char* need) {
  throw std::invalid_argument(std::string(to_string(f)) + ": needs " + need +
                              ", got " + std::to_string(n) + " parameters");
}

/// (sigma, lambda) of a parameter-vector bound form, allocation free.
/// Entries are assumed to lie in (0,1); arity is checked here.
inline std::pair<double, double> sigma_lam(BoundForm form, const double* p,
                                           std::size_t n) {
  switch (form) {
    case BoundForm::P2n: {
      if (n < 2 || n % 2 != 0) arity_fail(form, n, "an even count >= 2");
      double sigma = 0.0, lam = 0.0;
      for (std::size_t i = 0; i < n; i += 2) {
        sigma += p[i];
        lam += (1.0 - p[i + 1]) + p[i];
      }
      return {sigma, lam};
    }
    case BoundForm::Q2n: {
      if (n < 2 || n % 2 != 0) arity_fail(form, n, "an even count >= 2");
      double sigma = 0.0, lam = 0.0;
      for (std::size_t i = 0; i < n; i += 2) {
        sigma += 2.0 * p[i] * (1.0 - p[i + 1]);
        lam += (1.0 - p[i + 1]) + p[i];
      }
      return {sigma, lam};
    }
    case BoundForm::Sn:
    case BoundForm::C37a: {
      // C37a is Sn written for (l_1,...,l_n,l_n).
      std::size_t m = (form == BoundForm::C37a) ? n + 1 : n;
      if (n < 2) arity_fail(form, n, "a count >= 2");
      auto at = [&](std::size_t i) { return p[i < n ? i : n - 1]; };
      double sigma = 0.0, lam = 0.0;
      for (std::size_t i = 0; i + 1 < m; ++i)
        sigma += at(i + 1) * (1.0 - at(i));
      sigma += at(0) * at(m - 1);
      for (std::size_t i = 0; i < m; ++i) lam += at(i);
      return {sigma, lam};
    }
    case BoundForm::Tn:
    case BoundForm::C37b: {
      std::size_t m = (form == BoundForm::C37b) ? n + 1 : n;
      if (n < 2) arity_fail(form, n, "a count >= 2");
      auto at = [&](std::size_t i) { return p[i < n ? i : n - 1]; };
      double sigma = 0.0, lam = 0.0;
      for (std::size_t i = 0; i + 1 < m; ++i) sigma += at(i + 1) * at(i);
      sigma += at(0) * at(m - 1);
      for (std::size_t i = 0; i < m; ++i) lam += at(i);
      return {sigma, lam};
    }
    case BoundForm::A2: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      return {p[1], (1.0 - p[0]) + p[1]};
    }
    case BoundForm::B2: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      return {2.0 * p[1] * (1.0 - p[0]), (1.0 - p[0]) + p[1]};
    }
    case BoundForm::S3: {
      if (n != 3) arity_fail(form, n, "3 parameters");
      double x = p[0], y = p[1], z = p[2];
      return {y * (1.0 - x) + z * (1.0 - y) + x * z, x + y + z};
    }
    case BoundForm::T3: {
      if (n != 3) arity_fail(form, n, "3 parameters");
      double x = p[0], y = p[1], z = p[2];
      return {x * y + y * z + x * z, x + y + z};
    }
    case BoundForm::S_yx: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      double x = p[0], z = p[1];
      return {x * (1.0 - x) + z, 2.0 * x + z};
    }
    case BoundForm::T_yx: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      double x = p[0], z = p[1];
      return {x * (x + 2.0 * z), 2.0 * x + z};
    }
    case BoundForm::S_zy: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      double x = p[0], y = p[1];
      return {y * (2.0 - y), x + 2.0 * y};
    }
    case BoundForm::T_zy: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      double x = p[0], y = p[1];
      return {y * (2.0 * x + y), x + 2.0 * y};
    }
    case BoundForm::S_zx: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      double x = p[0], y = p[1];
      return {x * (1.0 + x) + y * (1.0 - 2.0 * x), 2.0 * x + y};
    }
    case BoundForm::T_zx: {
      if (n != 2) arity_fail(form, n, "2 parameters");
      double x = p[0], y = p[1];
      return {x * (x + 2.0 * y), 2.0 * x + y};
    }
    case BoundForm::Diag:
    case BoundForm::OneD_a: {
      if (n != 1) arity_fail(form, n, "1 parameter");
      return {2.0 * p[0] * (1.0 - p[0]), 1.0};
    }
    case BoundForm::OneD_b: {
      if (n != 1) arity_fail(form, n, "1 parameter");
      return {(1.0 + p[0]) / 3.0, 1.0};
    }
    case BoundForm::OneD_c: {
      if (n != 1) arity_fail(form, n, "1 parameter");
      return {(1.0 + 2.0 * p[0]) / 3.0, 1.0};
    }
    case BoundForm::CorMain:
      throw std::invalid_argument(
          "CorMain takes weighted angles; use rhs_general");
    case BoundForm::KFam_A:
    case BoundForm::KFam_B:
      throw std::invalid_argument(std::string(to_string(form)) +
                                  " takes (k, y) parameters");
  }
  throw std::logic_error("sigma_lam: unhandled form");
}

/// Log value of a parameter-vector bound form, allocation free.
inline double bound_log(BoundForm f, const double* p, std::size_t n) {
  auto [sigma, lam] = sigma_lam(f, p, n);
  double arg = sigma / lam;
  if (!(arg > 0.0 && arg < 1.0))
    throw std::logic_error("bound argument fraction escaped (0,1)");
  return lam * log_sin_pi(arg);
}

}  // namespace detail

/// Evaluate a parameter-vector bound form.
inline SineBound eval_bound(BoundForm form, const ParamVector& p) {
  auto [sigma, lam] = detail::sigma_lam(form, p.lam.data(), p.size());
  return make_sine_bound(sigma, lam);
}

/// The general-weights form: identical to rhs_general.
inline SineBound eval_bound(BoundForm form, const WeightedAngles& wa) {
  if (form != BoundForm::CorMain)
    throw std::invalid_argument(std::string(to_string(form)) +
                                " does not take weighted angles");
  return rhs_general(wa);
}

/// The k-family branches: sin^{k+1}(pi/(k+1)) and sin^{k+1}(2 pi k y/(k+1))
/// for y in (0, 1/k).
inline SineBound eval_bound(BoundForm form, int k, double y) {
  if (form != BoundForm::KFam_A && form != BoundForm::KFam_B)
    throw std::invalid_argument(std::string(to_string(form)) +
                                " does not take (k, y) parameters");
  if (k < 1) throw std::invalid_argument("k-family: k must be >= 1");
  double kk = static_cast<double>(k);
  if (!(y > 0.0 && y < 1.0 / kk))
    detail::domain_fail("eval_bound", "k-family y must lie in (0, 1/k)", y);
  if (form == BoundForm::KFam_A) return make_sine_bound(1.0, kk + 1.0);
  return make_sine_bound(2.0 * kk * y, kk + 1.0);
}

// ---------------------------------------------------------------------------
// Left-hand families
// ---------------------------------------------------------------------------

enum class LhsFamily {
  Cyclic,  // prod_{i<n} sin^{l_{i+1}}(pi l_i) * sin^{l_1}(pi l_n)
  Paired,  // prod over pairs sin^{1-l_even}(pi l_odd) sin^{l_odd}(pi l_even)
  C37,     // cyclic prefix with the last factor exponent l_1 + l_n
};

namespace detail {

inline double lhs_family_log(LhsFamily family, const double* p,
                             std::size_t n) {
  switch (family) {
    case LhsFamily::Cyclic: {
      if (n < 2)
        throw std::invalid_argument("lhs_family: cyclic needs arity >= 2");
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i)
        s += p[i + 1] * log_sin_pi(p[i]);
      return s + p[0] * log_sin_pi(p[n - 1]);
    }
    case LhsFamily::Paired: {
      if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(
            "lhs_family: paired needs an even arity >= 2");
      double s = 0.0;
      for (std::size_t i = 0; i < n; i += 2) {
        s += (1.0 - p[i + 1]) * log_sin_pi(p[i]);
        s += p[i] * log_sin_pi(p[i + 1]);
      }
      return s;
    }
    case LhsFamily::C37: {
      if (n < 2) throw std::invalid_argument("lhs_family: needs arity >= 2");
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i)
        s += p[i + 1] * log_sin_pi(p[i]);
      return s + (p[0] + p[n - 1]) * log_sin_pi(p[n - 1]);
    }
  }
  throw std::logic_error("lhs_family: unhandled family");
}

}  // namespace detail

inline LogValue lhs_family(LhsFamily family, const ParamVector& p) {
  return {detail::lhs_family_log(family, p.lam.data(), p.size())};
}

}  // namespace sinebound

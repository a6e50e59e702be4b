#pragma once

// The claims registry and numerical auditor. Every printed inequality gets a
// validity audit (is the stated right-hand side really an upper bound on its
// stated domain); every two-branch claim additionally gets an optimality
// audit (is the stated branch the pointwise minimum of the candidates);
// figure captions get table audits. Audits are high-density numerical
// evidence with deterministic seeded sampling, not certified proofs.
//
// Decision metrics are log-space. Reports carry value-space numbers at the
// worst probe plus a bounded worst-first counterexample list, and serialize
// to a JSON layout with 17-significant-digit reals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sinebound/bounds.hpp"
#include "sinebound/compare.hpp"
#include "sinebound/format.hpp"
#include "sinebound/rng.hpp"

namespace sinebound {

// ---------------------------------------------------------------------------
// Claim registry
// ---------------------------------------------------------------------------

enum class ClaimId {
  L21,       // Gamma log-convexity inequality
  T31,       // two-sided Gamma inequality
  C32,       // general weighted sine-product bound
  P33,       // paired family, P bound
  P34,       // paired family, Q bound
  P35,       // cyclic family, S bound
  P36,       // cyclic family, T bound
  C37a,      // doubled-tail family, S-shaped bound
  C37b,      // doubled-tail family, T-shaped bound
  C44,       // two-angle min{A,B} bound
  C45,       // k-family piecewise bound (audited for k = 1..5)
  EqYsin,    // sin(2 pi y) sin^2(pi y) <= 3 sqrt(3)/8 on (0, 1/4]
  C46table,  // printed A-vs-B region table
  C47,       // sin(pi x) <= sin(2 pi x (1-x))
  C48,       // three-angle min{S,T} bound
  C49table,  // printed S-vs-T region table (3D)
  C410,      // piecewise bound with branch predicate (x-1/2)(z-1/2)
  C411,      // piecewise bound with branch predicate (x+y-1)(2y-1)
  C412,      // piecewise bound with branch predicate (4xy-x-y)(2x-1)
  C413,      // one-variable piecewise bound split at x = 1/3
  Fig1,
  Fig2,
  Fig3,
  Fig4,
  Fig5,
  Fig6,
  Fig7,
  Fig8,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::L21,      ClaimId::T31,  ClaimId::C32,      ClaimId::P33,
    ClaimId::P34,      ClaimId::P35,  ClaimId::P36,      ClaimId::C37a,
    ClaimId::C37b,     ClaimId::C44,  ClaimId::C45,      ClaimId::EqYsin,
    ClaimId::C46table, ClaimId::C47,  ClaimId::C48,      ClaimId::C49table,
    ClaimId::C410,     ClaimId::C411, ClaimId::C412,     ClaimId::C413,
    ClaimId::Fig1,     ClaimId::Fig2, ClaimId::Fig3,     ClaimId::Fig4,
    ClaimId::Fig5,     ClaimId::Fig6, ClaimId::Fig7,     ClaimId::Fig8,
};

inline std::string_view to_string(ClaimId c) {
  switch (c) {
    case ClaimId::L21: return "L21";
    case ClaimId::T31: return "T31";
    case ClaimId::C32: return "C32";
    case ClaimId::P33: return "P33";
    case ClaimId::P34: return "P34";
    case ClaimId::P35: return "P35";
    case ClaimId::P36: return "P36";
    case ClaimId::C37a: return "C37a";
    case ClaimId::C37b: return "C37b";
    case ClaimId::C44: return "C44";
    case ClaimId::C45: return "C45";
    case ClaimId::EqYsin: return "EqYsin";
    case ClaimId::C46table: return "C46table";
    case ClaimId::C47: return "C47";
    case ClaimId::C48: return "C48";
    case ClaimId::C49table: return "C49table";
    case ClaimId::C410: return "C410";
    case ClaimId::C411: return "C411";
    case ClaimId::C412: return "C412";
    case ClaimId::C413: return "C413";
    case ClaimId::Fig1: return "Fig1";
    case ClaimId::Fig2: return "Fig2";
    case ClaimId::Fig3: return "Fig3";
    case ClaimId::Fig4: return "Fig4";
    case ClaimId::Fig5: return "Fig5";
    case ClaimId::Fig6: return "Fig6";
    case ClaimId::Fig7: return "Fig7";
    case ClaimId::Fig8: return "Fig8";
  }
  return "?";
}

inline std::optional<ClaimId> claim_from_string(std::string_view s) {
  for (ClaimId c : kAllClaims)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

enum class AuditKind { Validity, Optimality, Table };

inline std::string_view to_string(AuditKind k) {
  switch (k) {
    case AuditKind::Validity: return "validity";
    case AuditKind::Optimality: return "optimality";
    case AuditKind::Table: return "table";
  }
  return "?";
}

// Sampling layout of a claim's domain.
//   kFixed:    tensor grid + jittered samples over [margin, 1-margin]^dim
//   kVariable: seeded random draws with the arity cycling per sample
//   kPerK:     1D grids over y in (0, 1/k) for k = 1..5, point = (k, y)
enum class SampleLayout { kFixed, kVariable, kPerK };

struct ClaimTraits {
  bool has_validity = false;
  bool has_optimality = false;
  bool has_table = false;
  SampleLayout layout = SampleLayout::kFixed;
  int dim = 0;  // fixed layouts only
};

inline ClaimTraits claim_traits(ClaimId c) {
  using L = SampleLayout;
  switch (c) {
    case ClaimId::L21: return {true, false, false, L::kVariable, 0};
    case ClaimId::T31: return {true, false, false, L::kVariable, 0};
    case ClaimId::C32: return {true, false, false, L::kVariable, 0};
    case ClaimId::P33: return {true, false, false, L::kVariable, 0};
    case ClaimId::P34: return {true, false, false, L::kVariable, 0};
    case ClaimId::P35: return {true, false, false, L::kVariable, 0};
    case ClaimId::P36: return {true, false, false, L::kVariable, 0};
    case ClaimId::C37a: return {true, false, false, L::kVariable, 0};
    case ClaimId::C37b: return {true, false, false, L::kVariable, 0};
    case ClaimId::C44: return {true, false, false, L::kFixed, 2};
    case ClaimId::C45: return {true, true, false, L::kPerK, 2};
    case ClaimId::EqYsin: return {true, false, false, L::kFixed, 1};
    case ClaimId::C46table: return {false, true, false, L::kFixed, 2};
    case ClaimId::C47: return {true, false, false, L::kFixed, 1};
    case ClaimId::C48: return {true, false, false, L::kFixed, 3};
    case ClaimId::C49table: return {false, true, false, L::kFixed, 3};
    case ClaimId::C410: return {true, true, false, L::kFixed, 2};
    case ClaimId::C411: return {true, true, false, L::kFixed, 2};
    case ClaimId::C412: return {true, true, false, L::kFixed, 2};
    case ClaimId::C413: return {true, true, false, L::kFixed, 1};
    case ClaimId::Fig1: return {false, false, true, L::kFixed, 2};
    case ClaimId::Fig2: return {false, false, true, L::kFixed, 2};
    case ClaimId::Fig3: return {false, false, true, L::kFixed, 3};
    case ClaimId::Fig4: return {false, false, true, L::kFixed, 3};
    case ClaimId::Fig5: return {false, false, true, L::kFixed, 2};
    case ClaimId::Fig6: return {false, false, true, L::kFixed, 2};
    case ClaimId::Fig7: return {false, false, true, L::kFixed, 2};
    case ClaimId::Fig8: return {false, false, true, L::kFixed, 1};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Configuration and reports
// ---------------------------------------------------------------------------

struct AuditConfig {
  int grid_per_dim = 256;
  double boundary_margin = 1e-6;
  long long random_samples = 100000;
  std::uint64_t seed = 0;
  int refine_depth = 3;
  double violation_tol = 1e-10;      // log-space slack for validity
  double near_equality_band = 1e-8;  // log-space band around equality manifolds
  int workers = 1;                   // execution detail; never affects output

  void validate() const {
    if (grid_per_dim < 2)
      throw std::invalid_argument("AuditConfig: grid_per_dim must be >= 2");
    if (!(boundary_margin > 0.0 && boundary_margin < 0.5))
      throw std::invalid_argument(
          "AuditConfig: boundary_margin must lie in (0, 1/2)");
    if (random_samples < 0 || random_samples > 1000000000LL)
      throw std::invalid_argument(
          "AuditConfig: random_samples must lie in [0, 1e9]");
    if (refine_depth < 0 || refine_depth > 16)
      throw std::invalid_argument(
          "AuditConfig: refine_depth must lie in [0, 16]");
    if (!(violation_tol > 0.0))
      throw std::invalid_argument("AuditConfig: violation_tol must be > 0");
    if (!(near_equality_band > 0.0))
      throw std::invalid_argument(
          "AuditConfig: near_equality_band must be > 0");
  }
};

enum class AuditStatus { Pass, Fail, Inconsistent };

inline std::string_view to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Pass: return "pass";
    case AuditStatus::Fail: return "fail";
    case AuditStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

struct Counterexample {
  std::vector<double> point;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

struct AuditReport {
  ClaimId claim{};
  AuditKind kind{};
  long long samples = 0;
  AuditStatus status = AuditStatus::Pass;
  std::vector<double> worst_point;
  double lhs = 0.0;  // value-space sides at the worst probe
  double rhs = 0.0;
  double gap = 0.0;  // lhs - rhs
  std::vector<Counterexample> counterexamples;

  // Worst decision metric after the sweep and after each refinement round;
  // diagnostic only, not serialized.
  std::vector<double> refine_trace;
};

// ---------------------------------------------------------------------------
// Claim evaluation
// ---------------------------------------------------------------------------

namespace detail {

struct Probe {
  bool skip = false;
  double metric = 0.0;  // decision quantity, log-space
  double lhs = 0.0;     // display values
  double rhs = 0.0;
};

inline Probe validity_probe_from_logs(double lhs_log, double rhs_log) {
  return {false, lhs_log - rhs_log, std::exp(lhs_log), std::exp(rhs_log)};
}

// Stated right-hand side of the k-family claim: the constant branch up to
// y = 1/(2k), the moving branch beyond.
inline double c45_stated_log(int k, double y) {
  double kk = static_cast<double>(k);
  double lam = kk + 1.0;
  double sigma = (y <= 1.0 / (2.0 * kk)) ? 1.0 : 2.0 * kk * y;
  return lam * log_sin_pi(sigma / lam);
}

inline double c45_lhs_log(int k, double y) {
  return log_sin_pi(static_cast<double>(k) * y) +
         static_cast<double>(k) * log_sin_pi(y);
}

inline Probe probe_validity(ClaimId claim, const double* pt, std::size_t n) {
  switch (claim) {
    case ClaimId::L21:
    case ClaimId::T31: {
      std::size_t half = n / 2;
      WeightedAngles wa(std::vector<double>(pt, pt + half),
                        std::vector<double>(pt + half, pt + n));
      auto [l, r] = (claim == ClaimId::L21) ? gamma_lemma_sides(wa)
                                            : gamma_theorem_sides(wa);
      return validity_probe_from_logs(l, r);
    }
    case ClaimId::C32: {
      std::size_t half = n / 2;
      WeightedAngles wa(std::vector<double>(pt, pt + half),
                        std::vector<double>(pt + half, pt + n));
      return validity_probe_from_logs(lhs_general(wa).log_value,
                                      rhs_general(wa).log_value);
    }
    case ClaimId::P33:
      return validity_probe_from_logs(lhs_family_log(LhsFamily::Paired, pt, n),
                                      bound_log(BoundForm::P2n, pt, n));
    case ClaimId::P34:
      return validity_probe_from_logs(lhs_family_log(LhsFamily::Paired, pt, n),
                                      bound_log(BoundForm::Q2n, pt, n));
    case ClaimId::P35:
      return validity_probe_from_logs(lhs_family_log(LhsFamily::Cyclic, pt, n),
                                      bound_log(BoundForm::Sn, pt, n));
    case ClaimId::P36:
      return validity_probe_from_logs(lhs_family_log(LhsFamily::Cyclic, pt, n),
                                      bound_log(BoundForm::Tn, pt, n));
    case ClaimId::C37a:
      return validity_probe_from_logs(lhs_family_log(LhsFamily::C37, pt, n),
                                      bound_log(BoundForm::C37a, pt, n));
    case ClaimId::C37b:
      return validity_probe_from_logs(lhs_family_log(LhsFamily::C37, pt, n),
                                      bound_log(BoundForm::C37b, pt, n));
    case ClaimId::C44: {
      double x = pt[0], y = pt[1];
      double lhs = y * log_sin_pi(x) + (1.0 - x) * log_sin_pi(y);
      double rhs = std::min(bound_log(BoundForm::A2, pt, 2),
                            bound_log(BoundForm::B2, pt, 2));
      return validity_probe_from_logs(lhs, rhs);
    }
    case ClaimId::C45: {
      int k = static_cast<int>(pt[0]);
      return validity_probe_from_logs(c45_lhs_log(k, pt[1]),
                                      c45_stated_log(k, pt[1]));
    }
    case ClaimId::EqYsin: {
      double y = pt[0];
      double lhs = log_sin_pi(2.0 * y) + 2.0 * log_sin_pi(y);
      double rhs = 3.0 * log_sin_pi(1.0 / 3.0);  // log of 3 sqrt(3)/8
      return validity_probe_from_logs(lhs, rhs);
    }
    case ClaimId::C47:
      return validity_probe_from_logs(log_sin_pi(pt[0]),
                                      bound_log(BoundForm::Diag, pt, 1));
    case ClaimId::C48: {
      double lhs = pt[1] * log_sin_pi(pt[0]) + pt[2] * log_sin_pi(pt[1]) +
                   pt[0] * log_sin_pi(pt[2]);
      double rhs = std::min(bound_log(BoundForm::S3, pt, 3),
                            bound_log(BoundForm::T3, pt, 3));
      return validity_probe_from_logs(lhs, rhs);
    }
    case ClaimId::C410: {
      double x = pt[0], z = pt[1];
      double lhs = (x + z) * log_sin_pi(x) + x * log_sin_pi(z);
      Region r = stated_region(RegionClaim::C410, {x, z});
      double sl = bound_log(BoundForm::S_yx, pt, 2);
      double tl = bound_log(BoundForm::T_yx, pt, 2);
      double rhs = (r == Region::Branch1)   ? sl
                   : (r == Region::Branch2) ? tl
                                            : std::min(sl, tl);
      return validity_probe_from_logs(lhs, rhs);
    }
    case ClaimId::C411: {
      double x = pt[0], y = pt[1];
      double lhs = y * log_sin_pi(x) + (x + y) * log_sin_pi(y);
      Region r = stated_region(RegionClaim::C411, {x, y});
      double sl = bound_log(BoundForm::S_zy, pt, 2);
      double tl = bound_log(BoundForm::T_zy, pt, 2);
      double rhs = (r == Region::Branch1)   ? sl
                   : (r == Region::Branch2) ? tl
                                            : std::min(sl, tl);
      return validity_probe_from_logs(lhs, rhs);
    }
    case ClaimId::C412: {
      double x = pt[0], y = pt[1];
      double lhs = (x + y) * log_sin_pi(x) + x * log_sin_pi(y);
      Region r = stated_region(RegionClaim::C412, {x, y});
      double sl = bound_log(BoundForm::S_zx, pt, 2);
      double tl = bound_log(BoundForm::T_zx, pt, 2);
      double rhs = (r == Region::Branch1)   ? sl
                   : (r == Region::Branch2) ? tl
                                            : std::min(sl, tl);
      return validity_probe_from_logs(lhs, rhs);
    }
    case ClaimId::C413: {
      double x = pt[0];
      double rhs = (x <= 1.0 / 3.0) ? bound_log(BoundForm::OneD_a, pt, 1)
                                    : bound_log(BoundForm::OneD_c, pt, 1);
      return validity_probe_from_logs(log_sin_pi(x), rhs);
    }
    default:
      throw std::invalid_argument(std::string(to_string(claim)) +
                                  " has no validity semantics");
  }
}

// stated-vs-best probe shared by optimality and sharper-style table audits
inline Probe sharper_probe(double stated_log, double other_log, bool skip) {
  double best = std::min(stated_log, other_log);
  return {skip, stated_log - best, std::exp(stated_log), std::exp(best)};
}

inline Probe probe_optimality(ClaimId claim, const double* pt,
                              std::size_t /*n*/) {
  switch (claim) {
    case ClaimId::C45: {
      int k = static_cast<int>(pt[0]);
      double y = pt[1];
      double la = eval_bound(BoundForm::KFam_A, k, y).log_value;
      double lb = eval_bound(BoundForm::KFam_B, k, y).log_value;
      bool first = y <= 1.0 / (2.0 * static_cast<double>(k));
      return sharper_probe(first ? la : lb, first ? lb : la, false);
    }
    case ClaimId::C46table: {
      Region r = stated_region(RegionClaim::C46, {pt[0], pt[1]});
      double la = bound_log(BoundForm::A2, pt, 2);
      double lb = bound_log(BoundForm::B2, pt, 2);
      if (r == Region::Boundary) return {true, 0.0, 0.0, 0.0};
      double stated = (r == Region::Branch1) ? la : lb;
      double other = (r == Region::Branch1) ? lb : la;
      return sharper_probe(stated, other, false);
    }
    case ClaimId::C49table: {
      Region r = stated_region(RegionClaim::C49, {pt[0], pt[1], pt[2]});
      double ls = bound_log(BoundForm::S3, pt, 3);
      double lt = bound_log(BoundForm::T3, pt, 3);
      if (r == Region::Boundary) return {true, 0.0, 0.0, 0.0};
      double stated = (r == Region::Branch1) ? ls : lt;
      double other = (r == Region::Branch1) ? lt : ls;
      return sharper_probe(stated, other, false);
    }
    case ClaimId::C410: {
      Region r = stated_region(RegionClaim::C410, {pt[0], pt[1]});
      double ls = bound_log(BoundForm::S_yx, pt, 2);
      double lt = bound_log(BoundForm::T_yx, pt, 2);
      if (r == Region::Boundary) return {true, 0.0, 0.0, 0.0};
      return sharper_probe((r == Region::Branch1) ? ls : lt,
                           (r == Region::Branch1) ? lt : ls, false);
    }
    case ClaimId::C411: {
      Region r = stated_region(RegionClaim::C411, {pt[0], pt[1]});
      double ls = bound_log(BoundForm::S_zy, pt, 2);
      double lt = bound_log(BoundForm::T_zy, pt, 2);
      if (r == Region::Boundary) return {true, 0.0, 0.0, 0.0};
      return sharper_probe((r == Region::Branch1) ? ls : lt,
                           (r == Region::Branch1) ? lt : ls, false);
    }
    case ClaimId::C412: {
      Region r = stated_region(RegionClaim::C412, {pt[0], pt[1]});
      double ls = bound_log(BoundForm::S_zx, pt, 2);
      double lt = bound_log(BoundForm::T_zx, pt, 2);
      if (r == Region::Boundary) return {true, 0.0, 0.0, 0.0};
      return sharper_probe((r == Region::Branch1) ? ls : lt,
                           (r == Region::Branch1) ? lt : ls, false);
    }
    case ClaimId::C413: {
      double x = pt[0];
      double la = bound_log(BoundForm::OneD_a, pt, 1);
      double lc = bound_log(BoundForm::OneD_c, pt, 1);
      double stated = (x <= 1.0 / 3.0) ? la : lc;
      double other = (x <= 1.0 / 3.0) ? lc : la;
      return sharper_probe(stated, other, false);
    }
    default:
      throw std::invalid_argument(std::string(to_string(claim)) +
                                  " has no two-branch structure");
  }
}

inline Probe probe_table(ClaimId claim, const double* pt, std::size_t /*n*/,
                         double violation_tol) {
  switch (claim) {
    case ClaimId::Fig1: {
      // Caption: B is sharper where (x-1/2)(y-1/2) > 0, A where < 0.
      double prod = (pt[0] - 0.5) * (pt[1] - 0.5);
      if (prod == 0.0) return {true, 0.0, 0.0, 0.0};
      double la = bound_log(BoundForm::A2, pt, 2);
      double lb = bound_log(BoundForm::B2, pt, 2);
      double claimed = (prod > 0.0) ? lb : la;
      double other = (prod > 0.0) ? la : lb;
      return sharper_probe(claimed, other, false);
    }
    case ClaimId::Fig2: {
      // The plotted surface z = y(2x-1)/(1-2y) must satisfy delta = 0
      // wherever it passes through the unit cube.
      double x = pt[0], y = pt[1];
      if (y == 0.5) return {true, 0.0, 0.0, 0.0};
      double z = y * (2.0 * x - 1.0) / (1.0 - 2.0 * y);
      if (!(z > 0.0 && z < 1.0)) return {true, 0.0, 0.0, 0.0};
      double delta = y * (1.0 - 2.0 * x) + z * (1.0 - 2.0 * y);
      (void)violation_tol;
      return {false, std::abs(delta), delta, 0.0};
    }
    case ClaimId::Fig3: {
      // Caption: for delta > 0, T is sharper below z = 1/2 and S above.
      double x = pt[0], y = pt[1], z = pt[2];
      double delta = y * (1.0 - 2.0 * x) + z * (1.0 - 2.0 * y);
      if (!(delta > 0.0) || z == 0.5) return {true, 0.0, 0.0, 0.0};
      double ls = bound_log(BoundForm::S3, pt, 3);
      double lt = bound_log(BoundForm::T3, pt, 3);
      double claimed = (z < 0.5) ? lt : ls;
      double other = (z < 0.5) ? ls : lt;
      return sharper_probe(claimed, other, false);
    }
    case ClaimId::Fig4: {
      // Caption as printed: for delta > 0, S sharper below z = 1/2, T above.
      double x = pt[0], y = pt[1], z = pt[2];
      double delta = y * (1.0 - 2.0 * x) + z * (1.0 - 2.0 * y);
      if (!(delta > 0.0) || z == 0.5) return {true, 0.0, 0.0, 0.0};
      double ls = bound_log(BoundForm::S3, pt, 3);
      double lt = bound_log(BoundForm::T3, pt, 3);
      double claimed = (z < 0.5) ? ls : lt;
      double other = (z < 0.5) ? lt : ls;
      return sharper_probe(claimed, other, false);
    }
    case ClaimId::Fig5: {
      double prod = (pt[0] - 0.5) * (pt[1] - 0.5);
      if (prod == 0.0) return {true, 0.0, 0.0, 0.0};
      double ls = bound_log(BoundForm::S_yx, pt, 2);
      double lt = bound_log(BoundForm::T_yx, pt, 2);
      return sharper_probe(prod > 0.0 ? ls : lt, prod > 0.0 ? lt : ls, false);
    }
    case ClaimId::Fig6: {
      double prod = (pt[0] + pt[1] - 1.0) * (2.0 * pt[1] - 1.0);
      if (prod == 0.0) return {true, 0.0, 0.0, 0.0};
      double ls = bound_log(BoundForm::S_zy, pt, 2);
      double lt = bound_log(BoundForm::T_zy, pt, 2);
      return sharper_probe(prod > 0.0 ? ls : lt, prod > 0.0 ? lt : ls, false);
    }
    case ClaimId::Fig7: {
      double x = pt[0], y = pt[1];
      double prod = (4.0 * x * y - x - y) * (2.0 * x - 1.0);
      if (prod == 0.0) return {true, 0.0, 0.0, 0.0};
      double ls = bound_log(BoundForm::S_zx, pt, 2);
      double lt = bound_log(BoundForm::T_zx, pt, 2);
      return sharper_probe(prod > 0.0 ? ls : lt, prod > 0.0 ? lt : ls, false);
    }
    case ClaimId::Fig8: {
      // Caption: the quadratic curve is smallest up to x = 1/3, the steeper
      // shifted curve beyond.
      double x = pt[0];
      double la = bound_log(BoundForm::OneD_a, pt, 1);
      double lb = bound_log(BoundForm::OneD_b, pt, 1);
      double lc = bound_log(BoundForm::OneD_c, pt, 1);
      double claimed = (x <= 1.0 / 3.0) ? la : lc;
      double best = std::min(la, std::min(lb, lc));
      return {false, claimed - best, std::exp(claimed), std::exp(best)};
    }
    default:
      throw std::invalid_argument(std::string(to_string(claim)) +
                                  " has no table semantics");
  }
}

inline Probe probe_point(ClaimId claim, AuditKind kind, const double* pt,
                         std::size_t n, const AuditConfig& cfg) {
  switch (kind) {
    case AuditKind::Validity: return probe_validity(claim, pt, n);
    case AuditKind::Optimality: return probe_optimality(claim, pt, n);
    case AuditKind::Table: return probe_table(claim, pt, n, cfg.violation_tol);
  }
  throw std::logic_error("probe_point: unhandled kind");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Corrected minima
// ---------------------------------------------------------------------------

struct CorrectedMin {
  double log_value = 0.0;
  double value = 0.0;
  BoundForm branch{};
};

/// Pointwise minimum over the claim's valid candidate bounds. For the
/// one-variable piecewise claim the candidates are the two curves that the
/// diagonal substitutions actually produce, sin(2 pi x(1-x)) and
/// sin(pi(1+x)/3); the printed steeper curve is not among them.
inline CorrectedMin corrected_min(ClaimId claim,
                                  const std::vector<double>& pt) {
  auto pick = [](const SineBound& a, BoundForm fa, const SineBound& b,
                 BoundForm fb) -> CorrectedMin {
    if (a.log_value <= b.log_value) return {a.log_value, a.value, fa};
    return {b.log_value, b.value, fb};
  };
  switch (claim) {
    case ClaimId::C45: {
      if (pt.size() != 2)
        throw std::invalid_argument("corrected_min: C45 takes (k, y)");
      int k = static_cast<int>(pt[0]);
      return pick(eval_bound(BoundForm::KFam_A, k, pt[1]), BoundForm::KFam_A,
                  eval_bound(BoundForm::KFam_B, k, pt[1]), BoundForm::KFam_B);
    }
    case ClaimId::C46table: {
      ParamVector p(pt);
      return pick(eval_bound(BoundForm::A2, p), BoundForm::A2,
                  eval_bound(BoundForm::B2, p), BoundForm::B2);
    }
    case ClaimId::C410: {
      ParamVector p(pt);
      return pick(eval_bound(BoundForm::S_yx, p), BoundForm::S_yx,
                  eval_bound(BoundForm::T_yx, p), BoundForm::T_yx);
    }
    case ClaimId::C411: {
      ParamVector p(pt);
      return pick(eval_bound(BoundForm::S_zy, p), BoundForm::S_zy,
                  eval_bound(BoundForm::T_zy, p), BoundForm::T_zy);
    }
    case ClaimId::C412: {
      ParamVector p(pt);
      return pick(eval_bound(BoundForm::S_zx, p), BoundForm::S_zx,
                  eval_bound(BoundForm::T_zx, p), BoundForm::T_zx);
    }
    case ClaimId::C413: {
      ParamVector p(pt);
      return pick(eval_bound(BoundForm::OneD_a, p), BoundForm::OneD_a,
                  eval_bound(BoundForm::OneD_b, p), BoundForm::OneD_b);
    }
    default:
      throw std::invalid_argument(std::string(to_string(claim)) +
                                  " has no corrected variant");
  }
}

// ---------------------------------------------------------------------------
// Sampling engine
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr int kCounterexampleCap = 16;

struct ProbeRecord {
  double metric;
  std::uint64_t seq;
  std::vector<double> point;
  double lhs, rhs;
};

struct Accum {
  double threshold = 0.0;
  long long samples = 0;
  bool has_worst = false;
  ProbeRecord worst{};
  std::vector<ProbeRecord> violations;  // sorted (metric desc, seq asc)

  void feed(std::uint64_t seq, const double* pt, std::size_t n,
            const Probe& pr) {
    ++samples;
    if (pr.skip) return;
    if (!has_worst || pr.metric > worst.metric ||
        (pr.metric == worst.metric && seq < worst.seq)) {
      worst = {pr.metric, seq, std::vector<double>(pt, pt + n), pr.lhs,
               pr.rhs};
      has_worst = true;
    }
    if (pr.metric > threshold) {
      violations.push_back(
          {pr.metric, seq, std::vector<double>(pt, pt + n), pr.lhs, pr.rhs});
      std::sort(violations.begin(), violations.end(),
                [](const ProbeRecord& a, const ProbeRecord& b) {
                  if (a.metric != b.metric) return a.metric > b.metric;
                  return a.seq < b.seq;
                });
      if (violations.size() > kCounterexampleCap)
        violations.resize(kCounterexampleCap);
    }
  }

  void merge(Accum&& o) {
    samples += o.samples;
    if (o.has_worst &&
        (!has_worst || o.worst.metric > worst.metric ||
         (o.worst.metric == worst.metric && o.worst.seq < worst.seq)))
      worst = std::move(o.worst), has_worst = true;
    for (auto& v : o.violations) violations.push_back(std::move(v));
    std::sort(violations.begin(), violations.end(),
              [](const ProbeRecord& a, const ProbeRecord& b) {
                if (a.metric != b.metric) return a.metric > b.metric;
                return a.seq < b.seq;
              });
    if (violations.size() > kCounterexampleCap)
      violations.resize(kCounterexampleCap);
  }
};

inline std::uint64_t probe_seq(std::uint64_t phase, std::uint64_t cell,
                               std::uint64_t sub) {
  return (phase << 58) | (cell << 28) | sub;
}

struct AxisBox {
  std::vector<double> lo, hi;
};

inline AxisBox default_box(int dim, const AuditConfig& cfg) {
  AxisBox b;
  b.lo.assign(dim, cfg.boundary_margin);
  b.hi.assign(dim, 1.0 - cfg.boundary_margin);
  return b;
}

inline AuditReport make_report(ClaimId claim, AuditKind kind, const Accum& acc,
                               double threshold, std::vector<double> trace) {
  AuditReport rep;
  rep.claim = claim;
  rep.kind = kind;
  rep.samples = acc.samples;
  rep.refine_trace = std::move(trace);
  if (acc.has_worst) {
    rep.worst_point = acc.worst.point;
    rep.lhs = acc.worst.lhs;
    rep.rhs = acc.worst.rhs;
    rep.gap = acc.worst.lhs - acc.worst.rhs;
  }
  bool failed = acc.has_worst && acc.worst.metric > threshold;
  rep.status = failed ? AuditStatus::Fail : AuditStatus::Pass;
  for (const auto& v : acc.violations)
    rep.counterexamples.push_back({v.point, v.lhs, v.rhs, v.lhs - v.rhs});
  return rep;
}

// Tensor grid with per-cell jittered samples, chunked over workers, then
// local refinement around the worst probe. Deterministic regardless of the
// worker count: every probe's coordinates depend only on (seed, cell, draw).
class FixedDimRunner {
 public:
  FixedDimRunner(ClaimId claim, AuditKind kind, const AuditConfig& cfg,
                 AxisBox box)
      : claim_(claim), kind_(kind), cfg_(cfg), box_(std::move(box)),
        dim_(static_cast<int>(box_.lo.size())) {}

  // Extra deterministic probes appended after the grid phase (e.g. a closed
  // domain endpoint).
  void add_extra_probe(std::vector<double> pt) {
    extras_.push_back(std::move(pt));
  }

  AuditReport run() {
    long long n = cfg_.grid_per_dim;
    long long cells = 1;
    for (int d = 0; d < dim_; ++d) cells *= n;

    int workers = std::max(1, cfg_.workers);
    std::vector<Accum> parts(workers);
    for (auto& a : parts) a.threshold = threshold();

    auto work = [&](int w) {
      long long c0 = cells * w / workers;
      long long c1 = cells * (w + 1) / workers;
      scan_cells(parts[w], c0, c1, cells);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> ts;
      for (int w = 0; w < workers; ++w) ts.emplace_back(work, w);
      for (auto& t : ts) t.join();
    }
    Accum acc = std::move(parts[0]);
    for (int w = 1; w < workers; ++w) acc.merge(std::move(parts[w]));

    std::vector<double> pt(dim_);
    for (std::size_t e = 0; e < extras_.size(); ++e) {
      Probe pr = probe_point(claim_, kind_, extras_[e].data(), dim_, cfg_);
      acc.feed(probe_seq(0, static_cast<std::uint64_t>(cells) + e, 0),
               extras_[e].data(), dim_, pr);
    }

    std::vector<double> trace;
    trace.push_back(acc.has_worst ? acc.worst.metric : 0.0);
    refine(acc, trace);
    return make_report(claim_, kind_, acc, threshold(), std::move(trace));
  }

 private:
  double threshold() const {
    if (kind_ == AuditKind::Validity) return cfg_.violation_tol;
    if (kind_ == AuditKind::Table && claim_ == ClaimId::Fig2)
      return cfg_.violation_tol;
    return cfg_.near_equality_band;
  }

  void cell_center(long long c, std::vector<double>& pt) const {
    long long n = cfg_.grid_per_dim;
    for (int d = 0; d < dim_; ++d) {
      long long i = c % n;
      c /= n;
      pt[d] = box_.lo[d] +
              (static_cast<double>(i) + 0.5) * (box_.hi[d] - box_.lo[d]) /
                  static_cast<double>(n);
    }
  }

  void scan_cells(Accum& acc, long long c0, long long c1,
                  long long cells) const {
    long long n = cfg_.grid_per_dim;
    long long R = cfg_.random_samples;
    std::vector<double> pt(dim_);
    for (long long c = c0; c < c1; ++c) {
      cell_center(c, pt);
      acc.feed(probe_seq(0, c, 0), pt.data(), dim_,
               probe_point(claim_, kind_, pt.data(), dim_, cfg_));
      if (R <= 0) continue;
      long long jlo = (c * R + cells - 1) / cells;
      long long jhi = ((c + 1) * R + cells - 1) / cells;
      for (long long j = jlo; j < jhi; ++j) {
        Stream st(cfg_.seed, static_cast<std::uint64_t>(c),
                  static_cast<std::uint64_t>(j) + 1);
        long long cc = c;
        for (int d = 0; d < dim_; ++d) {
          long long i = cc % n;
          cc /= n;
          double w = (box_.hi[d] - box_.lo[d]) / static_cast<double>(n);
          pt[d] = box_.lo[d] + (static_cast<double>(i) + st.uniform()) * w;
        }
        acc.feed(probe_seq(0, c, static_cast<std::uint64_t>(j - jlo) + 1),
                 pt.data(), dim_,
                 probe_point(claim_, kind_, pt.data(), dim_, cfg_));
      }
    }
  }

  void refine(Accum& acc, std::vector<double>& trace) const {
    if (!acc.has_worst) return;
    std::vector<double> h(dim_);
    for (int d = 0; d < dim_; ++d)
      h[d] = (box_.hi[d] - box_.lo[d]) / static_cast<double>(cfg_.grid_per_dim);
    const int pts_per_axis = 17;
    std::vector<double> pt(dim_);
    for (int r = 1; r <= cfg_.refine_depth; ++r) {
      std::vector<double> center = acc.worst.point;
      long long total = 1;
      for (int d = 0; d < dim_; ++d) total *= pts_per_axis;
      for (long long idx = 0; idx < total; ++idx) {
        long long q = idx;
        for (int d = 0; d < dim_; ++d) {
          int i = static_cast<int>(q % pts_per_axis);
          q /= pts_per_axis;
          double lo = std::max(box_.lo[d], center[d] - h[d]);
          double hi = std::min(box_.hi[d], center[d] + h[d]);
          pt[d] = lo + (hi - lo) * static_cast<double>(i) /
                           static_cast<double>(pts_per_axis - 1);
        }
        acc.feed(probe_seq(static_cast<std::uint64_t>(r), 0,
                           static_cast<std::uint64_t>(idx)),
                 pt.data(), dim_,
                 probe_point(claim_, kind_, pt.data(), dim_, cfg_));
      }
      for (int d = 0; d < dim_; ++d) h[d] /= 8.0;
      trace.push_back(acc.worst.metric);
    }
  }

  ClaimId claim_;
  AuditKind kind_;
  AuditConfig cfg_;
  AxisBox box_;
  int dim_;
  std::vector<std::vector<double>> extras_;
};

// Arity cycle for the variable-arity families.
inline std::size_t draw_arity(ClaimId claim, long long j) {
  switch (claim) {
    case ClaimId::L21:
    case ClaimId::T31:
    case ClaimId::C32:
      return 2 * (1 + static_cast<std::size_t>(j % 6));  // a's plus w's
    case ClaimId::P33:
    case ClaimId::P34:
      return 2 * (1 + static_cast<std::size_t>(j % 3));  // pairs
    default:
      return 2 + static_cast<std::size_t>(j % 5);  // cyclic arities 2..6
  }
}

inline AuditReport run_variable_arity(ClaimId claim, AuditKind kind,
                                      const AuditConfig& cfg) {
  Accum acc;
  acc.threshold = cfg.violation_tol;
  double lo = cfg.boundary_margin, hi = 1.0 - cfg.boundary_margin;
  std::vector<double> pt;
  for (long long j = 0; j < cfg.random_samples; ++j) {
    std::size_t arity = draw_arity(claim, j);
    pt.resize(arity);
    Stream st(cfg.seed, static_cast<std::uint64_t>(j), 0);
    for (auto& v : pt) v = st.uniform(lo, hi);
    acc.feed(probe_seq(0, static_cast<std::uint64_t>(j), 0), pt.data(),
             arity, probe_point(claim, kind, pt.data(), arity, cfg));
  }
  std::vector<double> trace;
  trace.push_back(acc.has_worst ? acc.worst.metric : 0.0);
  if (acc.has_worst) {
    double h = 0.05;
    const int local_draws = 4096;
    for (int r = 1; r <= cfg.refine_depth; ++r) {
      std::vector<double> center = acc.worst.point;
      std::size_t arity = center.size();
      pt.resize(arity);
      for (int i = 0; i < local_draws; ++i) {
        Stream st(cfg.seed, 0x5EEDBEEFULL + static_cast<std::uint64_t>(r),
                  static_cast<std::uint64_t>(i));
        for (std::size_t d = 0; d < arity; ++d) {
          double a = std::max(lo, center[d] - h);
          double b = std::min(hi, center[d] + h);
          pt[d] = st.uniform(a, b);
        }
        acc.feed(probe_seq(static_cast<std::uint64_t>(r), 0,
                           static_cast<std::uint64_t>(i)),
                 pt.data(), arity,
                 probe_point(claim, kind, pt.data(), arity, cfg));
      }
      h /= 8.0;
      trace.push_back(acc.worst.metric);
    }
  }
  return make_report(claim, kind, acc, cfg.violation_tol, std::move(trace));
}

// The k-family claim: 1D grids over y in (0, 1/k) for k = 1..5, probes carry
// (k, y) points.
inline AuditReport run_per_k(ClaimId claim, AuditKind kind,
                             const AuditConfig& cfg) {
  constexpr int kMax = 5;
  double threshold = (kind == AuditKind::Validity) ? cfg.violation_tol
                                                   : cfg.near_equality_band;
  Accum acc;
  acc.threshold = threshold;
  long long n = cfg.grid_per_dim;
  long long rk = cfg.random_samples / kMax;
  double pt[2];
  for (int k = 1; k <= kMax; ++k) {
    double lo = cfg.boundary_margin;
    double hi = 1.0 / static_cast<double>(k) - cfg.boundary_margin;
    pt[0] = static_cast<double>(k);
    for (long long i = 0; i < n; ++i) {
      std::uint64_t cell = static_cast<std::uint64_t>((k - 1) * n + i);
      pt[1] = lo + (static_cast<double>(i) + 0.5) * (hi - lo) /
                       static_cast<double>(n);
      acc.feed(probe_seq(0, cell, 0), pt, 2,
               probe_point(claim, kind, pt, 2, cfg));
      if (rk <= 0) continue;
      long long jlo = (i * rk + n - 1) / n;
      long long jhi = ((i + 1) * rk + n - 1) / n;
      for (long long j = jlo; j < jhi; ++j) {
        Stream st(cfg.seed, cell, static_cast<std::uint64_t>(j) + 1);
        double w = (hi - lo) / static_cast<double>(n);
        pt[1] = lo + (static_cast<double>(i) + st.uniform()) * w;
        acc.feed(probe_seq(0, cell, static_cast<std::uint64_t>(j - jlo) + 1),
                 pt, 2, probe_point(claim, kind, pt, 2, cfg));
      }
    }
  }
  std::vector<double> trace;
  trace.push_back(acc.has_worst ? acc.worst.metric : 0.0);
  if (acc.has_worst) {
    int k = static_cast<int>(acc.worst.point[0]);
    double lo = cfg.boundary_margin;
    double hi = 1.0 / static_cast<double>(k) - cfg.boundary_margin;
    double h = (hi - lo) / static_cast<double>(n);
    for (int r = 1; r <= cfg.refine_depth; ++r) {
      double center = acc.worst.point[1];
      double a = std::max(lo, center - h);
      double b = std::min(hi, center + h);
      for (int i = 0; i < 17; ++i) {
        pt[0] = static_cast<double>(k);
        pt[1] = a + (b - a) * static_cast<double>(i) / 16.0;
        acc.feed(probe_seq(static_cast<std::uint64_t>(r), 0,
                           static_cast<std::uint64_t>(i)),
                 pt, 2, probe_point(claim, kind, pt, 2, cfg));
      }
      h /= 8.0;
      trace.push_back(acc.worst.metric);
    }
  }
  return make_report(claim, kind, acc, threshold, std::move(trace));
}

inline AuditReport run_audit(ClaimId claim, AuditKind kind,
                             const AuditConfig& cfg) {
  cfg.validate();
  ClaimTraits tr = claim_traits(claim);
  switch (tr.layout) {
    case SampleLayout::kVariable:
      return run_variable_arity(claim, kind, cfg);
    case SampleLayout::kPerK:
      return run_per_k(claim, kind, cfg);
    case SampleLayout::kFixed: {
      AxisBox box = default_box(tr.dim, cfg);
      if (claim == ClaimId::EqYsin) box.hi[0] = 0.25;
      FixedDimRunner runner(claim, kind, cfg, std::move(box));
      if (claim == ClaimId::EqYsin)
        runner.add_extra_probe({0.25});  // the closed right endpoint
      return runner.run();
    }
  }
  throw std::logic_error("run_audit: unhandled layout");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public audit operations
// ---------------------------------------------------------------------------

inline AuditReport audit_validity(ClaimId claim, const AuditConfig& cfg) {
  if (!claim_traits(claim).has_validity)
    throw std::invalid_argument(std::string(to_string(claim)) +
                                " has no validity semantics");
  return detail::run_audit(claim, AuditKind::Validity, cfg);
}

inline AuditReport audit_optimality(ClaimId claim, const AuditConfig& cfg) {
  if (!claim_traits(claim).has_optimality)
    throw std::invalid_argument(std::string(to_string(claim)) +
                                " has no two-branch structure");
  return detail::run_audit(claim, AuditKind::Optimality, cfg);
}

inline AuditReport audit_table(ClaimId claim, const AuditConfig& cfg) {
  if (!claim_traits(claim).has_table)
    throw std::invalid_argument(std::string(to_string(claim)) +
                                " has no table semantics");
  return detail::run_audit(claim, AuditKind::Table, cfg);
}

/// Run every registered audit in claim order (validity, then optimality,
/// then table per claim). The aggregate verdict fails iff a validity audit
/// fails.
inline std::vector<AuditReport> audit_all(const AuditConfig& cfg) {
  std::vector<AuditReport> out;
  for (ClaimId c : kAllClaims) {
    ClaimTraits tr = claim_traits(c);
    auto guarded = [&](AuditKind kind) {
      try {
        out.push_back(detail::run_audit(c, kind, cfg));
      } catch (const std::exception&) {
        AuditReport rep;
        rep.claim = c;
        rep.kind = kind;
        rep.status = AuditStatus::Inconsistent;
        out.push_back(std::move(rep));
      }
    };
    if (tr.has_validity) guarded(AuditKind::Validity);
    if (tr.has_optimality) guarded(AuditKind::Optimality);
    if (tr.has_table) guarded(AuditKind::Table);
  }
  return out;
}

inline bool any_validity_failure(const std::vector<AuditReport>& reports) {
  for (const auto& r : reports)
    if (r.kind == AuditKind::Validity && r.status != AuditStatus::Pass)
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {

inline void write_point(std::ostream& os, const std::vector<double>& pt) {
  os << '[';
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) os << ", ";
    os << fmt17(pt[i]);
  }
  os << ']';
}

}  // namespace detail

inline void write_report(std::ostream& os, const AuditReport& r,
                         const char* indent = "") {
  std::string in(indent);
  os << in << "{\n";
  os << in << "  \"claim\": \"" << to_string(r.claim) << "\",\n";
  os << in << "  \"kind\": \"" << to_string(r.kind) << "\",\n";
  os << in << "  \"samples\": " << r.samples << ",\n";
  os << in << "  \"status\": \"" << to_string(r.status) << "\",\n";
  os << in << "  \"worst_point\": ";
  detail::write_point(os, r.worst_point);
  os << ",\n";
  os << in << "  \"lhs\": " << detail::fmt17(r.lhs) << ",\n";
  os << in << "  \"rhs\": " << detail::fmt17(r.rhs) << ",\n";
  os << in << "  \"gap\": " << detail::fmt17(r.gap) << ",\n";
  os << in << "  \"counterexamples\": [";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    const auto& ce = r.counterexamples[i];
    os << (i ? "," : "") << "\n" << in << "    {\"point\": ";
    detail::write_point(os, ce.point);
    os << ", \"lhs\": " << detail::fmt17(ce.lhs)
       << ", \"rhs\": " << detail::fmt17(ce.rhs)
       << ", \"gap\": " << detail::fmt17(ce.gap) << "}";
  }
  if (!r.counterexamples.empty()) os << "\n" << in << "  ";
  os << "]\n";
  os << in << "}";
}

inline void write_reports(std::ostream& os,
                          const std::vector<AuditReport>& reports) {
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    write_report(os, reports[i], "  ");
    if (i + 1 < reports.size()) os << ",";
    os << "\n";
  }
  os << "]\n";
}

}  // namespace sinebound

#pragma once

// Sharpness comparisons between competing bounds. Verdicts come from the
// exact sign criteria in (sigma, tau, lambda) arithmetic, never from
// floating comparison of the bound values themselves: the criteria are
// polynomials in the inputs and pin the equality manifolds exactly.

#include <optional>
#include <stdexcept>

#include "sinebound/bounds.hpp"

namespace sinebound {

enum class Relation { FirstGE, SecondGE, Equal };
enum class Sharper { First, Second, Either };

/// Witnesses of a sine comparison: two numerators over a common weight.
/// sin(pi*sigma/lam) >= sin(pi*tau/lam) iff diff*defect <= 0.
struct ComparisonData {
  double sigma = 0.0;
  double tau = 0.0;
  double lam = 0.0;
  double diff = 0.0;    // sigma - tau
  double defect = 0.0;  // sigma + tau - lam
  double criterion = 0.0;
};

/// Criterion of the cyclic-family comparison: delta_n and 2*l_n - 1.
struct StCriterion {
  double delta_n = 0.0;
  double two_lam_n_minus_1 = 0.0;
};

/// Criterion of the paired-family comparison: Delta_n and Sigma_n.
struct PqCriterion {
  double delta_cap = 0.0;  // sum l_odd (2 l_even - 1)
  double sigma_cap = 0.0;  // sum (1 - l_even)(2 l_odd - 1)
};

struct Verdict {
  Relation relation = Relation::Equal;
  Sharper sharper = Sharper::Either;
  ComparisonData cmp;
  std::optional<StCriterion> st;
  std::optional<PqCriterion> pq;
};

/// Compare sin(pi*sigma/lam) against sin(pi*tau/lam) for sigma, tau in
/// (0, lam). Equal requires the exact algebraic condition sigma == tau or
/// sigma + tau == lam on the given inputs. The sharper side is the one with
/// the smaller sine.
inline Verdict sin_compare(double sigma, double tau, double lam) {
  if (!(sigma > 0.0 && sigma < lam))
    detail::domain_fail("sin_compare", "sigma must lie in (0, lam)", sigma);
  if (!(tau > 0.0 && tau < lam))
    detail::domain_fail("sin_compare", "tau must lie in (0, lam)", tau);
  Verdict v;
  v.cmp.sigma = sigma;
  v.cmp.tau = tau;
  v.cmp.lam = lam;
  v.cmp.diff = sigma - tau;
  v.cmp.defect = sigma + tau - lam;
  v.cmp.criterion = v.cmp.diff * v.cmp.defect;
  if (v.cmp.diff == 0.0 || v.cmp.defect == 0.0) {
    v.relation = Relation::Equal;
    v.sharper = Sharper::Either;
  } else if (v.cmp.criterion < 0.0) {
    v.relation = Relation::FirstGE;
    v.sharper = Sharper::Second;
  } else {
    v.relation = Relation::SecondGE;
    v.sharper = Sharper::First;
  }
  return v;
}

/// Cyclic-family verdict: S >= T iff delta_n (2 l_n - 1) <= 0, with equality
/// exactly when delta_n = 0 or l_n = 1/2. First = S, second = T.
inline Verdict compare_st(const ParamVector& p) {
  if (p.size() < 2)
    throw std::invalid_argument("compare_st: needs arity >= 2");
  std::size_t n = p.size();
  double delta = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    delta += p[i + 1] * (1.0 - 2.0 * p[i]);
  double factor = 2.0 * p[n - 1] - 1.0;

  SineBound s = eval_bound(BoundForm::Sn, p);
  SineBound t = eval_bound(BoundForm::Tn, p);

  Verdict v;
  v.st = StCriterion{delta, factor};
  v.cmp.sigma = s.sigma;
  v.cmp.tau = t.sigma;
  v.cmp.lam = s.lam;
  v.cmp.diff = s.sigma - t.sigma;
  v.cmp.defect = s.sigma + t.sigma - s.lam;
  v.cmp.criterion = v.cmp.diff * v.cmp.defect;
  if (delta == 0.0 || factor == 0.0) {
    v.relation = Relation::Equal;
    v.sharper = Sharper::Either;
  } else if (delta * factor < 0.0) {
    v.relation = Relation::FirstGE;
    v.sharper = Sharper::Second;
  } else {
    v.relation = Relation::SecondGE;
    v.sharper = Sharper::First;
  }
  return v;
}

/// Paired-family verdict: P >= Q iff Delta_n Sigma_n <= 0, with equality
/// exactly when Delta_n = 0 or Sigma_n = 0. First = P, second = Q.
inline Verdict compare_pq(const ParamVector& p) {
  if (p.size() < 2 || p.size() % 2 != 0)
    throw std::invalid_argument("compare_pq: needs an even arity >= 2");
  double dcap = 0.0, scap = 0.0;
  for (std::size_t i = 0; i < p.size(); i += 2) {
    dcap += p[i] * (2.0 * p[i + 1] - 1.0);
    scap += (1.0 - p[i + 1]) * (2.0 * p[i] - 1.0);
  }

  SineBound pb = eval_bound(BoundForm::P2n, p);
  SineBound qb = eval_bound(BoundForm::Q2n, p);

  Verdict v;
  v.pq = PqCriterion{dcap, scap};
  v.cmp.sigma = pb.sigma;
  v.cmp.tau = qb.sigma;
  v.cmp.lam = pb.lam;
  v.cmp.diff = pb.sigma - qb.sigma;
  v.cmp.defect = pb.sigma + qb.sigma - pb.lam;
  v.cmp.criterion = v.cmp.diff * v.cmp.defect;
  if (dcap == 0.0 || scap == 0.0) {
    v.relation = Relation::Equal;
    v.sharper = Sharper::Either;
  } else if (dcap * scap < 0.0) {
    v.relation = Relation::FirstGE;
    v.sharper = Sharper::Second;
  } else {
    v.relation = Relation::SecondGE;
    v.sharper = Sharper::First;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Printed branch assignments
// ---------------------------------------------------------------------------

/// The two-branch claims whose printed region predicate selects a bound.
enum class RegionClaim { C46, C49, C410, C411, C412 };

/// Which printed branch a point falls in. Branch1 always refers to the
/// claim's first-listed bound (A for C46, S for the others). This encodes
/// the predicates verbatim as printed; whether the selected branch really is
/// the sharper one is the auditor's question, not this function's.
enum class Region { Branch1, Branch2, Boundary };

inline Region stated_region(RegionClaim claim, const std::vector<double>& pt) {
  auto need = [&](std::size_t n) {
    if (pt.size() != n)
      throw std::invalid_argument("stated_region: wrong point dimension");
    for (double v : pt)
      if (!(v > 0.0 && v < 1.0))
        detail::domain_fail("stated_region", "coordinate must lie in (0,1)",
                            v);
  };
  switch (claim) {
    case RegionClaim::C46: {
      // Printed table: A < B when (x-1/2)(y-1/2) < 0, A > B when > 0.
      need(2);
      double prod = (pt[0] - 0.5) * (pt[1] - 0.5);
      if (prod < 0.0) return Region::Branch1;   // table row "A < B"
      if (prod > 0.0) return Region::Branch2;   // table row "A > B"
      return Region::Boundary;
    }
    case RegionClaim::C49: {
      // Five-row case table driven by delta = y(1-2x) + z(1-2y) and z-1/2.
      need(3);
      double x = pt[0], y = pt[1], z = pt[2];
      double delta = y * (1.0 - 2.0 * x) + z * (1.0 - 2.0 * y);
      if (delta == 0.0 || z == 0.5) return Region::Boundary;
      bool s_below = (z < 0.5) ? (delta < 0.0) : (delta > 0.0);  // rows S < T
      return s_below ? Region::Branch1 : Region::Branch2;
    }
    case RegionClaim::C410: {
      need(2);
      double prod = (pt[0] - 0.5) * (pt[1] - 0.5);
      if (prod > 0.0) return Region::Branch1;  // printed: S-branch applies
      if (prod < 0.0) return Region::Branch2;
      return Region::Boundary;
    }
    case RegionClaim::C411: {
      need(2);
      double prod = (pt[0] + pt[1] - 1.0) * (2.0 * pt[1] - 1.0);
      if (prod > 0.0) return Region::Branch1;
      if (prod < 0.0) return Region::Branch2;
      return Region::Boundary;
    }
    case RegionClaim::C412: {
      need(2);
      double x = pt[0], y = pt[1];
      double prod = (4.0 * x * y - x - y) * (2.0 * x - 1.0);
      if (prod > 0.0) return Region::Branch1;
      if (prod < 0.0) return Region::Branch2;
      return Region::Boundary;
    }
  }
  throw std::logic_error("stated_region: unhandled claim");
}

}  // namespace sinebound

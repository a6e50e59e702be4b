#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "sinebound/bounds.hpp"
#include "support/oracles.hpp"

using namespace sinebound;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("lhs_general examples") {
  // symmetric pair collapses to one factor
  WeightedAngles sym({0.25, 0.75}, {0.5, 0.5});
  CHECK_THAT(lhs_general(sym).log_value,
             WithinAbs(std::log(std::sin(kPi / 4.0)), 1e-15));

  WeightedAngles one({0.5}, {1.0});
  CHECK(lhs_general(one).log_value == 0.0);

  WeightedAngles wa({0.2, 0.3}, {0.3, 0.2});
  double direct = 0.3 * std::log(std::sin(0.2 * kPi)) +
                  0.2 * std::log(std::sin(0.3 * kPi));
  CHECK_THAT(lhs_general(wa).log_value, WithinAbs(direct, 1e-14));
  CHECK_THAT(lhs_general(wa).log_value, WithinAbs(-0.20183, 5e-6));
}

TEST_CASE("rhs_general examples") {
  WeightedAngles sym({0.25, 0.75}, {0.5, 0.5});
  SineBound b = rhs_general(sym);
  CHECK_THAT(b.arg, WithinAbs(0.5, 1e-15));
  CHECK(b.value == 1.0);

  // n = 1 collapses to equality with the left side
  WeightedAngles one({0.37}, {1.0});
  CHECK(rhs_general(one).log_value == lhs_general(one).log_value);

  WeightedAngles wa({0.2, 0.3}, {0.3, 0.2});
  SineBound g = rhs_general(wa);
  CHECK_THAT(g.sigma, WithinAbs(0.12, 1e-15));
  CHECK_THAT(g.lam, WithinAbs(0.5, 1e-15));
  CHECK_THAT(g.value, WithinAbs(oracle::sine_power(0.12, 0.5), 1e-13));
  CHECK_THAT(g.value, WithinAbs(0.82737, 5e-6));
  // same bound as the cyclic T form on the same numbers
  SineBound t = eval_bound(BoundForm::Tn, ParamVector({0.2, 0.3}));
  CHECK_THAT(t.value, WithinRel(g.value, 1e-14));
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(WeightedAngles({0.0, 0.5}, {0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(WeightedAngles({1.0}, {0.5}), std::domain_error);
  CHECK_THROWS_AS(WeightedAngles({0.5}, {0.0}), std::domain_error);
  CHECK_THROWS_AS(WeightedAngles({0.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ParamVector({0.2, 1.0}), std::domain_error);
  CHECK_THROWS_AS(ParamVector({}), std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(BoundForm::S3, ParamVector({0.2, 0.3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(BoundForm::P2n, ParamVector({0.2, 0.3, 0.4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(BoundForm::KFam_A, 2, 0.6), std::domain_error);
  CHECK_THROWS_AS(eval_bound(BoundForm::KFam_A, 0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("gamma lemma sides") {
  // equal angles and weights force equality
  WeightedAngles eq({0.9, 0.9, 0.9}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  auto [l0, r0] = gamma_lemma_sides(eq);
  CHECK_THAT(l0, WithinAbs(r0, 1e-13));

  WeightedAngles wa({0.25, 0.75}, {0.5, 0.5});
  auto [l1, r1] = gamma_lemma_sides(wa);
  CHECK_THAT(l1, WithinAbs(0.5723649429, 1e-9));  // ln Gamma(1/2)
  // reflection: Gamma(1/4) Gamma(3/4) = pi / sin(pi/4) = pi sqrt(2)
  CHECK_THAT(r1, WithinAbs(0.5 * std::log(kPi * std::sqrt(2.0)), 1e-13));
  CHECK(l1 <= r1 + 1e-10);

  CHECK_THROWS_AS(gamma_lemma_sides(WeightedAngles({0.5}, {1.0})),
                  std::domain_error);
}

TEST_CASE("gamma theorem sides") {
  WeightedAngles wa({0.25, 0.75}, {0.5, 0.5});
  auto [l, r] = gamma_theorem_sides(wa);
  CHECK_THAT(l, WithinAbs(kLnPi, 1e-13));  // ln(Gamma(1/2)^2)
  CHECK_THAT(r, WithinAbs(std::log(kPi * std::sqrt(2.0)), 1e-13));

  WeightedAngles eq({0.5, 0.5}, {0.5, 0.5});
  auto [l2, r2] = gamma_theorem_sides(eq);
  CHECK_THAT(l2, WithinAbs(kLnPi, 1e-13));
  CHECK_THAT(r2, WithinAbs(kLnPi, 1e-13));

  WeightedAngles mixed({0.2, 0.3}, {0.25, 0.75});
  auto [l3, r3] = gamma_theorem_sides(mixed);
  CHECK(l3 <= r3 + 1e-10);
}

TEST_CASE("eval_bound frozen examples") {
  ParamVector p23({0.2, 0.3});
  SineBound s = eval_bound(BoundForm::Sn, p23);
  CHECK_THAT(s.sigma, WithinAbs(0.3, 1e-15));
  CHECK_THAT(s.lam, WithinAbs(0.5, 1e-15));
  CHECK_THAT(s.value, WithinAbs(oracle::bound_S({0.2, 0.3}), 1e-13));
  CHECK_THAT(s.value, WithinAbs(0.975221265301, 1e-11));

  SineBound t = eval_bound(BoundForm::Tn, p23);
  CHECK_THAT(t.sigma, WithinAbs(0.12, 1e-15));
  CHECK_THAT(t.value, WithinAbs(oracle::bound_T({0.2, 0.3}), 1e-13));
  CHECK_THAT(t.value, WithinAbs(0.827373619309, 1e-11));

  SineBound pp = eval_bound(BoundForm::P2n, p23);
  CHECK_THAT(pp.lam, WithinAbs(0.9, 1e-15));
  CHECK_THAT(pp.sigma, WithinAbs(0.2, 1e-15));
  CHECK_THAT(pp.value, WithinAbs(oracle::bound_P({0.2, 0.3}), 1e-13));
  CHECK_THAT(pp.value, WithinAbs(0.671832094701, 1e-11));

  SineBound q = eval_bound(BoundForm::Q2n, p23);
  CHECK_THAT(q.arg, WithinAbs(0.28 / 0.9, 1e-15));
  CHECK_THAT(q.value, WithinAbs(oracle::bound_Q({0.2, 0.3}), 1e-13));
  CHECK_THAT(q.value, WithinAbs(0.844727809952, 1e-11));

  ParamVector pq({0.25, 0.25});
  CHECK_THAT(eval_bound(BoundForm::A2, pq).value,
             WithinAbs(std::sin(kPi / 4.0), 1e-13));
  CHECK_THAT(eval_bound(BoundForm::B2, pq).value,
             WithinAbs(std::sin(3.0 * kPi / 8.0), 1e-13));

  ParamVector p3({0.2, 0.3, 0.4});
  CHECK_THAT(eval_bound(BoundForm::S3, p3).value,
             WithinAbs(oracle::bound_S3(0.2, 0.3, 0.4), 1e-13));
  CHECK_THAT(eval_bound(BoundForm::S3, p3).value,
             WithinAbs(0.878572425429, 1e-11));
  CHECK_THAT(eval_bound(BoundForm::T3, p3).value,
             WithinAbs(oracle::bound_T3(0.2, 0.3, 0.4), 1e-13));
  CHECK_THAT(eval_bound(BoundForm::T3, p3).value,
             WithinAbs(0.807010024983, 1e-11));

  CHECK_THAT(eval_bound(BoundForm::Diag, ParamVector({0.25})).value,
             WithinAbs(std::sin(3.0 * kPi / 8.0), 1e-13));

  // k-family constant branch at k = 2 is sin^3(pi/3) = 3 sqrt(3)/8
  SineBound ka = eval_bound(BoundForm::KFam_A, 2, 0.1);
  CHECK_THAT(ka.value, WithinAbs(3.0 * std::sqrt(3.0) / 8.0, 1e-13));
  CHECK_THAT(ka.value, WithinAbs(0.6495190528, 1e-9));
}

TEST_CASE("C37 forms match the displayed sums") {
  oracle::Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    std::size_t n = 2 + it % 5;
    auto l = rng.vec(n, 1e-3, 1.0 - 1e-3);
    ParamVector p(l);
    CHECK_THAT(eval_bound(BoundForm::C37a, p).value,
               WithinRel(oracle::bound_C37a(l), 1e-12));
    CHECK_THAT(eval_bound(BoundForm::C37b, p).value,
               WithinRel(oracle::bound_C37b(l), 1e-12));
  }
}

TEST_CASE("lhs_family examples") {
  ParamVector p23({0.2, 0.3});
  double cyc = lhs_family(LhsFamily::Cyclic, p23).log_value;
  CHECK_THAT(cyc, WithinAbs(0.3 * std::log(std::sin(0.2 * kPi)) +
                                0.2 * std::log(std::sin(0.3 * kPi)),
                            1e-14));
  CHECK_THAT(std::exp(cyc), WithinAbs(0.817254149829, 1e-11));

  double paired = lhs_family(LhsFamily::Paired, p23).log_value;
  CHECK_THAT(paired, WithinAbs(0.7 * std::log(std::sin(0.2 * kPi)) +
                                   0.2 * std::log(std::sin(0.3 * kPi)),
                               1e-14));
  CHECK_THAT(std::exp(paired), WithinAbs(0.660761314721, 1e-11));

  CHECK(lhs_family(LhsFamily::Cyclic, ParamVector({0.5, 0.5})).log_value ==
        0.0);

  CHECK_THROWS_AS(lhs_family(LhsFamily::Cyclic, ParamVector({0.5})),
                  std::invalid_argument);
  CHECK_THROWS_AS(lhs_family(LhsFamily::Paired, ParamVector({0.5, 0.5, 0.5})),
                  std::invalid_argument);
}

TEST_CASE("validity: random sweeps for every family") {
  // the load-bearing property; the full 1e5-draw sweep runs in acceptance
  oracle::Rng rng(1234);
  const int draws = 20000;
  const double slack = 1e-10;
  for (int it = 0; it < draws; ++it) {
    // general form
    std::size_t n = 1 + it % 6;
    auto a = rng.vec(n, 1e-6, 1.0 - 1e-6);
    auto w = rng.vec(n, 1e-6, 1.0 - 1e-6);
    WeightedAngles wa(a, w);
    CHECK(lhs_general(wa).log_value <=
          rhs_general(wa).log_value + slack);

    auto [gl, gr] = gamma_lemma_sides(wa);
    CHECK(gl <= gr + slack);
    auto [tl, tr] = gamma_theorem_sides(wa);
    CHECK(tl <= tr + slack);

    // paired family
    std::size_t k = 1 + it % 3;
    ParamVector pp(rng.vec(2 * k, 1e-6, 1.0 - 1e-6));
    double plhs = lhs_family(LhsFamily::Paired, pp).log_value;
    CHECK(plhs <= eval_bound(BoundForm::P2n, pp).log_value + slack);
    CHECK(plhs <= eval_bound(BoundForm::Q2n, pp).log_value + slack);

    // cyclic family
    std::size_t m = 2 + it % 5;
    ParamVector pc(rng.vec(m, 1e-6, 1.0 - 1e-6));
    double clhs = lhs_family(LhsFamily::Cyclic, pc).log_value;
    CHECK(clhs <= eval_bound(BoundForm::Sn, pc).log_value + slack);
    CHECK(clhs <= eval_bound(BoundForm::Tn, pc).log_value + slack);

    // doubled-tail family
    double c37lhs = lhs_family(LhsFamily::C37, pc).log_value;
    CHECK(c37lhs <= eval_bound(BoundForm::C37a, pc).log_value + slack);
    CHECK(c37lhs <= eval_bound(BoundForm::C37b, pc).log_value + slack);

    // two- and three-angle corollaries, both candidate bounds each
    double x = rng.uniform(1e-6, 1.0 - 1e-6);
    double y = rng.uniform(1e-6, 1.0 - 1e-6);
    double z = rng.uniform(1e-6, 1.0 - 1e-6);
    double lhs44 = y * log_sin_pi(x) + (1.0 - x) * log_sin_pi(y);
    ParamVector pxy({x, y});
    CHECK(lhs44 <= eval_bound(BoundForm::A2, pxy).log_value + slack);
    CHECK(lhs44 <= eval_bound(BoundForm::B2, pxy).log_value + slack);

    double lhs48 = y * log_sin_pi(x) + z * log_sin_pi(y) + x * log_sin_pi(z);
    ParamVector pxyz({x, y, z});
    CHECK(lhs48 <= eval_bound(BoundForm::S3, pxyz).log_value + slack);
    CHECK(lhs48 <= eval_bound(BoundForm::T3, pxyz).log_value + slack);

    // the diagonal corollaries are instances of the cyclic family, so both
    // branches are unconditionally valid
    double lhs410 = (x + z) * log_sin_pi(x) + x * log_sin_pi(z);
    ParamVector pxz({x, z});
    CHECK(lhs410 <= eval_bound(BoundForm::S_yx, pxz).log_value + slack);
    CHECK(lhs410 <= eval_bound(BoundForm::T_yx, pxz).log_value + slack);
    double lhs411 = y * log_sin_pi(x) + (x + y) * log_sin_pi(y);
    CHECK(lhs411 <= eval_bound(BoundForm::S_zy, pxy).log_value + slack);
    CHECK(lhs411 <= eval_bound(BoundForm::T_zy, pxy).log_value + slack);
    double lhs412 = (x + y) * log_sin_pi(x) + x * log_sin_pi(y);
    CHECK(lhs412 <= eval_bound(BoundForm::S_zx, pxy).log_value + slack);
    CHECK(lhs412 <= eval_bound(BoundForm::T_zx, pxy).log_value + slack);
  }
}

TEST_CASE("argument fraction stays inside (0,1) for every form") {
  oracle::Rng rng(99);
  for (int it = 0; it < 5000; ++it) {
    double x = rng.uniform(1e-9, 1.0 - 1e-9);
    double y = rng.uniform(1e-9, 1.0 - 1e-9);
    double z = rng.uniform(1e-9, 1.0 - 1e-9);
    ParamVector p2({x, y}), p3({x, y, z});
    for (BoundForm f : {BoundForm::A2, BoundForm::B2, BoundForm::S_yx,
                        BoundForm::T_yx, BoundForm::S_zy, BoundForm::T_zy,
                        BoundForm::S_zx, BoundForm::T_zx, BoundForm::P2n,
                        BoundForm::Q2n, BoundForm::Sn, BoundForm::Tn,
                        BoundForm::C37a, BoundForm::C37b}) {
      SineBound b = eval_bound(f, p2);
      CHECK(b.arg > 0.0);
      CHECK(b.arg < 1.0);
      CHECK(b.log_value <= 0.0);
    }
    for (BoundForm f : {BoundForm::S3, BoundForm::T3}) {
      SineBound b = eval_bound(f, p3);
      CHECK(b.arg > 0.0);
      CHECK(b.arg < 1.0);
    }
    for (BoundForm f :
         {BoundForm::Diag, BoundForm::OneD_a, BoundForm::OneD_b,
          BoundForm::OneD_c}) {
      SineBound b = eval_bound(f, ParamVector({x}));
      CHECK(b.arg > 0.0);
      CHECK(b.arg < 1.0);
    }
  }
}

TEST_CASE("substitution coherence with the three-angle forms") {
  // Setting y=x (resp. z=y, z=x) in the three-angle forms must reproduce the
  // specialized two-angle forms. The sigma/lambda polynomials agree to a few
  // ulps; the derived log values to 1e-12 of their scale. This is the guard
  // against transcription slips in the numerators.
  oracle::Rng rng(5);
  auto check_pair = [](const SineBound& a, const SineBound& b) {
    CHECK_THAT(a.sigma, WithinRel(b.sigma, 1e-14));
    CHECK_THAT(a.lam, WithinRel(b.lam, 1e-14));
    CHECK(std::abs(a.log_value - b.log_value) <=
          1e-12 * (1.0 + std::abs(b.log_value)));
  };
  for (int it = 0; it < 5000; ++it) {
    double x = rng.uniform(1e-6, 1.0 - 1e-6);
    double y = rng.uniform(1e-6, 1.0 - 1e-6);
    ParamVector p2({x, y});
    check_pair(eval_bound(BoundForm::S_yx, p2),
               eval_bound(BoundForm::S3, ParamVector({x, x, y})));
    check_pair(eval_bound(BoundForm::T_yx, p2),
               eval_bound(BoundForm::T3, ParamVector({x, x, y})));
    check_pair(eval_bound(BoundForm::S_zy, p2),
               eval_bound(BoundForm::S3, ParamVector({x, y, y})));
    check_pair(eval_bound(BoundForm::T_zy, p2),
               eval_bound(BoundForm::T3, ParamVector({x, y, y})));
    check_pair(eval_bound(BoundForm::S_zx, p2),
               eval_bound(BoundForm::S3, ParamVector({x, y, x})));
    check_pair(eval_bound(BoundForm::T_zx, p2),
               eval_bound(BoundForm::T3, ParamVector({x, y, x})));
  }
}

TEST_CASE("two-angle forms coincide with the paired family") {
  // A(x,y) is the paired P bound at (y,x) and B(x,y) the Q bound there
  oracle::Rng rng(6);
  for (int it = 0; it < 2000; ++it) {
    double x = rng.uniform(1e-6, 1.0 - 1e-6);
    double y = rng.uniform(1e-6, 1.0 - 1e-6);
    ParamVector pxy({x, y}), pyx({y, x});
    CHECK(eval_bound(BoundForm::A2, pxy).log_value ==
          eval_bound(BoundForm::P2n, pyx).log_value);
    CHECK(eval_bound(BoundForm::B2, pxy).log_value ==
          eval_bound(BoundForm::Q2n, pyx).log_value);
  }
}

TEST_CASE("k-family scale coherence") {
  // The k-family bounds are the two-angle bounds along x = 1-ky raised to
  // 1/y. Dyadic y keeps x = 1-ky exact, so the two evaluation routes see
  // identical argument fractions and a 1e-12 relative check on the values
  // (absolute on the logs) is meaningful.
  for (int k = 1; k <= 5; ++k) {
    for (int j = 1; j * k < 4096; j += 3) {
      double y = j / 4096.0;
      double x = 1.0 - k * y;
      ParamVector p({x, y});
      double la = eval_bound(BoundForm::A2, p).log_value / y;
      double lb = eval_bound(BoundForm::B2, p).log_value / y;
      CHECK(std::abs(eval_bound(BoundForm::KFam_A, k, y).log_value - la) <=
            1e-12);
      CHECK(std::abs(eval_bound(BoundForm::KFam_B, k, y).log_value - lb) <=
            1e-12);
    }
  }
}

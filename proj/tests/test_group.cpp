#include <vector>

#include "cyclab/ordered_group.hpp"
#include "doctest.h"

using namespace cyclab;

namespace {

Rational q(long long p, long long d = 1) { return Rational(p) / Rational(d); }

/* Slope 3/2 on [0,1/2], slope 1/2 on [1/2,1]; lies between identity and z. */
PLMap band_map() {
  return PLMap::from_points({{q(0), q(0)}, {q(1, 2), q(3, 4)}});
}

}  // namespace

TEST_CASE("piecewise-linear evaluation and periodicity") {
  const PLMap f = band_map();
  CHECK(f(q(0)) == q(0));
  CHECK(f(q(1, 4)) == q(3, 8));
  CHECK(f(q(1, 2)) == q(3, 4));
  CHECK(f(q(3, 4)) == q(7, 8));
  CHECK(f(q(5, 4)) == q(11, 8));
  CHECK(f(q(-1, 2)) == q(-1, 4));
  Sampler rng(7);
  for (int s = 0; s < 20; ++s) {
    const Rational x = Rational(rng.uniform(-3, 3)) + rng.unit_rational(12);
    CHECK(f(x + 1) == f(x) + 1);
  }
}

TEST_CASE("piecewise-linear canonical form") {
  // Collinear interior samples are dropped.
  const PLMap pruned =
      PLMap::from_points({{q(0), q(0)}, {q(1, 4), q(3, 8)}, {q(1, 2), q(3, 4)}});
  CHECK(pruned == band_map());
  CHECK(PLMap::from_points({{q(0), q(0)}, {q(1, 3), q(1, 3)}}) == PLMap::identity());
  // Samples reduce into the fundamental domain; the anchor is interpolated.
  const PLMap shifted = PLMap::from_points({{q(3, 2), q(7, 4)}, {q(1), q(1)}});
  CHECK(shifted == PLMap::from_points({{q(0), q(0)}, {q(1, 2), q(3, 4)}}));
  CHECK_THROWS_AS(PLMap::from_points({}), InvalidConstructionError);
  CHECK_THROWS_AS(PLMap::from_points({{q(0), q(0)}, {q(0), q(1, 2)}}),
                  InvalidConstructionError);
  CHECK_THROWS_AS(PLMap::from_points({{q(0), q(0)}, {q(1, 2), q(-1, 4)}}),
                  InvalidConstructionError);
  CHECK_THROWS_AS(PLMap::from_points({{q(0), q(0)}, {q(1, 2), q(3, 2)}}),
                  InvalidConstructionError);
}

TEST_CASE("piecewise-linear composition and inverse") {
  const PLMap f = band_map();
  const PLMap t = PLMap::translation(q(1, 2));
  CHECK(pl_compose(PLMap::translation(q(1, 3)), PLMap::translation(q(1, 2))) ==
        PLMap::translation(q(5, 6)));
  CHECK(pl_compose(f, t) == PLMap::from_points({{q(0), q(3, 4)}, {q(1, 2), q(1)}}));
  CHECK(pl_compose(t, f) ==
        PLMap::from_points({{q(0), q(1, 2)}, {q(1, 2), q(5, 4)}}));
  CHECK(pl_inverse(f) == PLMap::from_points({{q(0), q(0)}, {q(3, 4), q(1, 2)}}));
  CHECK(pl_inverse(f)(q(3, 8)) == q(1, 4));
  CHECK(pl_inverse(PLMap::translation(q(1, 2))) == PLMap::translation(q(-1, 2)));

  Sampler rng(8);
  PLGroup G;
  for (int s = 0; s < 15; ++s) {
    const PLMap a = G.sample(rng);
    CHECK(pl_compose(a, pl_inverse(a)) == PLMap::identity());
    CHECK(pl_compose(pl_inverse(a), a) == PLMap::identity());
  }
}

TEST_CASE("the group is not commutative") {
  const PLMap f = band_map();
  const PLMap t = PLMap::translation(q(1, 2));
  CHECK(pl_compare(pl_compose(f, t), pl_compose(t, f)) != 0);
  CHECK(pl_compare(pl_compose(f, t), pl_compose(t, f)) == 1);
}

TEST_CASE("order comparison on the dense scan") {
  const PLMap f = band_map();
  PLGroup G;
  CHECK(pl_compare(f, f) == 0);
  CHECK(pl_compare(PLMap::translation(q(1, 3)), PLMap::translation(q(1, 2))) == -1);
  CHECK(pl_compare(G.identity(), f) == -1);
  CHECK(pl_compare(f, G.z()) == -1);
}

TEST_CASE("powers and canonical heights") {
  IntegerGroup Z3{3};
  CHECK(group_power(Z3, 2LL, 5) == 10);
  CHECK(group_power(Z3, 2LL, -3) == -6);
  {
    const auto ch = gprime_canonical(Z3, 7LL);
    CHECK(ch.height == 2);
    CHECK(ch.reduced == 1);
  }
  {
    const auto ch = gprime_canonical(Z3, -1LL);
    CHECK(ch.height == -1);
    CHECK(ch.reduced == 2);
  }
  RationalAddGroup Q;
  {
    const auto ch = gprime_canonical(Q, q(5, 2));
    CHECK(ch.height == 2);
    CHECK(ch.reduced == q(1, 2));
  }
  PLGroup G;
  CHECK(group_power(G, G.z(), 3) == PLMap::translation(q(3)));
  {
    const auto ch = gprime_canonical(G, PLMap::translation(q(7, 3)));
    CHECK(ch.height == 2);
    CHECK(G.compare(ch.reduced, PLMap::translation(q(1, 3))) == 0);
  }
  {
    const auto ch = gprime_canonical(G, pl_compose(G.z(), band_map()));
    CHECK(ch.height == 1);
    CHECK(G.compare(ch.reduced, band_map()) == 0);
  }
}

TEST_CASE("ordered group law audits") {
  {
    Sampler rng(51);
    const auto rep = ordered_group_audit(IntegerGroup{3}, 60, rng);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
  {
    Sampler rng(52);
    const auto rep = ordered_group_audit(RationalAddGroup{}, 60, rng);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
  {
    Sampler rng(53);
    const auto rep = ordered_group_audit(PLGroup{}, 15, rng);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
}

TEST_CASE("factor tuple validation and round trip") {
  IntegerGroup Z3{3};
  CHECK_NOTHROW(make_ftuple(Z3, {1LL, 1LL, 1LL}));
  CHECK_THROWS_AS(make_ftuple(Z3, std::vector<long long>{2, 2}),
                  InvalidConstructionError);
  CHECK_THROWS_AS(make_ftuple(Z3, std::vector<long long>{4, -1}),
                  InvalidConstructionError);
  CHECK_THROWS_AS(make_ftuple(Z3, std::vector<long long>{}),
                  InvalidConstructionError);

  Sampler rng(61);
  const GroupInterval<PLGroup> I{PLGroup{}};
  const auto sampler = default_seq_sampler<GroupInterval<PLGroup>>(I);
  for (int n = 0; n <= 3; ++n) {
    const auto beta = sampler(n, rng);
    const auto t = pi_map(beta);
    CHECK(t.rank() == n);
    CHECK(seq_equal(pi_inverse(t), beta));
    CHECK(ftuple_equal(pi_map(pi_inverse(t)), t));
  }
}

TEST_CASE("factor tuples transport the generator actions") {
  Sampler rng(62);
  PLGroup G;
  const GroupInterval<PLGroup> I{G};
  const auto sampler = default_seq_sampler<GroupInterval<PLGroup>>(I);
  const auto cs = make_cyclic_structure(G);
  for (int n = 0; n <= 3; ++n) {
    for (int s = 0; s < 3; ++s) {
      const auto beta = sampler(n, rng);
      const auto t = pi_map(beta);
      for (int j = 0; j + 1 <= n; ++j)
        CHECK(ftuple_equal(pi_map(seq_act_generator<GroupInterval<PLGroup>>(
                               GeneratorKind::Sigma, j, beta)),
                           ftuple_sigma(j, t)));
      for (int j = 0; j <= n + 1; ++j)
        CHECK(ftuple_equal(pi_map(seq_act_generator<GroupInterval<PLGroup>>(
                               GeneratorKind::Delta, j, beta)),
                           ftuple_delta(j, t)));
      CHECK(ftuple_equal(pi_map(cs.tau(beta)), ftuple_tau(t)));
    }
  }
}

TEST_CASE("group rotation structure extends the standard ones") {
  Sampler rng(63);
  {
    IntegerGroup Z4{4};
    FiniteInterval F{3};
    const auto gcs = make_cyclic_structure(Z4);
    const auto scs = standard_cyclic_structure(F);
    const auto sampler = default_seq_sampler<FiniteInterval>(F);
    for (int n = 0; n <= 4; ++n) {
      for (int s = 0; s < 10; ++s) {
        const auto beta = sampler(n, rng);
        const auto gbeta = make_seq(GroupInterval<IntegerGroup>{Z4}, beta.values);
        CHECK(gcs.tau(gbeta).values == scs.tau(beta).values);
      }
    }
  }
  {
    const auto gcs = make_cyclic_structure(RationalAddGroup{});
    const auto scs = standard_cyclic_structure(RationalUnit{});
    const auto sampler = default_seq_sampler<RationalUnit>(RationalUnit{});
    for (int n = 0; n <= 4; ++n) {
      const auto beta = sampler(n, rng);
      const auto gbeta = make_seq(GroupInterval<RationalAddGroup>{}, beta.values);
      CHECK(gcs.tau(gbeta).values == scs.tau(beta).values);
    }
  }
}

TEST_CASE("group rotation structures pass the cyclic relation audit") {
  {
    Sampler rng(64);
    const auto rep = cyclic_audit(make_cyclic_structure(IntegerGroup{5}), 4, 20, rng);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
  {
    Sampler rng(65);
    const auto rep = cyclic_audit(make_cyclic_structure(RationalAddGroup{}), 4, 20, rng);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
  {
    Sampler rng(66);
    const auto rep = cyclic_audit(make_cyclic_structure(PLGroup{}), 3, 4, rng);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
}

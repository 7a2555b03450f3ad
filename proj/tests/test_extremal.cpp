#include <doctest.h>

#include <cmath>

#include "posmap/extremal.hpp"
#include "test_util.hpp"

using namespace posmap;
using namespace posmap::testutil;

TEST_CASE("classify: transpose map is an automorphism with mu = 1") {
  const ExtremalVerdict v = classify(lorentz_from_qubit(transpose_map()));
  CHECK(v.kind == ExtremalVerdict::Kind::Automorphism);
  CHECK(v.mu == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classify: boundary rank-one outer product") {
  const LorentzMap l = LorentzMap::of(
      outer(std::vector<double>{1, 0, 0, 1}, std::vector<double>{1, 0, 0, 1}));
  const ExtremalVerdict v = classify(l);
  CHECK(v.kind == ExtremalVerdict::Kind::RankOneExtreme);
  CHECK(std::abs(q_form(v.u)) <= 1e-6 * dot(v.u.x, v.u.x));
  CHECK(std::abs(q_form(v.v)) <= 1e-6 * dot(v.v.x, v.v.x));
}

TEST_CASE("classify: diag(1, 1/2, 1/2, 1/2) is not extreme with a valid Delta") {
  const double d[4] = {1.0, 0.5, 0.5, 0.5};
  const LorentzMap l = LorentzMap::of(RMat::diagonal(d));
  const ExtremalVerdict v = classify(l);
  REQUIRE(v.kind == ExtremalVerdict::Kind::NotExtreme);
  CHECK(v.mu_star == doctest::Approx(0.625).epsilon(1e-8));
  CHECK(preserves_cone(LorentzMap::of(l.mat + v.delta)).preserves);
  CHECK(preserves_cone(LorentzMap::of(l.mat - v.delta)).preserves);
}

TEST_CASE("classify: nonpositive map lands NotInCone") {
  const ExtremalVerdict v =
      classify(lorentz_from_qubit(random_nonpositive_map(19)));
  CHECK(v.kind == ExtremalVerdict::Kind::NotInCone);
}

TEST_CASE("classify: automorphism/depolarizing mix gets a valid perturbation") {
  const RMat mix =
      0.5 * transpose_map().ptm() + 0.5 * depolarizing_map().ptm();
  const ExtremalVerdict v = classify(LorentzMap::of(mix));
  REQUIRE(v.kind == ExtremalVerdict::Kind::NotExtreme);
  CHECK(preserves_cone(LorentzMap::of(mix + v.delta)).preserves);
  CHECK(preserves_cone(LorentzMap::of(mix - v.delta)).preserves);
}

TEST_CASE("automorphism scale law: mu = |det V|^2 for conjugations") {
  Prng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const CMat v = random_invertible2(rng);
    const ExtremalVerdict verdict = classify(lorentz_from_qubit(conjugation_map(v)));
    REQUIRE(verdict.kind == ExtremalVerdict::Kind::Automorphism);
    const cplx det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
    CHECK(verdict.mu ==
          doctest::Approx(std::norm(det)).epsilon(1e-9));
  }
}

TEST_CASE("build_perturbation: delta = 0 branch via rank-deficient L^T J") {
  // Rank-two sum of boundary outer products gives a singular L^T J.
  Prng rng(52);
  const LorentzVec u1 = random_boundary_vector(rng, 4);
  const LorentzVec v1 = random_boundary_vector(rng, 4);
  const LorentzVec u2 = random_boundary_vector(rng, 4);
  const LorentzVec v2 = random_boundary_vector(rng, 4);
  const RMat l = outer(u1.x, v1.x) + outer(u2.x, v2.x);
  const LorentzMap lm = LorentzMap::of(l);
  REQUIRE(preserves_cone(lm).preserves);
  REQUIRE(numerical_rank(l) == 2);

  const ExtremalVerdict v = classify(lm);
  REQUIRE(v.kind == ExtremalVerdict::Kind::NotExtreme);
  CHECK(preserves_cone(LorentzMap::of(l + v.delta)).preserves);
  CHECK(preserves_cone(LorentzMap::of(l - v.delta)).preserves);
}

TEST_CASE("rank-one maps with an interior factor are not extreme") {
  // u strictly inside the cone, v on the boundary.
  const std::vector<double> u = {2.0, 0.5, 0.0, 0.0};
  const std::vector<double> v = {1.0, 0.0, 0.0, 1.0};
  const ExtremalVerdict verdict = classify(LorentzMap::of(outer(u, v)));
  REQUIRE(verdict.kind == ExtremalVerdict::Kind::NotExtreme);
  const RMat l = outer(u, v);
  CHECK(preserves_cone(LorentzMap::of(l + verdict.delta)).preserves);
  CHECK(preserves_cone(LorentzMap::of(l - verdict.delta)).preserves);
}

TEST_CASE("general m: classification across 3, 5, 6") {
  for (int m : {3, 5, 6}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      double scale = 0.0;
      const LorentzMap aut = random_lorentz_automorphism(seed, m, &scale);
      const ExtremalVerdict va = classify(aut);
      REQUIRE(va.kind == ExtremalVerdict::Kind::Automorphism);
      CHECK(va.mu == doctest::Approx(scale * scale).epsilon(1e-8));

      const LorentzMap r1 = random_boundary_rank_one(seed, m);
      CHECK(classify(r1).kind == ExtremalVerdict::Kind::RankOneExtreme);

      // Strict convex mix of two distinct automorphisms.
      const LorentzMap aut2 = random_lorentz_automorphism(seed + 1000, m, nullptr);
      const RMat mix = 0.5 * aut.mat + 0.5 * aut2.mat;
      const ExtremalVerdict vm = classify(LorentzMap::of(mix));
      REQUIRE(vm.kind == ExtremalVerdict::Kind::NotExtreme);
      CHECK(preserves_cone(LorentzMap::of(mix + vm.delta)).preserves);
      CHECK(preserves_cone(LorentzMap::of(mix - vm.delta)).preserves);
    }
  }
}

TEST_CASE("kadison_extract: conjugations, transpose, composed case") {
  const CMat v_in = CMat(2, 2, {2.0, 0.0, 0.0, 1.0});
  const KadisonForm k1 = kadison_extract(conjugation_map(v_in));
  CHECK_FALSE(k1.is_co);
  // Recovered up to global phase; compare via the induced map.
  CHECK(frob(conjugation_map(k1.v).ptm() - conjugation_map(v_in).ptm()) <= 1e-9);

  const KadisonForm k2 = kadison_extract(transpose_map());
  CHECK(k2.is_co);
  CHECK(frob(compose(conjugation_map(k2.v), transpose_map()).ptm() -
             transpose_map().ptm()) <= 1e-9);

  const QubitMap m3 = compose(conjugation_map(pauli(1)), transpose_map());
  const KadisonForm k3 = kadison_extract(m3);
  CHECK(k3.is_co);
  QubitMap rec = compose(conjugation_map(k3.v), transpose_map());
  CHECK(frob(rec.ptm() - m3.ptm()) <= 1e-9);

  CHECK_THROWS_AS(kadison_extract(depolarizing_map()), NotAutomorphism);
}

TEST_CASE("kadison_extract on Haar-random unitary conjugations") {
  Prng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const CMat u = random_su2(rng);
    const QubitMap m = trial % 2 == 0
                           ? conjugation_map(u)
                           : compose(conjugation_map(u), transpose_map());
    const KadisonForm k = kadison_extract(m);
    CHECK(k.is_co == (trial % 2 == 1));
    QubitMap rec = conjugation_map(k.v);
    if (k.is_co) rec = compose(rec, transpose_map());
    CHECK(frob(rec.ptm() - m.ptm()) <= 1e-9);
  }
}

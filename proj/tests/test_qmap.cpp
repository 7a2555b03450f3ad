#include <doctest.h>

#include <cmath>

#include "posmap/lorentz.hpp"
#include "posmap/positivity.hpp"
#include "posmap/qmap.hpp"
#include "test_util.hpp"

using namespace posmap;
using namespace posmap::testutil;

TEST_CASE("from_kraus: Pauli conjugations against direct products") {
  // sigma_x sigma_a sigma_x computed by hand: flips Y and Z.
  const QubitMap mx = from_kraus({pauli(1)}, {});
  const double expected[4] = {1.0, 1.0, -1.0, -1.0};
  CHECK(frob(mx.ptm() - RMat::diagonal(expected)) <= 1e-14);

  const QubitMap mid = from_kraus({pauli(0)}, {});
  CHECK(frob(mid.ptm() - RMat::identity(4)) <= 1e-14);

  // Transpose flips sigma_y only.
  const QubitMap mt = from_kraus({}, {pauli(0)});
  CHECK(frob(mt.ptm() - transpose_map().ptm()) <= 1e-14);

  CHECK_THROWS_AS(from_kraus({}, {}), EmptyInput);
}

TEST_CASE("special maps") {
  const double om[4] = {1.0, 0.0, 0.0, 0.0};
  CHECK(frob(depolarizing_map().ptm() - RMat::diagonal(om)) == 0.0);

  const QubitMap conj = conjugation_map(CMat(2, 2, {2.0, 0.0, 0.0, 1.0}));
  CHECK(conj.ptm()(0, 0) == doctest::Approx(2.5).epsilon(1e-14));

  CHECK_THROWS_AS(conjugation_map(CMat(2, 2)), ZeroMatrix);
}

TEST_CASE("apply: identity, depolarizing, transpose") {
  Prng rng(11);
  const Herm2 rho = HermMat(cplx(0.5, 0.0) *
                            (CMat::identity(2) + random_herm(rng, 2).mat()));

  const Herm2 out_id = apply(identity_map(), rho);
  CHECK(frob(out_id - rho) <= 1e-14);

  // Depolarizing sends any unit-trace state to Id/2.
  const Herm2 unit = herm2_from_bloch({1.0, 0.3, -0.2, 0.5});
  const Herm2 out_dep = apply(depolarizing_map(), unit);
  CHECK(frob(out_dep - HermMat(cplx(0.5, 0.0) * CMat::identity(2))) <= 1e-14);

  // Transpose on 1/2 (I + sigma_y) flips the y coordinate.
  const Herm2 y_state = herm2_from_bloch({1.0, 0.0, 1.0, 0.0});
  const Herm2 out_t = apply(transpose_map(), y_state);
  const auto x = bloch(out_t);
  CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("adjoint: involution, depolarizing fixed point, Phi_M dagger rule") {
  CHECK(frob(adjoint(depolarizing_map()).ptm() - depolarizing_map().ptm()) == 0.0);

  Prng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const CMat m = random_cmat(rng, 2, 2);
    if (frob(m) < 1e-6) continue;
    const QubitMap lhs = adjoint(conjugation_map(m));
    const QubitMap rhs = conjugation_map(dagger(m));
    CHECK(frob(lhs.ptm() - rhs.ptm()) <= 1e-12 * (1.0 + frob(lhs.ptm())));

    const QubitMap mm = QubitMap(random_rmat(rng, 4, 4));
    CHECK(frob(adjoint(adjoint(mm)).ptm() - mm.ptm()) == 0.0);
  }
}

TEST_CASE("compose: transpose squared, depolarizing absorption, associativity") {
  CHECK(frob(compose(transpose_map(), transpose_map()).ptm() - RMat::identity(4)) ==
        0.0);

  Prng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    // Omega o m = Omega for trace-preserving m.
    RMat l = random_rmat(rng, 4, 4);
    l(0, 0) = 1.0;
    l(0, 1) = l(0, 2) = l(0, 3) = 0.0;
    const QubitMap m(l);
    CHECK(frob(compose(depolarizing_map(), m).ptm() - depolarizing_map().ptm()) <=
          1e-14);

    const QubitMap a(random_rmat(rng, 4, 4));
    const QubitMap b(random_rmat(rng, 4, 4));
    const QubitMap c(random_rmat(rng, 4, 4));
    const RMat left = compose(compose(a, b), c).ptm();
    const RMat right = compose(a, compose(b, c)).ptm();
    CHECK(frob(left - right) <= 1e-13 * (1.0 + frob(left)));
  }
}

TEST_CASE("choi: identity, depolarizing, transpose spectra") {
  const HermEig e_id = herm_eig(choi(identity_map()));
  CHECK(e_id.values[3] == doctest::Approx(2.0).epsilon(1e-13));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(e_id.values[i]) <= 1e-13);

  const HermEig e_dep = herm_eig(choi(depolarizing_map()));
  for (double v : e_dep.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-13));

  // Choi of the transpose is the swap operator: eigenvalues (-1, 1, 1, 1).
  const HermEig e_t = herm_eig(choi(transpose_map()));
  CHECK(e_t.values[0] == doctest::Approx(-1.0).epsilon(1e-13));
  for (int i = 1; i < 4; ++i) CHECK(e_t.values[i] == doctest::Approx(1.0).epsilon(1e-13));

  // Entrywise: the swap matrix itself.
  CMat swap(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  CHECK(frob(choi(transpose_map()).mat() - swap) <= 1e-14);
}

TEST_CASE("PTM/Kraus round trip on random decompositions") {
  Prng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    Decomposition d;
    const int nk = static_cast<int>(rng.below(3));
    const int nc = static_cast<int>(rng.below(3));
    for (int i = 0; i < nk; ++i) d.kraus.push_back(random_cmat(rng, 2, 2));
    for (int i = 0; i < nc; ++i) d.co_kraus.push_back(random_cmat(rng, 2, 2));
    if (d.total_terms() == 0) continue;
    const QubitMap m = from_kraus(d);
    const QubitMap again = from_kraus(d);
    CHECK(frob(m.ptm() - again.ptm()) == 0.0);
  }
}

TEST_CASE("q(Lx) = 4 det Phi(rho) for random maps and states") {
  Prng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const QubitMap m(random_rmat(rng, 4, 4));
    const Herm2 rho = random_herm(rng, 2);
    const Herm2 img = apply(m, rho);
    const LorentzVec y = lorentz_from_herm(img);
    const cplx det = img(0, 0) * img(1, 1) - img(0, 1) * img(1, 0);
    CHECK(q_form(y) ==
          doctest::Approx(4.0 * det.real()).epsilon(1e-10));
  }
}

TEST_CASE("bloch round trip is exact") {
  Prng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Herm2 rho = random_herm(rng, 2);
    const Herm2 back = herm2_from_bloch(bloch(rho));
    CHECK(frob(back - rho) <= 1e-15 * (1.0 + frob(rho)));
  }
}

TEST_CASE("random_map: seeded determinism and kind guarantees") {
  // Identical seeds give identical maps.
  const QubitMap a = random_map(42, {RandomSpec::Kind::Interior, 0.3});
  const QubitMap b = random_map(42, {RandomSpec::Kind::Interior, 0.3});
  CHECK(frob(a.ptm() - b.ptm()) == 0.0);

  // interior(t = 1) is exactly the depolarizing map.
  const QubitMap omega = random_map(7, {RandomSpec::Kind::Interior, 1.0});
  CHECK(frob(omega.ptm() - depolarizing_map().ptm()) == 0.0);

  // cp maps have PSD Choi.
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const QubitMap cp = random_cp_map(seed);
    CHECK(lambda_min(choi(cp)) >= -1e-10);
    const QubitMap ccp = random_ccp_map(seed);
    CHECK(lambda_min(choi(compose(ccp, transpose_map()))) >= -1e-10);
  }

  // interior maps are interior; validated through the positivity module.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CHECK(is_interior(random_interior_map(seed, 0.3)).interior);
  }

  // nonpositive maps fail is_positive.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CHECK_FALSE(is_positive(random_nonpositive_map(seed)).positive);
  }
}

TEST_CASE("lemma-2 style identities: positivity and unitality under adjoints") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const RandomSpec::Kind kinds[3] = {RandomSpec::Kind::Interior,
                                       RandomSpec::Kind::Boundary,
                                       RandomSpec::Kind::Nonpositive};
    const QubitMap m = random_map(seed, {kinds[seed % 3], 0.4});
    CHECK(is_positive(m).positive == is_positive(adjoint(m)).positive);
    CHECK(is_unital(m) == is_trace_preserving(adjoint(m)));
    CHECK(is_trace_preserving(m) == is_unital(adjoint(m)));
  }
}

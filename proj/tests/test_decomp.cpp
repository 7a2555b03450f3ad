#include <doctest.h>

#include <cmath>

#include "posmap/decomp.hpp"
#include "test_util.hpp"

using namespace posmap;
using namespace posmap::testutil;

namespace {

double cube_reconstruction_error(const std::array<double, 3>& s,
                                 const std::vector<CubeTerm>& terms) {
  double total = 0.0;
  std::array<double, 3> acc{};
  for (const CubeTerm& t : terms) {
    total += t.weight;
    for (int i = 0; i < 3; ++i) acc[i] += t.weight * t.signs[i];
  }
  double err = std::abs(total - 1.0);
  for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(acc[i] - s[i]));
  return err;
}

}  // namespace

TEST_CASE("caratheodory_cube: vertices, center, generic point") {
  const auto v = caratheodory_cube({1.0, 1.0, 1.0});
  REQUIRE(v.size() == 1);
  CHECK(v[0].weight == doctest::Approx(1.0));
  CHECK(v[0].signs == std::array<int, 3>{1, 1, 1});

  const auto c = caratheodory_cube({0.0, 0.0, 0.0});
  CHECK(c.size() <= 4);
  CHECK(cube_reconstruction_error({0, 0, 0}, c) <= 1e-12);

  const auto g = caratheodory_cube({0.5, -0.2, 0.7});
  CHECK(g.size() <= 4);
  CHECK(cube_reconstruction_error({0.5, -0.2, 0.7}, g) <= 1e-12);
}

TEST_CASE("caratheodory_cube: 100k random cube points") {
  Prng rng(41);
  for (int trial = 0; trial < 100000; ++trial) {
    std::array<double, 3> s;
    for (double& c : s) c = 2.0 * rng.uniform() - 1.0;
    const auto terms = caratheodory_cube(s);
    CHECK(terms.size() <= 4);
    CHECK(cube_reconstruction_error(s, terms) <= 1e-12);
    for (const CubeTerm& t : terms) CHECK(t.weight >= 1e-14);
  }
}

TEST_CASE("spinor_lift: axis rotations") {
  const CMat u_id = spinor_lift(RMat::identity(3));
  CHECK(frob(u_id - CMat::identity(2)) <= 1e-14);

  // Rotation about z by pi lifts to -i sigma_z up to sign.
  RMat rz(3, 3);
  rz(0, 0) = -1.0;
  rz(1, 1) = -1.0;
  rz(2, 2) = 1.0;
  const CMat uz = spinor_lift(rz);
  CHECK(frob(rotation_of_unitary(uz) - rz) <= 1e-12);
  CHECK(std::abs(std::abs(uz(0, 0).imag()) - 1.0) <= 1e-12);

  // Rotation about x by pi.
  const double dx[3] = {1.0, -1.0, -1.0};
  const CMat ux = spinor_lift(RMat::diagonal(dx));
  CHECK(frob(rotation_of_unitary(ux) - RMat::diagonal(dx)) <= 1e-12);

  const double bad[3] = {1.0, 2.0, 1.0};
  CHECK_THROWS_AS(spinor_lift(RMat::diagonal(bad)), NotRotation);
}

TEST_CASE("spinor round trip on Haar-random unitaries") {
  Prng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const CMat u = random_su2(rng);
    const RMat r = rotation_of_unitary(u);
    const CMat lifted = spinor_lift(r);
    const double direct = frob(lifted - u);
    const double flipped = frob(lifted + u);
    CHECK(std::min(direct, flipped) <= 1e-12);
  }
}

TEST_CASE("bistochastic_decompose: identity, transpose, depolarizing") {
  const auto t_id = bistochastic_decompose(identity_map());
  REQUIRE(t_id.size() == 1);
  CHECK(t_id[0].det_sign == 1);
  CHECK(frob(t_id[0].o - RMat::identity(3)) <= 1e-14);

  const auto t_t = bistochastic_decompose(transpose_map());
  REQUIRE(t_t.size() == 1);
  CHECK(t_t[0].det_sign == -1);
  const double refl[3] = {1.0, -1.0, 1.0};
  CHECK(frob(t_t[0].o - RMat::diagonal(refl)) <= 1e-14);

  const auto t_om = bistochastic_decompose(depolarizing_map());
  CHECK(t_om.size() <= 4);
  RMat sum(3, 3);
  for (const auto& term : t_om) sum += term.weight * term.o;
  CHECK(frob(sum) <= 1e-12);

  CHECK_THROWS_AS(bistochastic_decompose(random_interior_map(3, 0.3)),
                  NotBistochastic);
}

TEST_CASE("decompose: exact known-map outputs") {
  const Decomposition d_id = decompose(identity_map());
  REQUIRE(d_id.kraus.size() == 1);
  CHECK(d_id.co_kraus.empty());
  CHECK(frob(d_id.kraus[0] - CMat::identity(2)) <= 1e-14);

  const Decomposition d_t = decompose(transpose_map());
  CHECK(d_t.kraus.empty());
  REQUIRE(d_t.co_kraus.size() == 1);
  CHECK(frob(d_t.co_kraus[0] - CMat::identity(2)) <= 1e-14);

  const Decomposition d_om = decompose(depolarizing_map());
  CHECK(d_om.total_terms() <= 4);
  CHECK(verify_decomposition(depolarizing_map(), d_om) <= 1e-12);
}

TEST_CASE("decompose: random interior maps, term bound and residual") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const double t = seed % 3 == 0 ? 0.05 : (seed % 3 == 1 ? 0.3 : 0.8);
    const QubitMap m = random_interior_map(seed, t);
    const Decomposition d = decompose(m);
    CHECK(d.total_terms() <= 4);
    CHECK(verify_decomposition(m, d) <= 1e-8);

    // CP/co-CP split soundness: each half alone is CP (resp. co-CP).
    if (!d.kraus.empty()) {
      CHECK(lambda_min(choi(from_kraus(d.kraus, {}))) >= -1e-9);
    }
    if (!d.co_kraus.empty()) {
      const QubitMap co = from_kraus({}, d.co_kraus);
      CHECK(lambda_min(choi(compose(co, transpose_map()))) >= -1e-9);
    }
  }
}

TEST_CASE("decompose: errors for nonpositive and boundary maps") {
  CHECK_THROWS_AS(decompose(random_nonpositive_map(8)), NotPositive);
  // A generic boundary conjugation is neither bistochastic nor interior.
  CHECK_THROWS_AS(decompose(conjugation_map(CMat(2, 2, {2.0, 0.0, 0.0, 1.0}))),
                  BoundaryMap);
}

TEST_CASE("decompose_general: interior short-circuit and boundary schedule") {
  const QubitMap m = random_interior_map(17, 0.3);
  const GeneralDecomposition g = decompose_general(m);
  CHECK(g.path == "interior");
  CHECK(g.residual <= 1e-8);

  // Identity map is boundary but bistochastic: exact path.
  const GeneralDecomposition g_id = decompose_general(identity_map());
  CHECK(g_id.path == "bistochastic");
  CHECK(g_id.residual <= 1e-12);

  // Conjugation boundary map: regularized with an honest residual.
  const QubitMap v_map = conjugation_map(CMat(2, 2, {2.0, 0.0, 0.0, 1.0}));
  const GeneralDecomposition g_v = decompose_general(v_map);
  CHECK(g_v.path == "regularized");
  CHECK(g_v.eps_used == doctest::Approx(1e-6));
  const double omega_dist = frob(v_map.ptm() - depolarizing_map().ptm());
  CHECK(g_v.residual <= 3.0 * 1e-6 * omega_dist);
  CHECK(verify_decomposition(v_map, g_v.decomposition) ==
        doctest::Approx(g_v.residual));
}

TEST_CASE("verify_decomposition basics") {
  Decomposition d;
  d.kraus.push_back(CMat::identity(2));
  CHECK(verify_decomposition(identity_map(), d) <= 1e-15);

  Decomposition dt;
  dt.co_kraus.push_back(CMat::identity(2));
  CHECK(verify_decomposition(transpose_map(), dt) <= 1e-15);
}

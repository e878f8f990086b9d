#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symstab/homology.hpp"

using namespace symstab;

namespace {

SetPtr torus7() {
  std::vector<std::vector<int>> tris;
  for (int i = 0; i < 7; ++i) tris.push_back({i % 7, (i + 1) % 7, (i + 3) % 7});
  for (int i = 0; i < 7; ++i) tris.push_back({i % 7, (i + 2) % 7, (i + 3) % 7});
  return complex_model(tris, 0);
}

SetPtr rp2_6() {
  return complex_model({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                        {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}},
                       0);
}

void check_group(HomologyEngine& H, int d, std::int64_t betti,
                 std::vector<Int> torsion = {}) {
  const HomologyGroup& G = H.group(d);
  CHECK(G.betti == betti);
  CHECK(G.torsion == torsion);
}

bool is_cycle(const ChainComplex& C, int d, const Chain& x) {
  std::map<std::int32_t, Int> acc;
  if (d == 0) return true;
  for (const auto& [i, v] : x)
    for (const auto& [row, w] : C.boundaries[d][i]) acc[row] += v * w;
  for (const auto& [row, v] : acc)
    if (v != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form with certificates") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const int c = 1 + static_cast<int>(rng() % 6);
    DenseMatrix M(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        M.at(i, j) = static_cast<int>(rng() % 21) - 10;
    SmithResult S = smith_normal_form(M);
    CHECK(is_identity(matmul(S.U, S.Uinv)));
    CHECK(is_identity(matmul(S.Vinv, S.V)));
    DenseMatrix D = matmul(matmul(S.U, M), S.V);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (i == j) {
          CHECK(D.at(i, j) == S.diag[i]);
          CHECK(D.at(i, j) >= 0);
        } else {
          CHECK(D.at(i, j) == 0);
        }
      }
    for (std::int64_t i = 0; i + 1 < S.rank; ++i)
      CHECK(S.diag[i + 1] % S.diag[i] == 0);
  }
}

TEST_CASE("integer solve and kernel") {
  DenseMatrix M(2, 3);
  // [2 4 6; 0 3 3]
  M.at(0, 0) = 2; M.at(0, 1) = 4; M.at(0, 2) = 6;
  M.at(1, 1) = 3; M.at(1, 2) = 3;
  SmithResult S = smith_normal_form(M);
  CHECK(S.rank == 2);
  auto x = solve_integer(S, {2, 3});  // e.g. x = (1,1,-0...) solves
  REQUIRE(x.has_value());
  CHECK(2 * (*x)[0] + 4 * (*x)[1] + 6 * (*x)[2] == 2);
  CHECK(3 * (*x)[1] + 3 * (*x)[2] == 3);
  CHECK_FALSE(solve_integer(S, {1, 0}).has_value());
  DenseMatrix K = kernel_basis(S);
  CHECK(K.cols == 1);
  CHECK(2 * K.at(0, 0) + 4 * K.at(1, 0) + 6 * K.at(2, 0) == 0);
  CHECK(3 * K.at(1, 0) + 3 * K.at(2, 0) == 0);
}

TEST_CASE("homology of the basic models") {
  auto s1 = circle_model(3);
  HomologyEngine H1(*s1);
  check_group(H1, 0, 1);
  check_group(H1, 1, 1);

  auto s2 = sphere_model(2);
  HomologyEngine H2(*s2);
  check_group(H2, 0, 1);
  check_group(H2, 1, 0);
  check_group(H2, 2, 1);

  auto s3 = sphere_model(3);
  HomologyEngine H3(*s3);
  check_group(H3, 0, 1);
  check_group(H3, 3, 1);

  HomologyEngine HT(*torus7());
  check_group(HT, 0, 1);
  check_group(HT, 1, 2);
  check_group(HT, 2, 1);

  HomologyEngine HP(*rp2_6());
  check_group(HP, 0, 1);
  check_group(HP, 1, 0, {2});
  check_group(HP, 2, 0);
}

TEST_CASE("generators are genuine cycles with unit coordinates") {
  auto t = torus7();
  ChainComplex C = normalized_chains(*t);
  check_boundary_squares_to_zero(C);
  HomologyEngine H(*t);
  for (int d = 0; d <= 2; ++d) {
    const HomologyGroup& G = H.group(d);
    const std::size_t k = G.torsion.size() + G.betti;
    REQUIRE(G.generators.size() == k);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(is_cycle(C, d, G.generators[j]));
      auto coords = H.coordinates(d, G.generators[j]);
      for (std::size_t i = 0; i < k; ++i)
        CHECK(coords[i] == Int(i == j ? 1 : 0));
    }
  }
  Chain not_cycle;
  not_cycle[0] = 1;  // a single edge is not a cycle
  CHECK_THROWS_AS(H.coordinates(1, not_cycle), input_error);
}

TEST_CASE("homology of symmetric powers: circle") {
  auto s1 = circle_model(3);
  for (int n = 2; n <= 4; ++n) {
    HomologyEngine H(*sym_power(s1, n).set);
    check_group(H, 0, 1);
    check_group(H, 1, 1);
    for (int d = 2; d <= H.dims(); ++d) check_group(H, d, 0);
  }
}

TEST_CASE("homology of symmetric powers: sphere") {
  HomologyEngine H2(*sym_power(sphere_model(2), 2).set);
  std::vector<std::int64_t> b2 = H2.betti_numbers();
  CHECK(b2 == std::vector<std::int64_t>{1, 0, 1, 0, 1});

  HomologyEngine H3(*sym_power(sphere_model(2), 3).set);
  std::vector<std::int64_t> b3 = H3.betti_numbers();
  CHECK(b3 == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1});
  for (int d = 0; d <= 6; ++d) CHECK(H3.group(d).torsion.empty());
}

TEST_CASE("homology of symmetric powers: surfaces") {
  HomologyEngine HT(*sym_power(torus7(), 2).set);
  CHECK(HT.betti_numbers() == std::vector<std::int64_t>{1, 2, 2, 2, 1});
  for (int d = 0; d <= 4; ++d) CHECK(HT.group(d).torsion.empty());

  HomologyEngine HP(*sym_power(rp2_6(), 2).set);
  check_group(HP, 0, 1);
  check_group(HP, 1, 0, {2});
  check_group(HP, 2, 0);
  check_group(HP, 3, 0, {2});
  check_group(HP, 4, 0);
}

TEST_CASE("induced map on homology: stabilization of the circle") {
  auto s1 = circle_model(3);
  auto S1p = sym_power(s1, 1);
  auto S2p = sym_power(s1, 2);
  auto a = stabilization_map(s1, S1p, S2p);
  HomologyEngine Hs(*S1p.set), Ht(*S2p.set);
  ChainMap f = chain_map(a);
  InducedMap m1 = induced_map(Hs, Ht, f, 1);
  CHECK(m1.surjective);
  CHECK(m1.injective);
  CHECK(m1.isomorphism());
  InducedMap m0 = induced_map(Hs, Ht, f, 0);
  CHECK(m0.isomorphism());
}

TEST_CASE("induced map detects non-isomorphisms") {
  // degree-2 self map of the circle: wrap a 6-vertex circle twice around a
  // 3-vertex one
  auto big = circle_model(6);
  auto small = circle_model(3);
  SimplicialMap f;
  f.source = big;
  f.target = small;
  f.images.resize(2);
  f.images[0].resize(6);
  f.images[1].resize(6);
  for (int i = 0; i < 6; ++i) {
    f.images[0][i] = {i % 3, 0};
    f.images[1][i] = {i % 3, 0};
  }
  validate(f);
  HomologyEngine Hs(*big), Ht(*small);
  InducedMap m = induced_map(Hs, Ht, chain_map(f), 1);
  CHECK(m.injective);
  CHECK_FALSE(m.surjective);
  CHECK(m.matrix.rows == 1);
  CHECK(m.matrix.cols == 1);
  CHECK(abs(m.matrix.at(0, 0)) == 2);
}

TEST_CASE("euler characteristic matches betti numbers") {
  for (SetPtr X : {torus7(), rp2_6(), sym_power(sphere_model(2), 2).set}) {
    ChainComplex C = normalized_chains(*X);
    HomologyEngine H(*X);
    std::int64_t chi = 0;
    auto b = H.betti_numbers();
    for (std::size_t d = 0; d < b.size(); ++d) chi += (d % 2 ? -1 : 1) * b[d];
    CHECK(chi == euler_characteristic(C));
  }
}

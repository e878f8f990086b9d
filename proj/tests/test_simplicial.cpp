#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symstab/simplicial.hpp"

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

std::vector<std::int64_t> counts_of(const ProductComplex& P) { return P.set->counts; }

}  // namespace

TEST_CASE("degeneracy word algebra") {
  // s_2 s_0 stored as bits {0,2}; inserting s_1 gives s_3 s_1 s_0 = {0,1,3}
  CHECK(word_insert(1, 0b101u) == 0b1011u);
  CHECK(word_insert(0, 0u) == 0b1u);
  CHECK(word_length(0b1011u) == 3);

  // d_1 s_0 = s_0 d_0 on indices: push d_1 through {0}
  FacePush r = push_face(1, 0b1u);
  CHECK(r.cancelled);
  CHECK(r.word == 0);

  // d_0 s_1 = s_0 d_0
  r = push_face(0, 0b10u);
  CHECK_FALSE(r.cancelled);
  CHECK(r.face_index == 0);
  CHECK(r.prefix == 0b1u);

  // d_3 s_1 s_0 = s_1 s_0 d_1
  r = push_face(3, 0b11u);
  CHECK_FALSE(r.cancelled);
  CHECK(r.face_index == 1);
  CHECK(r.prefix == 0b11u);
}

TEST_CASE("models validate with expected counts") {
  auto pt = point_model();
  validate(*pt);
  CHECK(pt->counts == std::vector<std::int64_t>{1});

  auto s1 = circle_model(3);
  validate(*s1);
  CHECK(s1->counts == std::vector<std::int64_t>{3, 3});

  auto s2 = sphere_model(2);
  validate(*s2);
  CHECK(s2->counts == std::vector<std::int64_t>{4, 6, 4});

  auto t = torus7();
  validate(*t);
  CHECK(t->counts == std::vector<std::int64_t>{7, 21, 14});

  auto rp2 = rp2_6();
  validate(*rp2);
  CHECK(rp2->counts == std::vector<std::int64_t>{6, 15, 10});

  CHECK_THROWS_AS(circle_model(2), input_error);
  CHECK_THROWS_AS(complex_model({{0, 0, 1}}, 0), input_error);
  CHECK_THROWS_AS(complex_model({{0, 1, 2}}, 9), input_error);
}

TEST_CASE("products and powers") {
  auto s1 = circle_model(3);
  auto P = product(s1, s1, {});
  validate(*P.set);
  CHECK(P.set->counts == std::vector<std::int64_t>{9, 27, 18});  // chi = 0

  auto PR = power(s1, 2, {});
  CHECK(*PR.power.set == *P.set);
  validate_action(*PR.power.set, PR.action);

  auto s2 = sphere_model(2);
  auto Q = product(s1, s2, {});
  validate(*Q.set);
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < Q.set->counts.size(); ++d)
    chi += (d % 2 ? -1 : 1) * Q.set->counts[d];
  CHECK(chi == 0);  // chi(S1 x S2) = chi(S1) * chi(S2) = 0
}

TEST_CASE("symmetric powers match the power quotient") {
  auto s1 = circle_model(3);
  for (int n = 2; n <= 3; ++n) {
    auto PR = power(s1, n, {});
    auto QR = quotient(PR.power.set, PR.action);
    auto S = sym_power(s1, n, {});
    CHECK(*QR.set == *S.set);
    validate(*S.set);
    validate(QR.projection);
  }
}

TEST_CASE("symmetric power sizes: circle") {
  auto s1 = circle_model(3);
  CHECK(counts_of(sym_power(s1, 2)) == std::vector<std::int64_t>{6, 15, 9});
  CHECK(counts_of(sym_power(s1, 3)) == std::vector<std::int64_t>{10, 46, 63, 27});
  CHECK(counts_of(sym_power(s1, 4)) ==
        std::vector<std::int64_t>{15, 111, 258, 243, 81});
}

TEST_CASE("symmetric power sizes: sphere and surfaces") {
  auto s2 = sphere_model(2);
  auto S22 = sym_power(s2, 2);
  validate(*S22.set);
  CHECK(counts_of(S22) == std::vector<std::int64_t>{10, 45, 110, 120, 48});

  auto S23 = sym_power(s2, 3);
  CHECK(counts_of(S23) ==
        std::vector<std::int64_t>{20, 200, 1120, 3160, 4624, 3360, 960});
  CHECK(S23.set->total_nondegenerate() == 13444);

  auto t = torus7();
  CHECK(counts_of(sym_power(t, 2)) ==
        std::vector<std::int64_t>{28, 378, 1232, 1470, 588});

  auto rp2 = rp2_6();
  CHECK(counts_of(sym_power(rp2, 2)) ==
        std::vector<std::int64_t>{21, 210, 640, 750, 300});
}

TEST_CASE("dimension cap truncates without changing low dimensions") {
  auto t = torus7();
  BuildOptions cap2;
  cap2.dim_cap = 2;
  auto S = sym_power(t, 3, cap2);
  CHECK(counts_of(S) == std::vector<std::int64_t>{84, 3976, 35644});
  validate(*S.set);
  auto full2 = sym_power(t, 2);
  BuildOptions c2;
  c2.dim_cap = 2;
  auto capped = sym_power(t, 2, c2);
  for (int d = 0; d <= 2; ++d) CHECK(capped.set->counts[d] == full2.set->counts[d]);
}

TEST_CASE("budget enforcement") {
  auto t = torus7();
  BuildOptions small;
  small.budget = 1000;
  CHECK_THROWS_AS(sym_power(t, 2, small), budget_error);
  try {
    sym_power(t, 2, small);
  } catch (const budget_error& e) {
    CHECK(e.cap == 1000);
    CHECK(e.requested > 1000);
  }
}

TEST_CASE("serial and parallel builders agree") {
  auto s2 = sphere_model(2);
  BuildOptions ser;
  ser.parallel = false;
  auto a = sym_power(s2, 2, ser);
  auto b = sym_power(s2, 2, {});
  CHECK(*a.set == *b.set);
  CHECK(a.tables[2].flat == b.tables[2].flat);
}

TEST_CASE("stabilization map and projection validate") {
  auto s1 = circle_model(3);
  auto S1p = sym_power(s1, 1);
  auto S2p = sym_power(s1, 2);
  auto S3p = sym_power(s1, 3);
  auto a12 = stabilization_map(s1, S1p, S2p);
  auto a23 = stabilization_map(s1, S2p, S3p);
  validate(a12);
  validate(a23);

  auto S0p = sym_power(s1, 0);
  auto a01 = stabilization_map(s1, S0p, S1p);
  validate(a01);

  auto PR = power(s1, 2, {});
  auto q = sym_projection(PR.power, S2p);
  validate(q);
}

TEST_CASE("collapse of a subcomplex") {
  // collapsing one edge of the circle leaves a circle (2 vertices, 2 edges)
  auto s1 = circle_model(3);
  auto A = subcomplex_closure(*s1, {{1, 0}});
  validate_subcomplex(*s1, A);
  auto Q = collapse(s1, A);
  validate(*Q);
  CHECK(Q->counts == std::vector<std::int64_t>{2, 2});

  // collapsing a 2-simplex of the sphere: still [*, ...] and validates
  auto s2 = sphere_model(2);
  auto B = subcomplex_closure(*s2, {{2, 0}});
  auto Q2 = collapse(s2, B);
  validate(*Q2);
  CHECK(Q2->counts == std::vector<std::int64_t>{2, 3, 3});  // chi = 2 kept

  // image subcomplex of the stabilization map is face-closed
  auto S1p = sym_power(s1, 1);
  auto S2p = sym_power(s1, 2);
  auto a = stabilization_map(s1, S1p, S2p);
  auto I = image_subcomplex(a);
  validate_subcomplex(*S2p.set, I);
  auto C = collapse(S2p.set, I);
  validate(*C);
}

TEST_CASE("relabeling vertices does not change sizes") {
  auto t1 = torus7();
  std::vector<std::vector<int>> tris;
  auto rl = [](int v) { return (3 * v + 2) % 7 + 10; };
  for (int i = 0; i < 7; ++i)
    tris.push_back({rl(i % 7), rl((i + 1) % 7), rl((i + 3) % 7)});
  for (int i = 0; i < 7; ++i)
    tris.push_back({rl(i % 7), rl((i + 2) % 7), rl((i + 3) % 7)});
  auto t2 = complex_model(tris, rl(0));
  CHECK(t1->counts == t2->counts);
  CHECK(counts_of(sym_power(t1, 2)) == counts_of(sym_power(t2, 2)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace rbla;
using namespace fx;

TEST_CASE("scalar parsing accepts integers and fractions, normalized") {
  CHECK(Scalar::parse("2") == Scalar(2));
  CHECK(Scalar::parse("-7") == Scalar(-7));
  CHECK(Scalar::parse("-1/3") == Scalar(-1, 3));
  CHECK(Scalar::parse("4/6") == Scalar(2, 3));
  CHECK(Scalar::parse("4/6").str() == "2/3");
  CHECK(Scalar::parse("0").is_zero());
  CHECK(Scalar::parse("-0").is_zero());
  CHECK(Scalar::parse("0/5").str() == "0");
  CHECK(Scalar::parse("-10/4").str() == "-5/2");
}

TEST_CASE("scalar parsing rejects malformed text") {
  for (const char* bad : {"0.5", "1/0", "", "+1", "1/", "/3", "1/-2", " 1", "2 ", "a",
                          "1e3", "--1", "1/2/3", "2,5", "1 /2"}) {
    CHECK_THROWS_AS(Scalar::parse(bad), InputError);
  }
}

TEST_CASE("scalar arithmetic is exact") {
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK(Scalar(2, 3) * Scalar(9, 4) == Scalar(3, 2));
  CHECK(Scalar(1) / Scalar(3) == Scalar(1, 3));
  CHECK(-Scalar(5, 7) == Scalar(-5, 7));
  CHECK((Scalar(1, 2) - Scalar(1, 2)).is_zero());
  CHECK(Scalar(-3).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK(Scalar(1, 2) < Scalar(2, 3));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), InputError);
  CHECK_THROWS_AS(Scalar(1, 0), InputError);
}

TEST_CASE("spaces reject duplicate, empty, or missing labels") {
  CHECK_THROWS_AS(make_space("s", {"a", "a"}), InputError);
  CHECK_THROWS_AS(make_space("s", {"a", ""}), InputError);
  CHECK_THROWS_AS(make_space("s", {}), InputError);
  CHECK(make_space("s", {"a", "b"}).dim() == 2);
}

TEST_CASE("dual labels toggle a star and dualization is an involution") {
  CHECK(dual_label("x") == "x*");
  CHECK(dual_label("x*") == "x");
  Space s = sl2_space();
  Space d = dual_of(s);
  CHECK(d.basis == std::vector<std::string>{"x*", "h*", "y*"});
  CHECK(dual_of(d) == s);
}

TEST_CASE("direct sums prime colliding labels until unique") {
  Space s = sl2_space();
  Space once = direct_sum(s, s);
  CHECK(once.basis == std::vector<std::string>{"x", "h", "y", "x'", "h'", "y'"});
  Space twice = direct_sum(s, once);
  CHECK(twice.basis == std::vector<std::string>{"x", "h", "y", "x'", "h'", "y'", "x''", "h''",
                                                "y''"});
  Space plain = direct_sum(sl2_space(), ab2_space());
  CHECK(plain.basis == std::vector<std::string>{"x", "h", "y", "e1", "e2"});
}

TEST_CASE("matrix determinant and inverse are exact over rationals") {
  Mat a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = Scalar(1, i + j + 1);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Mat::identity(3));
  CHECK(*inv * a == Mat::identity(3));
  CHECK(a.det() == Scalar(1, 2160));

  CHECK(mati(2, 2, {1, 2, 3, 4}).det() == Scalar(-2));
  CHECK_FALSE(mati(2, 2, {1, 2, 2, 4}).inverse().has_value());
}

TEST_CASE("block_diag and combine assemble operators") {
  Mat d = block_diag(mati(2, 2, {1, 2, 3, 4}), mati(1, 1, {5}));
  CHECK(d.rows() == 3);
  CHECK(d.at(0, 1) == Scalar(2));
  CHECK(d.at(2, 2) == Scalar(5));
  CHECK(d.at(2, 0).is_zero());
  CHECK(d.at(0, 2).is_zero());

  std::vector<Mat> ops = {Mat::identity(2), mati(2, 2, {0, 1, 0, 0})};
  Mat c = combine(ops, {Scalar(3), Scalar(-2)});
  CHECK(c == mati(2, 2, {3, -2, 0, 3}));
}

TEST_CASE("matrix columns read and write consistently") {
  Mat m = mati(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(m.col(1) == std::vector<Scalar>{Scalar(2), Scalar(5)});
  m.set_col(0, {Scalar(9), Scalar(8)});
  CHECK(m.at(0, 0) == Scalar(9));
  CHECK(m.at(1, 0) == Scalar(8));
  CHECK(m.apply({Scalar(1), Scalar(0), Scalar(0)}) == std::vector<Scalar>{Scalar(9), Scalar(8)});
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("pretty prints signed rational combinations over the basis") {
  Space s = sl2_space();
  CHECK(pretty(s, {Scalar(-2), Scalar(0), Scalar(2)}) == "-2*x + 2*y");
  CHECK(pretty(s, {Scalar(1), Scalar(0), Scalar(-1)}) == "x - y");
  CHECK(pretty(s, {Scalar(0), Scalar(1), Scalar(0)}) == "h");
  CHECK(pretty(s, {Scalar(0), Scalar(0), Scalar(0)}) == "0");
  CHECK(pretty(s, {Scalar(1, 2), Scalar(-3, 4), Scalar(0)}) == "1/2*x - 3/4*h");
  CHECK(pretty(s, {Scalar(-1), Scalar(0), Scalar(0)}) == "-x");
}

TEST_CASE("vector arithmetic stays on the labelled space") {
  Space s = na2_space();
  Vector v = add(scale(Scalar(2), basis_vector(s, 0)), basis_vector(s, 1));
  CHECK(v.c == std::vector<Scalar>{Scalar(2), Scalar(1)});
  CHECK(is_zero(sub(v, v)));
  CHECK_FALSE(is_zero(v));
  CHECK(is_zero(zero_vector(s)));
}

TEST_CASE("flip is an involution and detects antisymmetry") {
  std::mt19937 rng(11);
  Space s = sl2_space();
  Tensor2 t = rand_tensor(rng, s);
  CHECK(flip(flip(t)) == t);
  Tensor2 anti = rand_antisym_tensor(rng, s);
  CHECK(is_antisymmetric(anti));
  Tensor2 sym = add(t, flip(t));
  if (!is_zero(sym)) CHECK_FALSE(is_antisymmetric(sym));
}

TEST_CASE("cyclic shift has order three and swap12 order two") {
  std::mt19937 rng(12);
  Space s = sl2_space();
  Tensor3 t = zero_tensor3(s, s, s);
  for (auto& c : t.c) c = rand_scalar(rng);
  CHECK(cyclic_shift(cyclic_shift(cyclic_shift(t))) == t);
  CHECK(swap12(swap12(t)) == t);
  CHECK(cyclic_shift(t).at(0, 1, 2) == t.at(1, 2, 0));
  CHECK(swap12(t).at(0, 1, 2) == t.at(1, 0, 2));
}

TEST_CASE("map_from_tensor and tensor_from_map invert each other") {
  std::mt19937 rng(13);
  Space s = sl2_space();
  Tensor2 t = rand_tensor(rng, s);
  CHECK(tensor_from_map(map_from_tensor(t)) == t);

  LinearMap f = make_map(na2_space(), sl2_space(), rand_mat(rng, 3, 2));
  CHECK(map_from_tensor(tensor_from_map(f)) == f);

  // The tensor sum_ij c(i,j) e_i (x) f_j sends e_i* to the i-th row.
  LinearMap g = map_from_tensor(t);
  CHECK(g.dom == dual_of(s));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g.m.at(j, i) == t.c.at(i, j));
}

TEST_CASE("hom_tensor embeds a map against the dual basis") {
  std::mt19937 rng(14);
  LinearMap f = make_map(na2_space(), sl2_space(), rand_mat(rng, 3, 2));
  Tensor2 t = hom_tensor(f);
  CHECK(t.s1 == sl2_space());
  CHECK(t.s2 == dual_of(na2_space()));
  CHECK(t.c == f.m);
}

TEST_CASE("transpose_map is an involution across duals") {
  std::mt19937 rng(15);
  LinearMap f = make_map(na2_space(), sl2_space(), rand_mat(rng, 3, 2));
  LinearMap ft = transpose_map(f);
  CHECK(ft.dom == dual_of(sl2_space()));
  CHECK(ft.cod == dual_of(na2_space()));
  CHECK(ft.m == f.m.transpose());
  CHECK(transpose_map(ft) == f);
}

TEST_CASE("linear maps compose and invert exactly") {
  Space s = na2_space();
  LinearMap a = make_map(s, s, mati(2, 2, {1, 1, 0, 1}));
  LinearMap b = make_map(s, s, mati(2, 2, {2, 0, 0, 3}));
  CHECK(compose(a, b).m == mati(2, 2, {2, 3, 0, 3}));
  auto inv = inverse_map(a);
  REQUIRE(inv.has_value());
  CHECK(compose(a, *inv) == identity_map(s));
  CHECK_FALSE(inverse_map(zero_map(s, s)).has_value());

  Vector v = apply(a, basis_vector(s, 1));
  CHECK(v.c == std::vector<Scalar>{Scalar(1), Scalar(1)});
}

TEST_CASE("apply2 and slot actions act componentwise") {
  Space s = na2_space();
  Mat A = mati(2, 2, {0, 1, 1, 0});
  Tensor2 t = zero_tensor2(s, s);
  t.c.at(0, 1) = Scalar(1);
  Tensor2 lhs = act_left(A, t);
  CHECK(lhs.c.at(1, 1) == Scalar(1));
  CHECK(lhs.c.at(0, 1).is_zero());
  Tensor2 rhs = act_right(A, t);
  CHECK(rhs.c.at(0, 0) == Scalar(1));
  CHECK(act_both(A, t) == add(lhs, rhs));
  LinearMap f = make_map(s, s, A);
  CHECK(apply2(f, identity_map(s), t) == lhs);
}

TEST_CASE("products evaluate bilinearly over coordinates") {
  BilinearProduct br = sl2_bracket();
  Space s = br.space;
  CHECK(eval_basis(br, 1, 0) == std::vector<Scalar>{Scalar(2), Scalar(0), Scalar(0)});
  Vector x = add(basis_vector(s, 0), basis_vector(s, 2)); // x + y
  Vector hx = eval(br, basis_vector(s, 1), x);            // [h, x+y] = 2x - 2y
  CHECK(pretty(hx) == "2*x - 2*y");
  CHECK(left_op(br, 1).col(0) == eval_basis(br, 1, 0));
  CHECK(right_op(br, 0).col(1) == eval_basis(br, 1, 0));
  CHECK(is_antisymmetric_product(br));
  CHECK_FALSE(is_antisymmetric_product(sl2_circ()));
}

TEST_CASE("commutator of an antisymmetric product doubles it") {
  BilinearProduct br = sl2_bracket();
  BilinearProduct c = commutator(br);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(c.coeff(i, j, k) == Scalar(2) * br.coeff(i, j, k));
}

TEST_CASE("block closure and restriction recover a summand") {
  BilinearProduct br = sl2_bracket();
  Representation ar = adjoint_rep(make_lie(br));
  BilinearProduct sd = semidirect_bracket(ar);
  CHECK(block_closed(sd, 0, 3));
  CHECK(block_closed(sd, 3, 3)); // the module block multiplies to zero, so it stays inside
  BilinearProduct back = restrict_block(sd, 0, br.space);
  CHECK(back == br);
}

TEST_CASE("dualize_product and dualize_coproduct are mutually inverse") {
  BilinearProduct br = sl2_bracket();
  Coproduct d = dualize_product(br);
  CHECK(d.space == dual_of(br.space));
  CHECK(dualize_coproduct(d) == br);

  std::mt19937 rng(16);
  Space s = na2_space();
  std::vector<Tensor2> cols;
  for (int i = 0; i < s.dim(); ++i) cols.push_back(rand_tensor(rng, s));
  Coproduct raw = make_coproduct(s, cols);
  CHECK(dualize_product(dualize_coproduct(raw)) == raw);
}

TEST_CASE("coproducts expand into three-slot tensors") {
  BilinearProduct br = sl2_bracket();
  Coproduct d = dualize_product(br);
  Space ds = d.space;
  Tensor2 seed = zero_tensor2(ds, ds);
  seed.c.at(0, 1) = Scalar(1);
  Tensor3 l = expand_left(d, seed);
  Tensor3 r = expand_right(d, seed);
  // (d (x) id) only expands the first slot; the second stays put.
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      if (k != 1) CHECK(l.at(0, j, k).is_zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 0) CHECK(r.at(i, j, 0).is_zero());
}

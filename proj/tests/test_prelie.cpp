#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace rbla;
using namespace fx;

namespace {

BilinearProduct sub_products(const BilinearProduct& a, const BilinearProduct& b) {
  std::vector<Mat> L;
  for (size_t i = 0; i < a.L.size(); ++i) L.push_back(a.L[i] - b.L[i]);
  return make_product(a.space, std::move(L));
}

// Defect of x <| (y <| z) + y <| (x o z) - z <| (x o y) - x o (y <| z) on a
// basis triple.
Vector skew_defect(const BilinearProduct& circ, const BilinearProduct& tl, int i, int j,
                   int k) {
  const Space& s = circ.space;
  Vector x = basis_vector(s, i), y = basis_vector(s, j), z = basis_vector(s, k);
  Vector acc = eval(tl, x, eval(tl, y, z));
  acc = add(acc, eval(tl, y, eval(circ, x, z)));
  acc = sub(acc, eval(tl, z, eval(circ, x, y)));
  acc = sub(acc, eval(circ, x, eval(tl, y, z)));
  return acc;
}

bool skew_equation_holds(const BilinearProduct& circ, const BilinearProduct& tl) {
  const int n = circ.space.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(skew_defect(circ, tl, i, j, k))) return false;
  return true;
}

PreLieRep left_multiplication_triple(const BilinearProduct& circ, const BilinearProduct& tl) {
  const int n = circ.space.dim();
  std::vector<Mat> l, r;
  for (int i = 0; i < n; ++i) {
    l.push_back(left_op(circ, i) - left_op(tl, i));
    r.push_back(-left_op(tl, i));
  }
  return PreLieRep{PreLieAlgebra{circ}, circ.space, l, r};
}

} // namespace

TEST_CASE("the induced product on the simple algebra matches all nine golden values") {
  PreLieAlgebra A = induce_prelie(sl2_rb());
  CHECK(A.prod == sl2_circ());
  CHECK_PASS(check_prelie(A.prod));
  CHECK(pretty(Vector{A.space(), eval_basis(A.prod, 2, 0)}) == "-4*x + 3*h");
}

TEST_CASE("inducing a product needs weight zero") {
  RBLieAlgebra rb = make_rb_lie(make_lie(na2_bracket()), Scalar(1),
                                mati(2, 2, {-1, 2, 0, 3}));
  CHECK_THROWS_AS(induce_prelie(rb), InputError);
}

TEST_CASE("weight-zero corpus members always induce a valid product") {
  LieAlgebra g = make_lie(na2_bracket());
  for (long b = -2; b <= 2; ++b)
    for (long d = -2; d <= 2; ++d) {
      // a = c = 0 satisfies the operator criterion at weight zero.
      Mat P = mati(2, 2, {0, b, 0, d});
      RBLieAlgebra rb = make_rb_lie(g, Scalar(0), P);
      CHECK_PASS(check_prelie(induce_prelie(rb).prod));
    }
  RBLieAlgebra zero = make_rb_lie(g, Scalar(0), Mat(2, 2));
  CHECK(induce_prelie(zero).prod == zero_product(g.space()));
}

TEST_CASE("the commutator of the induced product is the descendent bracket") {
  RBLieAlgebra rb = sl2_rb();
  PreLieAlgebra A = induce_prelie(rb);
  LieAlgebra under = subadjacent_lie(A);
  CHECK(under.bracket == descendent_rb_lie(rb).alg.bracket);

  // x o y - y o x = [Px, y] + [x, Py] on every basis pair.
  const Space& s = rb.space();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vector lhs = sub(eval(A.prod, basis_vector(s, i), basis_vector(s, j)),
                       eval(A.prod, basis_vector(s, j), basis_vector(s, i)));
      Vector rhs = add(eval(rb.alg.bracket, Vector{s, rb.P.col(i)}, basis_vector(s, j)),
                       eval(rb.alg.bracket, basis_vector(s, i), Vector{s, rb.P.col(j)}));
      CHECK(is_zero(fx::sub(lhs, rhs)));
    }
}

TEST_CASE("the operator survives onto the induced product and its sub-adjacent wrap") {
  RBLieAlgebra rb = sl2_rb();
  PreLieAlgebra A = induce_prelie(rb);
  CHECK_PASS(check_rb_prelie(A.prod, Scalar(0), rb.P));
  RBPreLieAlgebra rbp = make_rb_prelie(A, Scalar(0), rb.P);
  RBLieAlgebra wrapped = subadjacent_rb(rbp);
  CHECK(wrapped.P == rb.P);
  CHECK_PASS(check_rb_lie(wrapped.alg.bracket, Scalar(0), wrapped.P));

  CHECK_THROWS_AS(make_rb_prelie(A, Scalar(0), bump(rb.P, 0, 0, 1)), StructureError);
}

TEST_CASE("the form-adjoint companion reproduces the golden left product") {
  RBLieAlgebra rb = sl2_rb();
  Mat phat = adjoint_operator_wrt_form(sl2_form(), rb.P);
  CHECK(phat == sl2_Phat());
  CHECK_PASS(check_admissible_op(rb, phat));

  LDendAlgebra ld = special_from_admissible(rb, phat);
  CHECK(ld.tri_l == sl2_tri_l());
  CHECK(ld.tri_r == sub_products(sl2_circ(), sl2_tri_l()));
  CHECK_PASS(check_ldendriform(ld, true));
  CHECK(is_antisymmetric_product(ld.tri_l));

  auto [horizontal, vertical] = horizontal_vertical(ld);
  CHECK(horizontal == sl2_circ());
  CHECK(vertical == sl2_circ());
}

TEST_CASE("the two operator matrices commute") {
  Mat P = sl2_P();
  Mat phat = sl2_Phat();
  CHECK(P * phat == phat * P);
}

TEST_CASE("horizontal equals vertical exactly for an antisymmetric left product") {
  LDendAlgebra special = special_from_admissible(sl2_rb(), sl2_Phat());
  auto [h1, v1] = horizontal_vertical(special);
  CHECK(h1 == v1);

  LDendAlgebra lopsided{sl2_circ(), sl2_circ()}; // left product not antisymmetric
  auto [h2, v2] = horizontal_vertical(lopsided);
  CHECK_FALSE(h2 == v2);
}

TEST_CASE("the invariant form route and the companion route build the same structure") {
  RBLieAlgebra rb = sl2_rb();
  PreLieAlgebra A = induce_prelie(rb);
  BilinearForm B = sl2_form();
  CHECK_PASS(check_left_invariant_form(A, B));

  LDendAlgebra via_form = special_from_left_invariant_form(A, B);
  LDendAlgebra via_companion = special_from_admissible(rb, adjoint_operator_wrt_form(B, rb.P));
  CHECK(via_form.tri_l == via_companion.tri_l);
  CHECK(via_form.tri_r == via_companion.tri_r);

  BilinearForm id_form{A.space(), Mat::identity(3)};
  CHECK_FAIL(check_left_invariant_form(A, id_form));
}

TEST_CASE("left multiplication with the operator is a module of the induced product") {
  RBLieAlgebra rb = sl2_rb();
  Representation ar = adjoint_rep(rb.alg);
  PreLieRep rep = induced_prelie_representation(rb, ar, rb.P);
  CHECK_PASS(check_prelie_representation(rep));
  CHECK_PASS(check_prelie_representation(dual_prelie_representation(rep)));
}

TEST_CASE("dual module laws pass exactly when the primal laws do") {
  RBLieAlgebra rb = sl2_rb();
  std::mt19937 rng(41);
  int pass_seen = 0, fail_seen = 0;
  for (int trial = 0; trial < 16; ++trial) {
    PreLieRep rep = induced_prelie_representation(rb, adjoint_rep(rb.alg), rb.P);
    if (trial > 0) {
      std::uniform_int_distribution<int> pick(0, 2);
      auto& family = (trial % 2 == 0) ? rep.l : rep.r;
      family[static_cast<size_t>(pick(rng))] =
          bump(family[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
    }
    bool direct = check_prelie_representation(rep).pass();
    bool dual = check_prelie_representation(dual_prelie_representation(rep)).pass();
    CHECK(direct == dual);
    (direct ? pass_seen : fail_seen) += 1;
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);
}

TEST_CASE("four equivalent readings of the special condition agree on every instance") {
  PreLieAlgebra A = induce_prelie(sl2_rb());
  std::mt19937 rng(42);
  std::vector<BilinearProduct> lefts = {sl2_tri_l(), zero_product(A.space())};
  for (int trial = 0; trial < 6; ++trial) {
    // Random antisymmetric candidates, most of which break the condition.
    std::vector<Mat> L(3, Mat(3, 3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j)
        for (int k = 0; k < 3; ++k) {
          Scalar c = rand_scalar(rng);
          L[static_cast<size_t>(i)].at(k, j) = c;
          L[static_cast<size_t>(j)].at(k, i) = -c;
        }
    lefts.push_back(make_product(A.space(), L));
  }

  int pass_seen = 0, fail_seen = 0;
  for (const BilinearProduct& tl : lefts) {
    bool laws = check_ldendriform(LDendAlgebra{sub_products(A.prod, tl), tl}, true).pass();
    bool equation = skew_equation_holds(A.prod, tl);
    PreLieRep triple = left_multiplication_triple(A.prod, tl);
    bool module = check_prelie_representation(triple).pass();
    bool dual_module = check_prelie_representation(dual_prelie_representation(triple)).pass();
    CHECK(laws == equation);
    CHECK(laws == module);
    CHECK(laws == dual_module);
    (laws ? pass_seen : fail_seen) += 1;
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);
}

TEST_CASE("minus-transpose left multiplications form a matched pair on the dual") {
  RBLieAlgebra rb = sl2_rb();
  PreLieAlgebra A = induce_prelie(rb);
  Mat Q = -rb.P;
  BilinearProduct tl = special_from_admissible(rb, Q).tri_l;

  Space ds = dual_of(rb.space());
  PreLieAlgebra B{zero_product(ds)};
  std::vector<Mat> lA, rA, lB, rB;
  for (int i = 0; i < 3; ++i) {
    lA.push_back(-left_op(A.prod, i).transpose());
    rA.push_back(-left_op(tl, i).transpose());
  }
  for (int m = 0; m < 3; ++m) {
    lB.push_back(Mat(3, 3));
    rB.push_back(Mat(3, 3));
  }
  MatchedPairPreLie mp{A, B, lA, rA, lB, rB};
  CHECK_PASS(check_matched_pair_prelie(mp));
  PreLieAlgebra dbl = prelie_bowtie(mp);
  CHECK(dbl.space().dim() == 6);
  CHECK(restrict_block(dbl.prod, 0, A.space()) == A.prod);

  MatchedPairPreLie bad = mp;
  bad.lA[0] = bump(bad.lA[0], 0, 0, 1);
  bool mp_ok = check_matched_pair_prelie(bad).pass();
  bool dbl_ok = check_prelie(prelie_bowtie_product(bad)).pass();
  CHECK_FALSE(mp_ok);
  CHECK(mp_ok == dbl_ok);
}

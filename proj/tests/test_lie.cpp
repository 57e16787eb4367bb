#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace rbla;
using namespace fx;

namespace {

// Coadjoint data for a matched pair with an abelian partner on the dual space.
MatchedPairLie coadjoint_pair(const LieAlgebra& g) {
  Space ds = dual_of(g.space());
  LieAlgebra h = make_lie(zero_product(ds));
  std::vector<Mat> rho, mu;
  for (int i = 0; i < g.space().dim(); ++i) rho.push_back(-ad_op(g, i).transpose());
  for (int m = 0; m < ds.dim(); ++m) mu.push_back(Mat(g.space().dim(), g.space().dim()));
  return MatchedPairLie{g, h, rho, mu};
}

} // namespace

TEST_CASE("check_lie accepts the simple algebra and rejects broken data") {
  CHECK_PASS(check_lie(sl2_bracket()));
  CHECK_PASS(check_lie(na2_bracket()));
  CHECK_PASS(check_lie(ab2_bracket()));

  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e3 breaks the Jacobi identity.
  Space s = make_space("j", {"e1", "e2", "e3"});
  BilinearProduct bad = antiprod(s, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 2, -1}});
  CheckReport rep = check_lie(bad);
  CHECK_FALSE(rep.pass());
  CHECK(has_tag(rep, "jacobi"));
  CHECK_THROWS_AS(make_lie(bad), StructureError);

  BilinearProduct skew = bump_product(sl2_bracket(), 0, 0, 1, 1); // e1*e1 nonzero
  CheckReport rep2 = check_lie(skew);
  CHECK_FALSE(rep2.pass());
  CHECK(has_tag(rep2, "antisymmetry"));
}

TEST_CASE("adjoint representation satisfies the module laws") {
  LieAlgebra g = make_lie(sl2_bracket());
  Representation ar = adjoint_rep(g);
  CHECK_PASS(check_representation(ar));
  CHECK(ad_op(g, 1) == mati(3, 3, {2, 0, 0, 0, 0, 0, 0, 0, -2}));
  Vector h = basis_vector(g.space(), 1);
  CHECK(ad(g, h).m == ad_op(g, 1));
  CHECK(ar.rho_map(h).m == ad_op(g, 1));

  Representation broken = ar;
  broken.rho[0] = bump(broken.rho[0], 0, 0, 1);
  CHECK_FAIL(check_representation(broken));
}

TEST_CASE("dual representation passes exactly when the original does") {
  LieAlgebra g = make_lie(sl2_bracket());
  std::mt19937 rng(21);
  for (int trial = 0; trial < 24; ++trial) {
    Representation r = adjoint_rep(g);
    if (trial > 0) {
      // Scramble one action matrix; some scrambles still satisfy the laws.
      std::uniform_int_distribution<int> pick(0, 2);
      r.rho[static_cast<size_t>(pick(rng))] =
          bump(r.rho[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
    }
    bool direct = check_representation(r).pass();
    bool dual = check_representation(dual_representation(r)).pass();
    CHECK(direct == dual);
  }
  CHECK(dual_representation(adjoint_rep(g)).module == dual_of(g.space()));
}

TEST_CASE("semidirect bracket is Lie exactly when the action is a representation") {
  LieAlgebra g = make_lie(sl2_bracket());
  std::mt19937 rng(22);
  int pass_seen = 0, fail_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    Representation r = adjoint_rep(g);
    if (trial > 0) {
      std::uniform_int_distribution<int> pick(0, 2);
      r.rho[static_cast<size_t>(pick(rng))] =
          bump(r.rho[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
    }
    bool rep_ok = check_representation(r).pass();
    bool sd_ok = check_lie(semidirect_bracket(r)).pass();
    CHECK(rep_ok == sd_ok);
    (rep_ok ? pass_seen : fail_seen) += 1;
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);

  LieAlgebra sd = semidirect_product_lie(adjoint_rep(g));
  CHECK(sd.space().dim() == 6);
  CHECK(restrict_block(sd.bracket, 0, g.space()) == g.bracket);
}

TEST_CASE("the invariant form on the simple algebra passes all three requirements") {
  LieAlgebra g = make_lie(sl2_bracket());
  CHECK_PASS(check_bilinear_form(g, sl2_form()));

  BilinearForm zero{g.space(), Mat(3, 3)};
  CHECK_FAIL(check_bilinear_form(g, zero));
  FormRequirements degenerate_ok{true, true, false};
  CHECK_PASS(check_bilinear_form(g, zero, degenerate_ok));

  BilinearForm lopsided{g.space(), mati(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0})};
  CheckReport rep = check_bilinear_form(g, lopsided);
  CHECK(has_tag(rep, "symmetry"));

  BilinearForm identity_form{g.space(), Mat::identity(3)};
  CheckReport rep2 = check_bilinear_form(g, identity_form);
  CHECK(has_tag(rep2, "invariance"));
}

TEST_CASE("the adjoint operator under the form matches its golden matrix") {
  Mat phat = adjoint_operator_wrt_form(sl2_form(), sl2_P());
  CHECK(phat == sl2_Phat());

  // Defining identity B(Px, y) = B(x, P^y) on every basis pair.
  BilinearForm B = sl2_form();
  Space s = B.space;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vector pi{s, sl2_P().col(i)};
      Vector qj{s, phat.col(j)};
      CHECK(eval_form(B, pi, basis_vector(s, j)) == eval_form(B, basis_vector(s, i), qj));
    }

  // With a symmetric form, taking the adjoint twice returns the original.
  CHECK(adjoint_operator_wrt_form(B, phat) == sl2_P());
  CHECK(adjoint_operator_wrt_form(B, Mat::identity(3)) == Mat::identity(3));
}

TEST_CASE("coadjoint matched pair passes and its bowtie is Lie") {
  LieAlgebra g = make_lie(sl2_bracket());
  MatchedPairLie mp = coadjoint_pair(g);
  CHECK_PASS(check_matched_pair_lie(mp));
  LieAlgebra dbl = bowtie_lie(mp);
  CHECK(dbl.space().dim() == 6);
  CHECK(restrict_block(dbl.bracket, 0, g.space()) == g.bracket);
  CHECK(block_closed(dbl.bracket, 3, 3));
}

TEST_CASE("bowtie is Lie exactly when the matched pair conditions hold") {
  LieAlgebra g = make_lie(sl2_bracket());
  std::mt19937 rng(23);
  int pass_seen = 0, fail_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    MatchedPairLie mp = coadjoint_pair(g);
    if (trial > 0) {
      std::uniform_int_distribution<int> pick(0, 2);
      if (trial % 2 == 0)
        mp.rho[static_cast<size_t>(pick(rng))] =
            bump(mp.rho[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
      else
        mp.mu[static_cast<size_t>(pick(rng))] =
            bump(mp.mu[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
    }
    bool mp_ok = check_matched_pair_lie(mp).pass();
    bool lie_ok = check_lie(bowtie_bracket(mp)).pass();
    CHECK(mp_ok == lie_ok);
    (mp_ok ? pass_seen : fail_seen) += 1;
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);
}

TEST_CASE("a one-dimensional partner acting by a scalar forms a matched pair") {
  LieAlgebra g = make_lie(na2_bracket());
  LieAlgebra h = make_lie(zero_product(make_space("h1", {"f1"})));
  // e1 must act by zero for the action to be a module over [e1,e2] = e1.
  std::vector<Mat> rho = {Mat(1, 1), mati(1, 1, {5})};
  std::vector<Mat> mu = {Mat(2, 2)};
  MatchedPairLie mp{g, h, rho, mu};
  CHECK_PASS(check_matched_pair_lie(mp));
  CHECK_PASS(check_lie(bowtie_bracket(mp)));

  MatchedPairLie bad = mp;
  bad.rho[0] = mati(1, 1, {1}); // e1 acting nontrivially breaks the module law
  CHECK_FAIL(check_matched_pair_lie(bad));
  CHECK_FAIL(check_lie(bowtie_bracket(bad)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace rbla;
using namespace fx;

namespace {

Mat p2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Mat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

const std::vector<Scalar>& weights() {
  static const std::vector<Scalar> w = {Scalar(0), Scalar(1), Scalar(-1)};
  return w;
}

// A batch of verified operator instances on the nonabelian 2-dimensional
// algebra, one per weight, picked from the criterion's solution set.
std::vector<RBLieAlgebra> na2_corpus() {
  std::vector<RBLieAlgebra> out;
  LieAlgebra g = make_lie(na2_bracket());
  for (const Scalar& w : weights()) {
    out.push_back(make_rb_lie(g, w, p2(-w, Scalar(1), Scalar(0), Scalar(2))));
    out.push_back(make_rb_lie(g, w, p2(Scalar(0), Scalar(0), Scalar(0), Scalar(0))));
    out.push_back(make_rb_lie(g, w, p2(Scalar(0), Scalar(0), Scalar(0), Scalar(5))));
  }
  // The weight-1 instance used across the fixture files.
  out.push_back(make_rb_lie(g, Scalar(1), p2(Scalar(-1), Scalar(2), Scalar(0), Scalar(3))));
  return out;
}

} // namespace

TEST_CASE("the weight-zero operator identity holds on the simple algebra") {
  CHECK_PASS(check_rb_lie(sl2_bracket(), Scalar(0), sl2_P()));

  Mat broken(3, 3);
  broken.at(0, 0) = Scalar(1);
  CheckReport rep = check_rb_lie(sl2_bracket(), Scalar(0), broken);
  CHECK_FALSE(rep.pass());
  CHECK(has_tag(rep, "rota-baxter"));
}

TEST_CASE("exhaustive 2x2 sweep agrees with the closed-form criterion") {
  BilinearProduct br = na2_bracket();
  for (const Scalar& w : weights()) {
    int pass_seen = 0, fail_seen = 0;
    for (long a = -1; a <= 1; ++a)
      for (long b = -1; b <= 1; ++b)
        for (long c = -1; c <= 1; ++c)
          for (long d = -1; d <= 1; ++d) {
            Mat P = p2(Scalar(a), Scalar(b), Scalar(c), Scalar(d));
            bool oracle = na2_oracle(Scalar(a), Scalar(b), Scalar(c), Scalar(d), w);
            bool checked = check_rb_lie(br, w, P).pass();
            CHECK(oracle == checked);
            (oracle ? pass_seen : fail_seen) += 1;
          }
    CHECK(pass_seen > 0);
    CHECK(fail_seen > 0);
  }
}

TEST_CASE("the criterion also covers rational operator entries") {
  BilinearProduct br = na2_bracket();
  std::vector<std::vector<Scalar>> tuples = {
      {Scalar(-1), Scalar(7, 3), Scalar(0), Scalar(5, 2)},  // passes at weight 1
      {Scalar(1, 2), Scalar(1, 3), Scalar(1, 5), Scalar(-1, 2)},
      {Scalar(-1, 2), Scalar(2), Scalar(0), Scalar(1, 4)},
      {Scalar(2, 3), Scalar(-1, 6), Scalar(3), Scalar(1)},
  };
  for (const Scalar& w : weights())
    for (const auto& t : tuples) {
      bool oracle = na2_oracle(t[0], t[1], t[2], t[3], w);
      CHECK(check_rb_lie(br, w, p2(t[0], t[1], t[2], t[3])).pass() == oracle);
    }
  CHECK(na2_oracle(Scalar(-1), Scalar(7, 3), Scalar(0), Scalar(5, 2), Scalar(1)));
}

TEST_CASE("every operator works on an abelian algebra at every weight") {
  std::mt19937 rng(31);
  for (const Scalar& w : weights())
    for (int trial = 0; trial < 5; ++trial)
      CHECK_PASS(check_rb_lie(ab2_bracket(), w, rand_mat(rng, 2, 2)));
}

TEST_CASE("the descendent bracket carries the same operator and weight") {
  RBLieAlgebra rb = sl2_rb();
  RBLieAlgebra desc = descendent_rb_lie(rb);
  CHECK(desc.weight == rb.weight);
  CHECK(desc.P == rb.P);
  // [x,y]' = [Px,y] + [x,Py] = 4x - 2h on the first/last basis pair.
  CHECK(eval_basis(desc.alg.bracket, 0, 2) ==
        std::vector<Scalar>{Scalar(4), Scalar(-2), Scalar(0)});
  for (const RBLieAlgebra& rb2 : na2_corpus()) CHECK_PASS(check_rb_lie(
      descendent_rb_lie(rb2).alg.bracket, rb2.weight, rb2.P));
}

TEST_CASE("the three standard companions are admissible for every corpus member") {
  std::vector<RBLieAlgebra> corpus = na2_corpus();
  corpus.push_back(sl2_rb());
  std::mt19937 rng(32);
  for (const Scalar& w : weights())
    corpus.push_back(make_rb_lie(make_lie(ab2_bracket()), w, rand_mat(rng, 2, 2)));
  for (const RBLieAlgebra& rb : corpus) {
    auto named = standard_admissibles(rb);
    REQUIRE(named.size() == 3);
    for (const auto& [name, Q] : named) {
      CheckReport rep = check_admissible_op(rb, Q);
      CHECK_MESSAGE(rep.pass(), name, " on ", rb.space().name, ": ", summary(rep));
    }
  }
}

TEST_CASE("a paired module operator yields an admissible companion") {
  // (adjoint action, P) is always paired, so -P - w*id is admissible on it;
  // dually, transporting the standard companion gives one on the dual module.
  std::vector<RBLieAlgebra> corpus = na2_corpus();
  corpus.push_back(sl2_rb());
  for (const RBLieAlgebra& rb : corpus) {
    Representation ar = adjoint_rep(rb.alg);
    CHECK_PASS(check_rb_rep_identity(rb, ar, rb.P));
    CHECK_PASS(check_admissible(rb, ar, admissible_from_partner(rb.P, rb.weight)));

    Representation coad = dual_representation(ar);
    Mat alpha_star = admissible_from_partner(rb.P, rb.weight).transpose();
    CHECK_PASS(check_rb_rep_identity(rb, coad, alpha_star));
    CHECK_PASS(check_admissible(rb, coad, admissible_from_partner(alpha_star, rb.weight)));
  }
}

TEST_CASE("admissibility agrees with the operator identity on the dual module") {
  std::vector<RBLieAlgebra> corpus = na2_corpus();
  corpus.push_back(sl2_rb());
  std::mt19937 rng(33);
  int pass_seen = 0, fail_seen = 0;
  for (const RBLieAlgebra& rb : corpus) {
    Representation ar = adjoint_rep(rb.alg);
    const int n = rb.space().dim();
    std::vector<Mat> betas = {-rb.P - rb.weight * Mat::identity(n), Mat(n, n)};
    for (int trial = 0; trial < 3; ++trial) betas.push_back(rand_mat(rng, n, n));
    for (const Mat& beta : betas) {
      CheckReport direct = check_admissible(rb, ar, beta);
      CHECK_FALSE(has_tag(direct, "route-agreement"));
      Representation dual = dual_representation(ar);
      CheckReport via_dual = check_rb_rep_identity(rb, dual, beta.transpose());
      CHECK(direct.pass() == via_dual.pass());
      (direct.pass() ? pass_seen : fail_seen) += 1;
    }
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);
}

TEST_CASE("the double operator works exactly when the module pairing holds") {
  std::vector<RBLieAlgebra> corpus = na2_corpus();
  corpus.push_back(sl2_rb());
  std::mt19937 rng(34);
  int pass_seen = 0, fail_seen = 0;
  for (const RBLieAlgebra& rb : corpus) {
    const int n = rb.space().dim();
    std::vector<Mat> alphas = {rb.P, -rb.P - rb.weight * Mat::identity(n)};
    for (int trial = 0; trial < 3; ++trial) alphas.push_back(rand_mat(rng, n, n));
    for (const Mat& alpha : alphas) {
      Representation ar = adjoint_rep(rb.alg);
      bool rep_ok = check_rb_representation(rb, RBRep{ar, alpha}).pass();
      bool dbl_ok =
          check_rb_lie(semidirect_bracket(ar), rb.weight, block_diag(rb.P, alpha)).pass();
      CHECK(rep_ok == dbl_ok);
      (rep_ok ? pass_seen : fail_seen) += 1;
    }
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);

  // The verified constructor accepts the paired case and rejects a broken one.
  RBLieAlgebra rb = sl2_rb();
  RBLieAlgebra sd = semidirect_product_rb(rb, RBRep{adjoint_rep(rb.alg), rb.P});
  CHECK(sd.space().dim() == 6);
  CHECK_THROWS_AS(
      semidirect_product_rb(rb, RBRep{adjoint_rep(rb.alg), bump(rb.P, 0, 0, 1)}),
      StructureError);
}

TEST_CASE("a corrupted module action breaks both sides of the double criterion") {
  RBLieAlgebra rb = sl2_rb();
  Representation ar = adjoint_rep(rb.alg);
  ar.rho[0] = bump(ar.rho[0], 1, 1, 1);
  bool rep_ok = check_rb_representation(rb, RBRep{ar, rb.P}).pass();
  bool dbl_ok = check_rb_lie(semidirect_bracket(ar), rb.weight, block_diag(rb.P, rb.P)).pass();
  CHECK_FALSE(rep_ok);
  CHECK(rep_ok == dbl_ok);
}

TEST_CASE("coadjoint actions form a matched pair with the transported companion") {
  RBLieAlgebra g = sl2_rb();
  Space ds = dual_of(g.space());
  RBLieAlgebra h = make_rb_lie(make_lie(zero_product(ds)), Scalar(0), -g.P.transpose());
  std::vector<Mat> rho, mu;
  for (int i = 0; i < 3; ++i) rho.push_back(-ad_op(g.alg, i).transpose());
  for (int m = 0; m < 3; ++m) mu.push_back(Mat(3, 3));
  MatchedPairRB mp{g, h, rho, mu};
  CHECK_PASS(check_matched_pair_rb(mp));

  RBLieAlgebra dbl = rb_bowtie(mp);
  CHECK(dbl.space().dim() == 6);
  CHECK(dbl.P == block_diag(g.P, h.P));

  // Same shape at weight one on the 2-dimensional family.
  RBLieAlgebra g2 = make_rb_lie(make_lie(na2_bracket()), Scalar(1),
                                p2(Scalar(-1), Scalar(2), Scalar(0), Scalar(3)));
  RBLieAlgebra h2 = make_rb_lie(make_lie(zero_product(make_space("h1", {"f1"}))), Scalar(1),
                                mati(1, 1, {-1}));
  MatchedPairRB mp2{g2, h2, {Mat(1, 1), mati(1, 1, {5})}, {Mat(2, 2)}};
  CHECK_PASS(check_matched_pair_rb(mp2));
  CHECK_PASS(check_rb_lie(bowtie_bracket(mp2.lie_part()), Scalar(1), block_diag(g2.P, h2.P)));
}

TEST_CASE("bowtie operator verdict agrees with the matched pair verdict") {
  RBLieAlgebra g = sl2_rb();
  Space ds = dual_of(g.space());
  std::mt19937 rng(35);
  int pass_seen = 0, fail_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    RBLieAlgebra h = make_rb_lie(make_lie(zero_product(ds)), Scalar(0), -g.P.transpose());
    std::vector<Mat> rho, mu;
    for (int i = 0; i < 3; ++i) rho.push_back(-ad_op(g.alg, i).transpose());
    for (int m = 0; m < 3; ++m) mu.push_back(Mat(3, 3));
    MatchedPairRB mp{g, h, rho, mu};
    if (trial > 0) {
      std::uniform_int_distribution<int> pick(0, 2);
      switch (trial % 3) {
        case 0:
          mp.rho[static_cast<size_t>(pick(rng))] =
              bump(mp.rho[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
          break;
        case 1:
          mp.mu[static_cast<size_t>(pick(rng))] =
              bump(mp.mu[static_cast<size_t>(pick(rng))], pick(rng), pick(rng), pick(rng) - 1);
          break;
        default:
          mp.h.P = bump(mp.h.P, pick(rng), pick(rng), pick(rng) - 1);
      }
    }
    bool mp_ok = check_matched_pair_rb(mp).pass();
    bool dbl_ok = check_lie(bowtie_bracket(mp.lie_part())).pass() &&
                  check_rb_product(bowtie_bracket(mp.lie_part()), Scalar(0),
                                   block_diag(mp.g.P, mp.h.P))
                      .pass();
    CHECK(mp_ok == dbl_ok);
    (mp_ok ? pass_seen : fail_seen) += 1;
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);
}

TEST_CASE("itemized semidirect admissibility agrees with both composite routes") {
  std::vector<RBLieAlgebra> corpus = na2_corpus();
  corpus.push_back(sl2_rb());
  std::mt19937 rng(36);
  int pass_seen = 0, fail_seen = 0;
  for (const RBLieAlgebra& rb : corpus) {
    Representation ar = adjoint_rep(rb.alg);
    const int n = rb.space().dim();
    Mat id = Mat::identity(n);
    std::vector<std::pair<Mat, Mat>> companions = {
        {Mat(n, n), Mat(n, n)},
        {-(rb.weight * id), -(rb.weight * id)},
        {-rb.P - rb.weight * id, -rb.P - rb.weight * id},
    };
    for (int trial = 0; trial < 3; ++trial)
      companions.emplace_back(rand_mat(rng, n, n), rand_mat(rng, n, n));
    for (const auto& [Q, beta] : companions) {
      CheckReport rep = check_semidirect_admissibility(rb, ar, rb.P, Q, beta);
      CHECK_MESSAGE(!has_tag(rep, "route-agreement"), summary(rep));
      (rep.pass() ? pass_seen : fail_seen) += 1;
    }
  }
  CHECK(pass_seen > 0);
  CHECK(fail_seen > 0);
}

TEST_CASE("the dual modules of the operator and its form-adjoint are equivalent") {
  RBLieAlgebra rb = sl2_rb();
  Mat phat = adjoint_operator_wrt_form(sl2_form(), rb.P);
  RBRep direct{adjoint_rep(rb.alg), rb.P};
  RBRep dual{dual_representation(adjoint_rep(rb.alg)), phat.transpose()};
  LinearMap phi = make_map(rb.space(), dual_of(rb.space()), sl2_form().b);
  CHECK_PASS(check_rep_equivalence(direct, dual, phi));

  // The map must be invertible and intertwine both structures.
  LinearMap degenerate = make_map(rb.space(), dual_of(rb.space()), Mat(3, 3));
  CheckReport rep = check_rep_equivalence(direct, dual, degenerate);
  CHECK(has_tag(rep, "invertibility"));
  LinearMap twisted = make_map(rb.space(), dual_of(rb.space()), bump(sl2_form().b, 0, 0, 1));
  CHECK_FAIL(check_rep_equivalence(direct, dual, twisted));
}

TEST_CASE("admissibility checks validate shapes") {
  RBLieAlgebra rb = sl2_rb();
  CHECK_THROWS_AS(check_admissible_op(rb, Mat(2, 2)), InputError);
  CHECK_THROWS_AS(check_rb_lie(sl2_bracket(), Scalar(0), Mat(2, 3)), InputError);
}

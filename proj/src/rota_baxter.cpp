#include "rota_baxter.hpp"

#include "error.hpp"

namespace rbla {

namespace {

std::string w1(const Space& s, int i) { return "(" + s.basis[static_cast<size_t>(i)] + ")"; }

std::string w2(const Space& s, int i, int j) {
  return "(" + s.basis[static_cast<size_t>(i)] + "," + s.basis[static_cast<size_t>(j)] + ")";
}

Tensor2 op_defect(const Space& module, Mat d) {
  return hom_tensor(LinearMap{module, module, std::move(d)});
}

void require_operator_shape(const Space& s, const Mat& m, const char* what) {
  if (m.rows() != s.dim() || m.cols() != s.dim())
    throw InputError(std::string(what) + " shape does not match '" + s.name + "'");
}

void require_same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.bracket != b.bracket) throw InputError("structures are over different algebras");
}

// rho(P e_i) as a matrix, P given by columns.
Mat act_through(const std::vector<Mat>& rho, const Mat& P, int i) {
  Mat m(rho[0].rows(), rho[0].cols());
  for (int k = 0; k < P.rows(); ++k) {
    const Scalar& c = P.at(k, i);
    if (!c.is_zero()) m += c * rho[static_cast<size_t>(k)];
  }
  return m;
}

// Direct admissibility defects, no dual route.
CheckReport admissible_direct(const BilinearProduct& bracket, const Scalar& weight, const Mat& P,
                              const Space& module, const std::vector<Mat>& rho, const Mat& beta) {
  CheckReport rep{"admissible", {}, 0};
  const int n = bracket.space.dim();
  for (int i = 0; i < n; ++i) {
    Mat mi = act_through(rho, P, i);
    Mat d = beta * mi - mi * beta - beta * rho[static_cast<size_t>(i)] * beta -
            weight * (rho[static_cast<size_t>(i)] * beta);
    if (!d.is_zero()) rep.add("admissibility", w1(bracket.space, i), op_defect(module, d));
  }
  return rep;
}

} // namespace

CheckReport check_rb_product(const BilinearProduct& p, const Scalar& weight, const Mat& P) {
  Stopwatch sw;
  CheckReport rep{"rota-baxter", {}, 0};
  require_operator_shape(p.space, P, "operator");
  const Space& s = p.space;
  const int n = s.dim();
  for (int i = 0; i < n; ++i) {
    Vector pi{s, P.col(i)};
    Vector ei = basis_vector(s, i);
    for (int j = 0; j < n; ++j) {
      Vector pj{s, P.col(j)};
      Vector ej = basis_vector(s, j);
      Vector inner = add(add(eval(p, pi, ej), eval(p, ei, pj)), scale(weight, eval(p, ei, ej)));
      Vector d = sub(eval(p, pi, pj), Vector{s, P.apply(inner.c)});
      if (!is_zero(d)) rep.add("rota-baxter", w2(s, i, j), d);
    }
  }
  rep.ms = sw.ms();
  return rep;
}

CheckReport check_rb_lie(const BilinearProduct& bracket, const Scalar& weight, const Mat& P) {
  Stopwatch sw;
  CheckReport rep{"rb-lie", {}, 0};
  rep.append(check_lie(bracket));
  rep.append(check_rb_product(bracket, weight, P));
  rep.ms = sw.ms();
  return rep;
}

RBLieAlgebra make_rb_lie(LieAlgebra alg, Scalar weight, Mat P) {
  require_operator_shape(alg.space(), P, "operator");
  auto rep = check_rb_product(alg.bracket, weight, P);
  if (!rep.pass())
    throw StructureError("operator on '" + alg.space().name + "' fails the weight " +
                             weight.str() + " identity",
                         rep);
  return RBLieAlgebra{std::move(alg), std::move(weight), std::move(P)};
}

RBLieAlgebra descendent_rb_lie(const RBLieAlgebra& rb) {
  const BilinearProduct& b = rb.alg.bracket;
  const Space& s = b.space;
  const int n = s.dim();
  BilinearProduct out = zero_product(s);
  for (int i = 0; i < n; ++i) {
    Vector pi{s, rb.P.col(i)};
    Vector ei = basis_vector(s, i);
    for (int j = 0; j < n; ++j) {
      Vector pj{s, rb.P.col(j)};
      Vector ej = basis_vector(s, j);
      Vector v = add(add(eval(b, pi, ej), eval(b, ei, pj)), scale(rb.weight, eval(b, ei, ej)));
      out.L[static_cast<size_t>(i)].set_col(j, v.c);
    }
  }
  return make_rb_lie(make_lie(std::move(out)), rb.weight, rb.P);
}

CheckReport check_rb_rep_identity(const RBLieAlgebra& rb, const Representation& rep,
                                  const Mat& alpha) {
  Stopwatch sw;
  require_same_algebra(rep.g, rb.alg);
  require_operator_shape(rep.module, alpha, "module operator");
  CheckReport out{"rb-rep-identity", {}, 0};
  const int n = rb.space().dim();
  for (int i = 0; i < n; ++i) {
    Mat mi = act_through(rep.rho, rb.P, i);
    Mat d = mi * alpha - alpha * mi - alpha * rep.rho_at(i) * alpha -
            rb.weight * (alpha * rep.rho_at(i));
    if (!d.is_zero()) out.add("pairing", w1(rb.space(), i), op_defect(rep.module, d));
  }
  out.ms = sw.ms();
  return out;
}

CheckReport check_rb_representation(const RBLieAlgebra& rb, const RBRep& r) {
  Stopwatch sw;
  CheckReport rep{"rb-representation", {}, 0};
  rep.absorb("module", check_representation(r.rep));
  rep.append(check_rb_rep_identity(rb, r.rep, r.alpha));
  rep.ms = sw.ms();
  return rep;
}

CheckReport check_admissible(const RBLieAlgebra& rb, const Representation& rep, const Mat& beta) {
  Stopwatch sw;
  require_same_algebra(rep.g, rb.alg);
  require_operator_shape(rep.module, beta, "module operator");
  CheckReport out{"admissible", {}, 0};
  out.append(
      admissible_direct(rb.alg.bracket, rb.weight, rb.P, rep.module, rep.rho, beta));
  bool direct_ok = out.pass();
  CheckReport dual = check_rb_rep_identity(rb, dual_representation(rep), beta.transpose());
  if (!dual.pass()) out.absorb("dual-route", dual);
  if (direct_ok != dual.pass())
    out.add_flag("route-agreement", "direct and dual-module routes disagree");
  out.ms = sw.ms();
  return out;
}

CheckReport check_admissible_op(const RBLieAlgebra& rb, const Mat& Q) {
  CheckReport out = check_admissible(rb, adjoint_rep(rb.alg), Q);
  out.check = "admissible-op";
  return out;
}

CheckReport check_admissible_op_product(const BilinearProduct& bracket, const Scalar& weight,
                                        const Mat& R, const Mat& S) {
  Stopwatch sw;
  require_operator_shape(bracket.space, R, "operator");
  require_operator_shape(bracket.space, S, "operator");
  CheckReport rep{"admissible-op", {}, 0};
  const Space& s = bracket.space;
  const int n = s.dim();
  for (int i = 0; i < n; ++i) {
    Vector ri{s, R.col(i)};
    Vector ei = basis_vector(s, i);
    for (int j = 0; j < n; ++j) {
      Vector sj{s, S.col(j)};
      Vector ej = basis_vector(s, j);
      Vector d = Vector{s, S.apply(eval(bracket, ri, ej).c)};
      d = sub(d, eval(bracket, ri, sj));
      d = sub(d, Vector{s, S.apply(eval(bracket, ei, sj).c)});
      d = sub(d, scale(weight, eval(bracket, ei, sj)));
      if (!is_zero(d)) rep.add("admissibility", w2(s, i, j), d);
    }
  }
  rep.ms = sw.ms();
  return rep;
}

std::vector<std::pair<std::string, Mat>> standard_admissibles(const RBLieAlgebra& rb) {
  const int n = rb.space().dim();
  Mat id = Mat::identity(n);
  std::vector<std::pair<std::string, Mat>> out;
  out.emplace_back("-P-wid", -rb.P - rb.weight * id);
  out.emplace_back("-wid", -(rb.weight * id));
  out.emplace_back("0", Mat(n, n));
  return out;
}

Mat admissible_from_partner(const Mat& alpha, const Scalar& weight) {
  return -alpha - weight * Mat::identity(alpha.rows());
}

CheckReport check_rep_equivalence(const RBRep& a, const RBRep& b, const LinearMap& phi) {
  Stopwatch sw;
  require_same_algebra(a.rep.g, b.rep.g);
  if (phi.dom != a.rep.module || phi.cod != b.rep.module)
    throw InputError("equivalence map does not connect the two modules");
  CheckReport rep{"rep-equivalence", {}, 0};
  if (!phi.m.inverse()) rep.add_flag("invertibility", "det = 0");
  const Space& gs = a.rep.g.space();
  for (int i = 0; i < gs.dim(); ++i) {
    Mat d = phi.m * a.rep.rho_at(i) - b.rep.rho_at(i) * phi.m;
    if (!d.is_zero())
      rep.add("intertwines-action", w1(gs, i), hom_tensor(LinearMap{phi.dom, phi.cod, d}));
  }
  Mat d = phi.m * a.alpha - b.alpha * phi.m;
  if (!d.is_zero())
    rep.add("intertwines-partner", "(operator)", hom_tensor(LinearMap{phi.dom, phi.cod, d}));
  rep.ms = sw.ms();
  return rep;
}

RBLieAlgebra semidirect_product_rb(const RBLieAlgebra& rb, const RBRep& r) {
  require_same_algebra(r.rep.g, rb.alg);
  LieAlgebra sd = semidirect_product_lie(r.rep);
  return make_rb_lie(std::move(sd), rb.weight, block_diag(rb.P, r.alpha));
}

CheckReport check_matched_pair_rb(const MatchedPairRB& mp) {
  Stopwatch sw;
  if (!(mp.g.weight == mp.h.weight)) throw InputError("matched pair needs equal weights");
  CheckReport rep{"matched-pair-rb", {}, 0};
  rep.append(check_matched_pair_lie(mp.lie_part()));
  rep.absorb("g", check_rb_product(mp.g.alg.bracket, mp.g.weight, mp.g.P));
  rep.absorb("h", check_rb_product(mp.h.alg.bracket, mp.h.weight, mp.h.P));
  rep.absorb("rho", check_rb_rep_identity(
                        mp.g, Representation{mp.g.alg, mp.h.space(), mp.rho}, mp.h.P));
  rep.absorb("mu",
             check_rb_rep_identity(mp.h, Representation{mp.h.alg, mp.g.space(), mp.mu}, mp.g.P));
  rep.ms = sw.ms();
  return rep;
}

RBLieAlgebra rb_bowtie(const MatchedPairRB& mp) {
  if (!(mp.g.weight == mp.h.weight)) throw InputError("matched pair needs equal weights");
  LieAlgebra both = bowtie_lie(mp.lie_part());
  return make_rb_lie(std::move(both), mp.g.weight, block_diag(mp.g.P, mp.h.P));
}

CheckReport check_semidirect_admissibility(const RBLieAlgebra& rb, const Representation& rep,
                                           const Mat& alpha, const Mat& Q, const Mat& beta) {
  Stopwatch sw;
  require_same_algebra(rep.g, rb.alg);
  require_operator_shape(rep.module, alpha, "module operator");
  require_operator_shape(rep.module, beta, "module operator");
  require_operator_shape(rb.space(), Q, "operator");
  CheckReport out{"semidirect-admissibility", {}, 0};

  CheckReport c1 = check_rb_rep_identity(rb, rep, alpha);
  CheckReport c2 =
      check_admissible_op_product(rb.alg.bracket, rb.weight, rb.P, Q);
  CheckReport c3 =
      admissible_direct(rb.alg.bracket, rb.weight, rb.P, rep.module, rep.rho, beta);
  CheckReport c4{"coupling", {}, 0};
  for (int i = 0; i < rb.space().dim(); ++i) {
    Mat mq = act_through(rep.rho, Q, i);
    Mat d = beta * rep.rho_at(i) * alpha - beta * mq - mq * alpha - rb.weight * mq;
    if (!d.is_zero()) c4.add("coupling", w1(rb.space(), i), op_defect(rep.module, d));
  }
  out.absorb("paired-module", c1);
  out.absorb("operator", c2);
  out.absorb("module", c3);
  out.append(c4);
  bool itemized = c1.pass() && c2.pass() && c3.pass() && c4.pass();

  BilinearProduct sd = semidirect_bracket(rep);
  Mat R = block_diag(rb.P, alpha), S = block_diag(Q, beta);
  bool route_a = check_rb_product(sd, rb.weight, R).pass() &&
                 check_admissible_op_product(sd, rb.weight, R, S).pass();

  BilinearProduct sdd = semidirect_bracket(dual_representation(rep));
  Mat Rd = block_diag(rb.P, beta.transpose()), Sd = block_diag(Q, alpha.transpose());
  bool route_b = check_rb_product(sdd, rb.weight, Rd).pass() &&
                 check_admissible_op_product(sdd, rb.weight, Rd, Sd).pass();

  if (itemized != route_a || itemized != route_b)
    out.add_flag("route-agreement", std::string("itemized/semidirect/dual verdicts: ") +
                                        (itemized ? "pass" : "fail") + "/" +
                                        (route_a ? "pass" : "fail") + "/" +
                                        (route_b ? "pass" : "fail"));
  out.ms = sw.ms();
  return out;
}

} // namespace rbla

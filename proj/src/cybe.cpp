#include "cybe.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "error.hpp"

namespace rbla {

namespace {

std::string w1(const Space& s, int i) { return "(" + s.basis[static_cast<size_t>(i)] + ")"; }

void require_operator(const Space& s, const Mat& m, const char* what) {
  if (m.rows() != s.dim() || m.cols() != s.dim())
    throw InputError(std::string(what) + " must be a square matrix on '" + s.name + "'");
}

void require_tensor(const Space& s, const Tensor2& r) {
  if (r.s1 != s || r.s2 != s)
    throw InputError("the tensor must live on '" + s.name + "' twice");
}

// slices[k](a, c) = coeff of e_k in e_a * e_c.
std::vector<Mat> structure_slices(const BilinearProduct& p) {
  const int n = p.space.dim();
  std::vector<Mat> m(static_cast<size_t>(n), Mat(n, n));
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) m[static_cast<size_t>(k)].at(a, c) = p.coeff(a, c, k);
  return m;
}

// For r = sum a_i (x) b_i: sum_{i,j} (a_i * a_j) (x) b_i (x) b_j.
Tensor3 pair_first(const std::vector<Mat>& slices, const Space& s, const Mat& r) {
  const int n = s.dim();
  const Mat rt = r.transpose();
  Tensor3 out = zero_tensor3(s, s, s);
  for (int k = 0; k < n; ++k) {
    Mat w = rt * slices[static_cast<size_t>(k)] * r;
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) out.at(k, b, d) = w.at(b, d);
  }
  return out;
}

// sum_{i,j} a_i (x) (b_i * a_j) (x) b_j.
Tensor3 pair_middle(const std::vector<Mat>& slices, const Space& s, const Mat& r) {
  const int n = s.dim();
  Tensor3 out = zero_tensor3(s, s, s);
  for (int k = 0; k < n; ++k) {
    Mat w = r * slices[static_cast<size_t>(k)] * r;
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d) out.at(a, k, d) = w.at(a, d);
  }
  return out;
}

// sum_{i,j} a_i (x) a_j (x) (b_i * b_j).
Tensor3 pair_last(const std::vector<Mat>& slices, const Space& s, const Mat& r) {
  const int n = s.dim();
  const Mat rt = r.transpose();
  Tensor3 out = zero_tensor3(s, s, s);
  for (int k = 0; k < n; ++k) {
    Mat w = r * slices[static_cast<size_t>(k)] * rt;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) out.at(a, c, k) = w.at(a, c);
  }
  return out;
}

// A on the first slot, identity elsewhere; the cube has one space throughout.
Tensor3 act_first(const Mat& a, const Tensor3& t) {
  LinearMap f = make_map(t.s1, t.s1, a);
  return apply3(f, identity_map(t.s2), identity_map(t.s3), t);
}

// A (x) id (x) id + id (x) A (x) id + id (x) id (x) A.
Tensor3 sum_slot_action(const Mat& a, const Tensor3& t) {
  LinearMap f = make_map(t.s1, t.s1, a);
  LinearMap id = identity_map(t.s1);
  return add(add(apply3(f, id, id, t), apply3(id, f, id, t)), apply3(id, id, f, t));
}

// x * y = [Px, y].
BilinearProduct split_circ(const BilinearProduct& bracket, const Mat& p) {
  BilinearProduct out = zero_product(bracket.space);
  for (size_t i = 0; i < out.L.size(); ++i)
    out.L[i] = combine(bracket.L, p.col(static_cast<int>(i)));
  return out;
}

// x <| y = -Q [x, y].
BilinearProduct split_tl(const BilinearProduct& bracket, const Mat& q) {
  BilinearProduct out = zero_product(bracket.space);
  for (size_t i = 0; i < out.L.size(); ++i) out.L[i] = -(q * left_op(bracket, static_cast<int>(i)));
  return out;
}

BilinearProduct vertical_product(const LDendAlgebra& a) {
  BilinearProduct out = zero_product(a.space());
  for (size_t i = 0; i < out.L.size(); ++i) out.L[i] = a.tri_r.L[i] + a.tri_l.L[i];
  return out;
}

// Left-multiplication module of a pre-Lie algebra over its sub-adjacent
// carrier, with the identity map as operator.
OOperatorInstance identity_instance(const RBPreLieAlgebra& a) {
  RBLieAlgebra g = subadjacent_rb(a);
  Representation lmod{g.alg, a.space(), a.alg.prod.L};
  const int n = a.space().dim();
  return OOperatorInstance{std::move(g), std::move(lmod), a.P, Mat::identity(n)};
}

void add_transport_violations(CheckReport& rep, const OOperatorInstance& inst, const Mat& q,
                              const Mat& beta) {
  Mat t = q * inst.T - inst.T * beta;
  if (t.is_zero()) return;
  const Space& vs = inst.rep.module;
  const Space& gs = inst.rb.space();
  for (int u = 0; u < vs.dim(); ++u) {
    Vector col{gs, t.col(u)};
    if (!is_zero(col)) rep.add("transport", w1(vs, u), col);
  }
}

} // namespace

Coproduct coboundary_delta(const BilinearProduct& bracket, const Tensor2& r) {
  require_tensor(bracket.space, r);
  const int n = bracket.space.dim();
  std::vector<Tensor2> cols;
  cols.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cols.push_back(act_both(left_op(bracket, i), r));
  return make_coproduct(bracket.space, std::move(cols));
}

Tensor3 cybe_tensor(const BilinearProduct& bracket, const Tensor2& r) {
  require_tensor(bracket.space, r);
  const std::vector<Mat> slices = structure_slices(bracket);
  const Space& s = bracket.space;
  Tensor3 out = pair_first(slices, s, r.c);
  out = add(out, pair_middle(slices, s, r.c));
  return add(out, pair_last(slices, s, r.c));
}

CheckReport check_invariance_conditions(const LieAlgebra& g, const Tensor2& r) {
  Stopwatch sw;
  const Space& s = g.space();
  require_tensor(s, r);
  CheckReport rep{"invariance", {}, 0};
  Tensor2 sym = add(r, flip(r));
  Tensor3 eq = cybe_tensor(g.bracket, r);
  for (int i = 0; i < s.dim(); ++i) {
    Mat adi = left_op(g.bracket, i);
    Tensor2 two = act_both(adi, sym);
    if (!is_zero(two)) rep.add("symmetric-part", w1(s, i), two);
    Tensor3 three = sum_slot_action(adi, eq);
    if (!is_zero(three)) rep.add("equation-part", w1(s, i), three);
  }
  rep.ms = sw.ms();
  return rep;
}

CheckReport check_admissible_cybe(const CYBESolution& sol) {
  Stopwatch sw;
  const Space& s = sol.rb.space();
  require_tensor(s, sol.r);
  require_operator(s, sol.Q, "companion operator");
  CheckReport rep{"admissible-cybe", {}, 0};
  Tensor3 eq = cybe_tensor(sol.rb.alg.bracket, sol.r);
  if (!is_zero(eq)) rep.add("equation", "", eq);
  const Mat& rm = sol.r.c;
  Mat left = sol.rb.P * rm - rm * sol.Q.transpose();
  if (!left.is_zero()) rep.add("side-condition-l", "", Tensor2{s, s, left});
  Mat right = sol.Q * rm - rm * sol.rb.P.transpose();
  if (!right.is_zero()) rep.add("side-condition-r", "", Tensor2{s, s, right});
  if (is_antisymmetric(sol.r)) {
    bool direct_ok = rep.pass();
    Representation coad = dual_representation(adjoint_rep(sol.rb.alg));
    OOperatorInstance inst{sol.rb, std::move(coad), sol.Q.transpose(), map_from_tensor(sol.r).m};
    CheckReport op = check_O_operator(inst, false);
    if (!op.pass()) rep.absorb("operator-route", op);
    if (direct_ok != op.pass())
      rep.add_flag("route-agreement", "tensor and operator routes disagree");
  }
  rep.ms = sw.ms();
  return rep;
}

CheckReport check_coboundary_conditions(const RBLieAlgebra& rb, const Mat& Q, const Tensor2& r) {
  Stopwatch sw;
  const Space& s = rb.space();
  require_tensor(s, r);
  require_operator(s, Q, "companion operator");
  Coproduct d = coboundary_delta(rb.alg.bracket, r);
  CheckReport jac = check_lie(dualize_coproduct(d));
  if (!jac.pass())
    throw StructureError("the induced coproduct does not dualize to a Lie bracket", jac);
  CheckReport rep{"coboundary-conditions", {}, 0};
  rep.absorb("algebra", check_rb_lie(rb.alg.bracket, rb.weight, rb.P));
  rep.absorb("operator", check_admissible_op(rb, Q));
  const bool hyp = rep.pass();
  const Mat& rm = r.c;
  const Mat qt = Q.transpose();
  Mat s1m = rb.P * rm - rm * qt;                 // (P (x) id - id (x) Q) r
  Mat s2m = Q * rm - rm * rb.P.transpose();      // (Q (x) id - id (x) P) r
  const int n = s.dim();
  std::vector<Mat> dc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) dc[static_cast<size_t>(i)] = d.cols[static_cast<size_t>(i)].c;
  bool cond1_ok = true, cond2_ok = true, law1_ok = true, law2_ok = true;
  for (int i = 0; i < n; ++i) {
    Mat adi = left_op(rb.alg.bracket, i);
    Mat a = Q * adi - combine(rb.alg.bracket.L, Q.col(i));
    Mat c1 = s2m * a.transpose() + a * s1m;
    if (!c1.is_zero()) {
      cond1_ok = false;
      rep.add("cond-1", w1(s, i), Tensor2{s, s, c1});
    }
    Mat b = combine(rb.alg.bracket.L, rb.P.col(i));
    Mat c2 = s1m * b.transpose() + b * s1m + s1m * (Q * adi).transpose() -
             (rb.P * adi) * s1m + rb.weight * (s1m * adi.transpose());
    if (!c2.is_zero()) {
      cond2_ok = false;
      rep.add("cond-2", w1(s, i), Tensor2{s, s, c2});
    }
    Mat dq = combine(dc, Q.col(i));
    Mat l1 = Q * dc[static_cast<size_t>(i)] * qt - (Q * dq + dq * qt) - rb.weight * dq;
    if (!l1.is_zero()) {
      law1_ok = false;
      rep.add("co-law", w1(s, i), Tensor2{s, s, l1});
    }
    Mat dp = combine(dc, rb.P.col(i));
    Mat l2 = rb.P * dc[static_cast<size_t>(i)] * qt + rb.P * dp - dp * qt +
             rb.weight * (rb.P * dc[static_cast<size_t>(i)]);
    if (!l2.is_zero()) {
      law2_ok = false;
      rep.add("mixed-law", w1(s, i), Tensor2{s, s, l2});
    }
  }
  if (hyp && cond1_ok != law1_ok)
    rep.add_flag("law-agreement-1", "reduced condition and coalgebra operator law disagree");
  if (hyp && cond2_ok != law2_ok)
    rep.add_flag("law-agreement-2", "reduced condition and mixed operator law disagree");
  rep.ms = sw.ms();
  return rep;
}

RBLieBialgebra coboundary_rb_bialgebra(const CYBESolution& sol) {
  CheckReport pre{"coboundary-bialgebra", {}, 0};
  if (!is_antisymmetric(sol.r)) pre.add("antisymmetry", "", add(sol.r, flip(sol.r)));
  pre.absorb("solution", check_admissible_cybe(sol));
  pre.absorb("operator", check_admissible_op(sol.rb, sol.Q));
  if (!pre.pass()) throw StructureError("the data is not a coboundary pair", pre);
  RBLieBialgebra b{sol.rb.alg.bracket, sol.rb.weight, sol.rb.P,
                   coboundary_delta(sol.rb.alg.bracket, sol.r), sol.Q};
  CheckReport laws = check_rb_lie_bialgebra(b);
  if (!laws.pass()) throw StructureError("the assembled structure fails its laws", laws);
  return b;
}

CYBESolution lift_O_operator(const OOperatorInstance& inst, const Mat& Q, const Mat& beta) {
  const Space& gs = inst.rb.space();
  const Space& vs = inst.rep.module;
  if (inst.rep.g.bracket != inst.rb.alg.bracket)
    throw InputError("the module is over a different algebra");
  if (inst.T.rows() != gs.dim() || inst.T.cols() != vs.dim())
    throw InputError("the operator must map the module into the algebra");
  require_operator(gs, Q, "companion operator");
  require_operator(vs, beta, "module companion");
  require_operator(vs, inst.alpha, "module operator");
  BilinearProduct dbl = semidirect_bracket(dual_representation(inst.rep));
  const int n = gs.dim();
  const int m = vs.dim();
  Mat emb(n + m, n + m);
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < m; ++u) emb.at(a, n + u) = inst.T.at(a, u);
  Tensor2 r{dbl.space, dbl.space, emb - emb.transpose()};
  RBLieAlgebra carrier{LieAlgebra{std::move(dbl)}, inst.rb.weight,
                       block_diag(inst.rb.P, beta.transpose())};
  return CYBESolution{std::move(carrier), block_diag(Q, inst.alpha.transpose()), std::move(r)};
}

CheckReport check_lifted_solution(const OOperatorInstance& inst, const Mat& Q, const Mat& beta) {
  Stopwatch sw;
  CYBESolution lift = lift_O_operator(inst, Q, beta);
  CheckReport rep{"lifted-solution", {}, 0};
  CheckReport weak = check_O_operator(inst, false);
  add_transport_violations(rep, inst, Q, beta);
  const bool direct_ok = weak.pass() && rep.pass();
  rep.absorb("weak", weak);
  CheckReport sol = check_admissible_cybe(lift);
  rep.absorb("solution", sol);
  CheckReport adm = check_admissible(inst.rb, inst.rep, beta);
  rep.absorb("module-operator", adm);
  if (adm.pass() && direct_ok != sol.pass())
    rep.add_flag("route-agreement", "operator laws and lifted solution disagree");
  rep.ms = sw.ms();
  return rep;
}

RBLieBialgebra bialgebra_from_O(const OOperatorInstance& inst, const Mat& Q, const Mat& beta) {
  CheckReport pre{"bialgebra-from-operator", {}, 0};
  pre.absorb("o-operator", check_O_operator(inst, true));
  pre.absorb("compatibility",
             check_semidirect_admissibility(inst.rb, inst.rep, inst.alpha, Q, beta));
  add_transport_violations(pre, inst, Q, beta);
  if (!pre.pass()) throw StructureError("the construction's hypotheses fail", pre);
  CYBESolution lift = lift_O_operator(inst, Q, beta);
  RBLieBialgebra b{lift.rb.alg.bracket, lift.rb.weight, lift.rb.P,
                   coboundary_delta(lift.rb.alg.bracket, lift.r), lift.Q};
  CheckReport laws = check_rb_lie_bialgebra(b);
  if (!laws.pass()) throw StructureError("the assembled structure fails its laws", laws);
  return b;
}

std::vector<RBLieBialgebra> bialgebra_family_from_O(const OOperatorInstance& inst) {
  const int n = inst.rb.space().dim();
  const int m = inst.rep.module.dim();
  const Scalar& w = inst.rb.weight;
  Mat wn = w * Mat::identity(n);
  Mat wm = w * Mat::identity(m);
  std::vector<RBLieBialgebra> out;
  out.push_back(bialgebra_from_O(inst, Mat(n, n), Mat(m, m)));
  out.push_back(bialgebra_from_O(inst, -wn, -wm));
  out.push_back(bialgebra_from_O(inst, -(inst.rb.P + wn), -(inst.alpha + wm)));
  return out;
}

Tensor2 canonical_r(const Space& s) {
  const int n = s.dim();
  Space dbl = direct_sum(s, dual_of(s));
  Mat c(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    c.at(i, n + i) = Scalar(1);
    c.at(n + i, i) = Scalar(-1);
  }
  return Tensor2{dbl, dbl, std::move(c)};
}

CanonicalFamily canonical_family_from_prelie(const RBPreLieAlgebra& A) {
  OOperatorInstance inst = identity_instance(A);
  const int n = A.space().dim();
  CanonicalFamily fam{lift_O_operator(inst, Mat(n, n), Mat(n, n)),
                      bialgebra_family_from_O(inst)};
  CheckReport sol = check_admissible_cybe(fam.solution);
  if (!sol.pass()) throw StructureError("the canonical tensor fails its solution laws", sol);
  return fam;
}

CheckReport check_sld_equation(const LDendAlgebra& a, const Tensor2& r) {
  Stopwatch sw;
  const Space& s = a.space();
  require_tensor(s, r);
  if (!is_antisymmetric_product(a.tri_l))
    throw InputError("the left product must be antisymmetric");
  CheckReport rep{"sld-equation", {}, 0};
  const std::vector<Mat> left = structure_slices(a.tri_l);
  const std::vector<Mat> assoc = structure_slices(vertical_product(a));
  Tensor3 defect = pair_first(left, s, r.c);
  defect = sub(defect, pair_middle(assoc, s, r.c));
  defect = sub(defect, pair_last(assoc, s, r.c));
  if (!is_zero(defect)) rep.add("equation", "", defect);
  rep.ms = sw.ms();
  return rep;
}

std::pair<Coproduct, Coproduct> coboundary_sld_pair(const LDendAlgebra& a, const Tensor2& r) {
  const Space& s = a.space();
  require_tensor(s, r);
  BilinearProduct assoc = vertical_product(a);
  BilinearProduct sub_ad = commutator(assoc);
  const int n = s.dim();
  std::vector<Tensor2> da, db;
  da.reserve(static_cast<size_t>(n));
  db.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Mat& rt = a.tri_r.L[static_cast<size_t>(i)];
    const Mat& cc = assoc.L[static_cast<size_t>(i)];
    da.push_back(Tensor2{s, s, rt * r.c + r.c * left_op(sub_ad, i).transpose()});
    db.push_back(Tensor2{s, s, -(cc * r.c + r.c * cc.transpose())});
  }
  return {make_coproduct(s, std::move(da)), make_coproduct(s, std::move(db))};
}

SLDBialgebra coboundary_sld_bialgebra(const LDendAlgebra& a, const Tensor2& r) {
  CheckReport pre{"sld-coboundary", {}, 0};
  if (!is_antisymmetric(r)) pre.add("antisymmetry", "", add(r, flip(r)));
  pre.absorb("algebra", check_ldendriform(a, true));
  pre.absorb("equation", check_sld_equation(a, r));
  if (!pre.pass()) throw StructureError("the data is not a coboundary pair", pre);
  auto [da, db] = coboundary_sld_pair(a, r);
  SLDBialgebra out{a.tri_r, a.tri_l, std::move(da), std::move(db)};
  CheckReport laws = check_sld_bialgebra(out);
  if (!laws.pass()) throw StructureError("the assembled structure fails its laws", laws);
  return out;
}

CheckReport check_sld_reduction(const BilinearProduct& bracket, const Mat& P, const Mat& Q,
                                const Tensor2& r) {
  Stopwatch sw;
  const Space& s = bracket.space;
  require_tensor(s, r);
  require_operator(s, P, "operator");
  require_operator(s, Q, "companion operator");
  CheckReport rep{"sld-reduction", {}, 0};
  const std::vector<Mat> assoc = structure_slices(split_circ(bracket, P));
  const std::vector<Mat> left = structure_slices(split_tl(bracket, Q));
  Tensor3 lhs = add(pair_middle(assoc, s, r.c), pair_last(assoc, s, r.c));
  lhs = sub(lhs, pair_first(left, s, r.c));
  Tensor3 qc = act_first(Q, cybe_tensor(bracket, r));
  Mat sm = r.c * P.transpose() - Q * r.c; // (id (x) P) r - (Q (x) id) r
  Coproduct d = coboundary_delta(bracket, r);
  const int n = s.dim();
  Tensor3 phi = zero_tensor3(s, s, s);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Scalar& c = sm.at(p, q);
      if (c.is_zero()) continue;
      const Mat& dq = d.cols[static_cast<size_t>(q)].c;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) phi.at(p, j, k) += c * dq.at(j, k);
    }
  Tensor3 defect = sub(sub(lhs, qc), phi);
  if (!is_zero(defect)) rep.add("identity", "", defect);
  rep.ms = sw.ms();
  return rep;
}

CheckReport check_same_construction(const RBLieAlgebra& rb, const Mat& Q, const Tensor2& r) {
  Stopwatch sw;
  if (!(rb.weight == Scalar(0))) throw InputError("the comparison is stated for weight 0");
  const Space& s = rb.space();
  require_tensor(s, r);
  require_operator(s, Q, "companion operator");
  CheckReport rep{"same-construction", {}, 0};
  if (!is_antisymmetric(r)) rep.add("antisymmetry", "", add(r, flip(r)));
  rep.absorb("solution", check_admissible_cybe(CYBESolution{rb, Q, r}));
  rep.absorb("operator", check_admissible_op(rb, Q));
  Coproduct d = coboundary_delta(rb.alg.bracket, r);
  const int n = s.dim();
  std::vector<Mat> dc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) dc[static_cast<size_t>(i)] = d.cols[static_cast<size_t>(i)].c;
  BilinearProduct assoc = split_circ(rb.alg.bracket, rb.P);
  BilinearProduct sub_ad = commutator(assoc);
  for (int i = 0; i < n; ++i) {
    Mat dp = combine(dc, rb.P.col(i));
    const Mat& cc = assoc.L[static_cast<size_t>(i)];
    Mat minus = (-dp) - (-(cc * r.c + r.c * cc.transpose()));
    if (!minus.is_zero()) rep.add("co-minus", w1(s, i), Tensor2{s, s, minus});
    Mat tr = cc + Q * left_op(rb.alg.bracket, i); // |> = * - <|
    Mat plus = (Q * dc[static_cast<size_t>(i)] + dp) -
               (tr * r.c + r.c * left_op(sub_ad, i).transpose());
    if (!plus.is_zero()) rep.add("co-plus", w1(s, i), Tensor2{s, s, plus});
  }
  rep.ms = sw.ms();
  return rep;
}

SLDBialgebra sld_from_O(const OOperatorInstance& inst, const Mat& Q, const Mat& beta) {
  if (!(inst.rb.weight == Scalar(0))) throw InputError("construction needs weight 0");
  CheckReport pre{"sld-from-operator", {}, 0};
  pre.absorb("o-operator", check_O_operator(inst, true));
  pre.absorb("compatibility",
             check_semidirect_admissibility(inst.rb, inst.rep, inst.alpha, Q, beta));
  add_transport_violations(pre, inst, Q, beta);
  if (!pre.pass()) throw StructureError("the construction's hypotheses fail", pre);
  CYBESolution lift = lift_O_operator(inst, Q, beta);
  RBLieBialgebra b{lift.rb.alg.bracket, lift.rb.weight, lift.rb.P,
                   coboundary_delta(lift.rb.alg.bracket, lift.r), lift.Q};
  return induce_sld_bialgebra(b);
}

SLDBialgebra sld_from_rb(const RBLieAlgebra& rb, const Mat& Q) {
  OOperatorInstance inst{rb, adjoint_rep(rb.alg), rb.P, rb.P};
  return sld_from_O(inst, Q, Q);
}

std::vector<SLDBialgebra> sld_family_from_rb(const RBLieAlgebra& rb) {
  const int n = rb.space().dim();
  return {sld_from_rb(rb, -rb.P), sld_from_rb(rb, Mat(n, n))};
}

std::vector<SLDBialgebra> sld_family_from_prelie(const RBPreLieAlgebra& A) {
  OOperatorInstance inst = identity_instance(A);
  const int n = A.space().dim();
  return {sld_from_O(inst, -A.P, -A.P), sld_from_O(inst, Mat(n, n), Mat(n, n))};
}

std::vector<SLDBialgebra> iterate_family(const RBLieAlgebra& rb, int levels) {
  if (levels < 0) throw InputError("levels must be nonnegative");
  if (!(rb.weight == Scalar(0))) throw InputError("construction needs weight 0");
  std::vector<SLDBialgebra> out;
  RBLieAlgebra cur = rb;
  for (int l = 0; l <= levels; ++l) {
    for (auto& b : sld_family_from_rb(cur)) out.push_back(std::move(b));
    RBPreLieAlgebra a = make_rb_prelie(induce_prelie(cur), cur.weight, cur.P);
    for (auto& b : sld_family_from_prelie(a)) out.push_back(std::move(b));
    if (l < levels) cur = descendent_rb_lie(cur);
  }
  return out;
}

} // namespace rbla

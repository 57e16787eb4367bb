#include "prelie.hpp"

#include "error.hpp"

namespace rbla {

namespace {

std::string w2(const Space& a, int i, const Space& b, int j) {
  return "(" + a.basis[static_cast<size_t>(i)] + "," + b.basis[static_cast<size_t>(j)] + ")";
}

std::string w3(const Space& s, int i, int j, int k) {
  return "(" + s.basis[static_cast<size_t>(i)] + "," + s.basis[static_cast<size_t>(j)] + "," +
         s.basis[static_cast<size_t>(k)] + ")";
}

std::string w3req(const Space& a, int i, const Space& b, int p, int q) {
  return "(" + a.basis[static_cast<size_t>(i)] + ";" + b.basis[static_cast<size_t>(p)] + "," +
         b.basis[static_cast<size_t>(q)] + ")";
}

Tensor2 op_defect(const Space& module, Mat d) {
  return hom_tensor(LinearMap{module, module, std::move(d)});
}

} // namespace

CheckReport check_prelie(const BilinearProduct& p) {
  Stopwatch sw;
  CheckReport rep{"pre-lie", {}, 0};
  const Space& s = p.space;
  const int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector x = basis_vector(s, i), y = basis_vector(s, j), z = basis_vector(s, k);
        Vector d = eval(p, eval(p, x, y), z);
        d = sub(d, eval(p, x, eval(p, y, z)));
        d = sub(d, eval(p, eval(p, y, x), z));
        d = add(d, eval(p, y, eval(p, x, z)));
        if (!is_zero(d)) rep.add("left-symmetry", w3(s, i, j, k), d);
      }
  rep.ms = sw.ms();
  return rep;
}

PreLieAlgebra make_prelie(BilinearProduct prod) {
  auto rep = check_prelie(prod);
  if (!rep.pass())
    throw StructureError("product on '" + prod.space.name + "' is not pre-Lie", rep);
  return PreLieAlgebra{std::move(prod)};
}

PreLieAlgebra induce_prelie(const RBLieAlgebra& rb) {
  if (!(rb.weight == Scalar(0))) throw InputError("induced product needs weight 0");
  const int n = rb.space().dim();
  BilinearProduct prod = zero_product(rb.space());
  for (int i = 0; i < n; ++i)
    prod.L[static_cast<size_t>(i)] = combine(rb.alg.bracket.L, rb.P.col(i));
  return make_prelie(std::move(prod));
}

LieAlgebra subadjacent_lie(const PreLieAlgebra& A) { return make_lie(commutator(A.prod)); }

CheckReport check_rb_prelie(const BilinearProduct& prod, const Scalar& weight, const Mat& P) {
  Stopwatch sw;
  CheckReport rep{"rb-pre-lie", {}, 0};
  rep.append(check_prelie(prod));
  rep.append(check_rb_product(prod, weight, P));
  rep.ms = sw.ms();
  return rep;
}

RBPreLieAlgebra make_rb_prelie(PreLieAlgebra alg, Scalar weight, Mat P) {
  auto rep = check_rb_product(alg.prod, weight, P);
  if (!rep.pass())
    throw StructureError("operator on '" + alg.space().name + "' fails the weight " +
                             weight.str() + " identity",
                         rep);
  return RBPreLieAlgebra{std::move(alg), std::move(weight), std::move(P)};
}

RBLieAlgebra subadjacent_rb(const RBPreLieAlgebra& A) {
  RBLieAlgebra g = make_rb_lie(subadjacent_lie(A.alg), A.weight, A.P);
  CheckReport rep{"sub-adjacent", {}, 0};
  Representation lmod{g.alg, A.space(), A.alg.prod.L};
  rep.absorb("left-module", check_representation(lmod));
  rep.absorb("pairing", check_rb_rep_identity(g, lmod, A.P));
  OOperatorInstance ident{g, lmod, A.P, Mat::identity(A.space().dim())};
  rep.absorb("identity-map", check_O_operator(ident, false));
  if (!rep.pass()) throw StructureError("sub-adjacent module laws fail", rep);
  return g;
}

RBPreLieAlgebra induced_rb_prelie(const OOperatorInstance& inst) {
  auto pre = check_O_operator(inst, true);
  if (!pre.pass()) throw StructureError("not an O-operator", pre);
  const Space& vs = inst.rep.module;
  BilinearProduct prod = zero_product(vs);
  for (int m = 0; m < vs.dim(); ++m)
    prod.L[static_cast<size_t>(m)] = combine(inst.rep.rho, inst.T.col(m));
  return make_rb_prelie(make_prelie(std::move(prod)), inst.rb.weight, inst.alpha);
}

CheckReport check_ldendriform(const LDendAlgebra& a, bool special) {
  Stopwatch sw;
  if (a.tri_l.space != a.tri_r.space) throw InputError("the two products live on different spaces");
  CheckReport rep{"l-dendriform", {}, 0};
  const Space& s = a.space();
  const BilinearProduct& tr = a.tri_r;
  const BilinearProduct& tl = a.tri_l;
  const int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector x = basis_vector(s, i), y = basis_vector(s, j), z = basis_vector(s, k);
        Vector d1 = eval(tr, eval(tr, x, y), z);
        d1 = add(d1, eval(tr, eval(tl, x, y), z));
        d1 = add(d1, eval(tr, y, eval(tr, x, z)));
        d1 = sub(d1, eval(tr, eval(tl, y, x), z));
        d1 = sub(d1, eval(tr, eval(tr, y, x), z));
        d1 = sub(d1, eval(tr, x, eval(tr, y, z)));
        if (!is_zero(d1)) rep.add("rule-r", w3(s, i, j, k), d1);
        Vector d2 = eval(tl, eval(tr, x, y), z);
        d2 = add(d2, eval(tl, y, eval(tr, x, z)));
        d2 = add(d2, eval(tl, y, eval(tl, x, z)));
        d2 = sub(d2, eval(tl, eval(tl, y, x), z));
        d2 = sub(d2, eval(tr, x, eval(tl, y, z)));
        if (!is_zero(d2)) rep.add("rule-l", w3(s, i, j, k), d2);
      }
  if (special)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        Vector d = add(Vector{s, eval_basis(tl, i, j)}, Vector{s, eval_basis(tl, j, i)});
        if (!is_zero(d)) rep.add("antisymmetry-l", w2(s, i, s, j), d);
      }
  rep.ms = sw.ms();
  return rep;
}

std::pair<BilinearProduct, BilinearProduct> horizontal_vertical(const LDendAlgebra& a) {
  const Space& s = a.space();
  const int n = s.dim();
  BilinearProduct hor = zero_product(s);
  BilinearProduct ver = zero_product(s);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        hor.L[static_cast<size_t>(i)].at(k, j) =
            a.tri_r.coeff(i, j, k) - a.tri_l.coeff(j, i, k);
    ver.L[static_cast<size_t>(i)] =
        a.tri_r.L[static_cast<size_t>(i)] + a.tri_l.L[static_cast<size_t>(i)];
  }
  return {std::move(hor), std::move(ver)};
}

LDendAlgebra special_from_admissible(const RBLieAlgebra& rb, const Mat& Q) {
  if (!(rb.weight == Scalar(0))) throw InputError("construction needs weight 0");
  auto adm = check_admissible_op(rb, Q);
  if (!adm.pass()) throw StructureError("operator is not admissible", adm);
  PreLieAlgebra pre = induce_prelie(rb);
  const int n = rb.space().dim();
  BilinearProduct tl = zero_product(rb.space());
  BilinearProduct tr = zero_product(rb.space());
  for (int i = 0; i < n; ++i) {
    tl.L[static_cast<size_t>(i)] = -(Q * ad_op(rb.alg, i));
    tr.L[static_cast<size_t>(i)] = pre.prod.L[static_cast<size_t>(i)] - tl.L[static_cast<size_t>(i)];
  }
  LDendAlgebra out{std::move(tr), std::move(tl)};
  auto rep = check_ldendriform(out, true);
  if (!rep.pass()) throw StructureError("result is not special", rep);
  return out;
}

CheckReport check_left_invariant_form(const PreLieAlgebra& A, const BilinearForm& f) {
  Stopwatch sw;
  if (f.space != A.space()) throw InputError("form space does not match the algebra");
  CheckReport rep{"left-invariant-form", {}, 0};
  const Space& s = f.space;
  const int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar d = f.b.at(i, j) - f.b.at(j, i);
      if (!d.is_zero()) rep.add_scalar("symmetry", w2(s, i, s, j), d);
    }
  if (f.b.det().is_zero()) rep.add_flag("nondegeneracy", "det = 0");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector ei = basis_vector(s, i), ej = basis_vector(s, j), ek = basis_vector(s, k);
        Scalar d = eval_form(f, eval(A.prod, ei, ej), ek) +
                   eval_form(f, ej, eval(A.prod, ei, ek));
        if (!d.is_zero()) rep.add_scalar("left-invariance", w3(s, i, j, k), d);
      }
  rep.ms = sw.ms();
  return rep;
}

LDendAlgebra special_from_left_invariant_form(const PreLieAlgebra& A, const BilinearForm& f) {
  auto pre = check_left_invariant_form(A, f);
  if (!pre.pass()) throw StructureError("form is not left-invariant on the product", pre);
  Mat binv = *f.b.inverse();
  const Space& s = A.space();
  const int n = s.dim();
  BilinearProduct tl = zero_product(s);
  for (int j = 0; j < n; ++j) {
    Mat cj = (f.b * right_op(A.prod, j) * binv).transpose(); // x <| e_j = cj x
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) tl.L[static_cast<size_t>(i)].at(k, j) = cj.at(k, i);
  }
  BilinearProduct tr = zero_product(s);
  for (int i = 0; i < n; ++i)
    tr.L[static_cast<size_t>(i)] =
        A.prod.L[static_cast<size_t>(i)] - tl.L[static_cast<size_t>(i)];
  LDendAlgebra out{std::move(tr), std::move(tl)};
  auto rep = check_ldendriform(out, true);
  if (!rep.pass()) throw StructureError("result is not special", rep);
  return out;
}

CheckReport check_prelie_representation(const PreLieRep& rep) {
  Stopwatch sw;
  const Space& as = rep.A.space();
  const int n = as.dim();
  if (static_cast<int>(rep.l.size()) != n || static_cast<int>(rep.r.size()) != n)
    throw InputError("module actions need one operator per basis vector");
  CheckReport out{"pre-lie-representation", {}, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j > i) {
        Mat d = rep.l[static_cast<size_t>(i)] * rep.l[static_cast<size_t>(j)] -
                combine(rep.l, eval_basis(rep.A.prod, i, j)) -
                rep.l[static_cast<size_t>(j)] * rep.l[static_cast<size_t>(i)] +
                combine(rep.l, eval_basis(rep.A.prod, j, i));
        if (!d.is_zero()) out.add("left-action", w2(as, i, as, j), op_defect(rep.module, d));
      }
      Mat d = rep.l[static_cast<size_t>(i)] * rep.r[static_cast<size_t>(j)] -
              rep.r[static_cast<size_t>(j)] * rep.l[static_cast<size_t>(i)] -
              combine(rep.r, eval_basis(rep.A.prod, i, j)) +
              rep.r[static_cast<size_t>(j)] * rep.r[static_cast<size_t>(i)];
      if (!d.is_zero()) out.add("right-action", w2(as, i, as, j), op_defect(rep.module, d));
    }
  out.ms = sw.ms();
  return out;
}

PreLieRep dual_prelie_representation(const PreLieRep& rep) {
  const size_t n = rep.l.size();
  std::vector<Mat> l(n), r(n);
  for (size_t i = 0; i < n; ++i) {
    l[i] = -(rep.l[i] - rep.r[i]).transpose();
    r[i] = rep.r[i].transpose();
  }
  return PreLieRep{rep.A, dual_of(rep.module), std::move(l), std::move(r)};
}

PreLieRep induced_prelie_representation(const RBLieAlgebra& rb, const Representation& rep,
                                        const Mat& alpha) {
  if (rep.g.bracket != rb.alg.bracket) throw InputError("module is over a different algebra");
  auto pre = check_rb_representation(rb, RBRep{rep, alpha});
  if (!pre.pass()) throw StructureError("module is not paired with the operator", pre);
  PreLieAlgebra A = induce_prelie(rb);
  const int n = rb.space().dim();
  std::vector<Mat> l(static_cast<size_t>(n)), r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    l[static_cast<size_t>(i)] = combine(rep.rho, rb.P.col(i));
    r[static_cast<size_t>(i)] = -(rep.rho_at(i) * alpha);
  }
  PreLieRep out{std::move(A), rep.module, std::move(l), std::move(r)};
  auto post = check_prelie_representation(out);
  if (!post.pass()) throw StructureError("induced module laws fail", post);
  return out;
}

CheckReport check_matched_pair_prelie(const MatchedPairPreLie& mp) {
  Stopwatch sw;
  CheckReport rep{"matched-pair-pre-lie", {}, 0};
  const Space& as = mp.A.space();
  const Space& bs = mp.B.space();
  rep.absorb("A", check_prelie(mp.A.prod));
  rep.absorb("B", check_prelie(mp.B.prod));
  rep.absorb("action-on-B",
             check_prelie_representation(PreLieRep{mp.A, bs, mp.lA, mp.rA}));
  rep.absorb("action-on-A",
             check_prelie_representation(PreLieRep{mp.B, as, mp.lB, mp.rB}));
  const int n = as.dim(), m = bs.dim();
  BilinearProduct ac = commutator(mp.A.prod);
  BilinearProduct bc = commutator(mp.B.prod);

  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) {
        // l_A(x)(a b) + l_A(l_B(a)x - r_B(a)x)b - (l_A(x)a - r_A(x)a) b
        //   - r_A(r_B(b)x)a - a (l_A(x)b)
        Vector d{bs, mp.lA[static_cast<size_t>(i)].apply(eval_basis(mp.B.prod, p, q))};
        std::vector<Scalar> w =
            (mp.lB[static_cast<size_t>(p)] - mp.rB[static_cast<size_t>(p)]).col(i);
        d = add(d, Vector{bs, combine(mp.lA, w).col(q)});
        std::vector<Scalar> u = mp.lA[static_cast<size_t>(i)].col(p);
        {
          auto ra = mp.rA[static_cast<size_t>(i)].col(p);
          for (int t = 0; t < m; ++t) u[static_cast<size_t>(t)] -= ra[static_cast<size_t>(t)];
        }
        d = sub(d, eval(mp.B.prod, Vector{bs, u}, basis_vector(bs, q)));
        d = sub(d, Vector{bs, combine(mp.rA, mp.rB[static_cast<size_t>(q)].col(i)).col(p)});
        d = sub(d, eval(mp.B.prod, basis_vector(bs, p),
                        Vector{bs, mp.lA[static_cast<size_t>(i)].col(q)}));
        if (!is_zero(d)) rep.add("l-compat-on-B", w3req(as, i, bs, p, q), d);
      }
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        // r_A(x)[a,b] - r_A(l_B(b)x)a + r_A(l_B(a)x)b - a (r_A(x)b) + b (r_A(x)a)
        Vector d{bs, mp.rA[static_cast<size_t>(i)].apply(eval_basis(bc, p, q))};
        d = sub(d, Vector{bs, combine(mp.rA, mp.lB[static_cast<size_t>(q)].col(i)).col(p)});
        d = add(d, Vector{bs, combine(mp.rA, mp.lB[static_cast<size_t>(p)].col(i)).col(q)});
        d = sub(d, eval(mp.B.prod, basis_vector(bs, p),
                        Vector{bs, mp.rA[static_cast<size_t>(i)].col(q)}));
        d = add(d, eval(mp.B.prod, basis_vector(bs, q),
                        Vector{bs, mp.rA[static_cast<size_t>(i)].col(p)}));
        if (!is_zero(d)) rep.add("r-compat-on-B", w3req(as, i, bs, p, q), d);
      }
  }
  for (int p = 0; p < m; ++p) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vector d{as, mp.lB[static_cast<size_t>(p)].apply(eval_basis(mp.A.prod, i, j))};
        std::vector<Scalar> w =
            (mp.lA[static_cast<size_t>(i)] - mp.rA[static_cast<size_t>(i)]).col(p);
        d = add(d, Vector{as, combine(mp.lB, w).col(j)});
        std::vector<Scalar> u = mp.lB[static_cast<size_t>(p)].col(i);
        {
          auto rb_ = mp.rB[static_cast<size_t>(p)].col(i);
          for (int t = 0; t < n; ++t) u[static_cast<size_t>(t)] -= rb_[static_cast<size_t>(t)];
        }
        d = sub(d, eval(mp.A.prod, Vector{as, u}, basis_vector(as, j)));
        d = sub(d, Vector{as, combine(mp.rB, mp.rA[static_cast<size_t>(j)].col(p)).col(i)});
        d = sub(d, eval(mp.A.prod, basis_vector(as, i),
                        Vector{as, mp.lB[static_cast<size_t>(p)].col(j)}));
        if (!is_zero(d)) rep.add("l-compat-on-A", w3req(bs, p, as, i, j), d);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vector d{as, mp.rB[static_cast<size_t>(p)].apply(eval_basis(ac, i, j))};
        d = sub(d, Vector{as, combine(mp.rB, mp.lA[static_cast<size_t>(j)].col(p)).col(i)});
        d = add(d, Vector{as, combine(mp.rB, mp.lA[static_cast<size_t>(i)].col(p)).col(j)});
        d = sub(d, eval(mp.A.prod, basis_vector(as, i),
                        Vector{as, mp.rB[static_cast<size_t>(p)].col(j)}));
        d = add(d, eval(mp.A.prod, basis_vector(as, j),
                        Vector{as, mp.rB[static_cast<size_t>(p)].col(i)}));
        if (!is_zero(d)) rep.add("r-compat-on-A", w3req(bs, p, as, i, j), d);
      }
  }
  rep.ms = sw.ms();
  return rep;
}

BilinearProduct prelie_bowtie_product(const MatchedPairPreLie& mp) {
  const Space& as = mp.A.space();
  const Space& bs = mp.B.space();
  const int n = as.dim(), m = bs.dim();
  Space total = direct_sum(as, bs);
  BilinearProduct prod = zero_product(total);
  for (int i = 0; i < n; ++i) {
    Mat& Li = prod.L[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) Li.at(k, j) = mp.A.prod.coeff(i, j, k);
    for (int p = 0; p < m; ++p) {
      auto acol = mp.rB[static_cast<size_t>(p)].col(i); // r_B(f_p) e_i
      auto bcol = mp.lA[static_cast<size_t>(i)].col(p); // l_A(e_i) f_p
      for (int k = 0; k < n; ++k) Li.at(k, n + p) = acol[static_cast<size_t>(k)];
      for (int k = 0; k < m; ++k) Li.at(n + k, n + p) = bcol[static_cast<size_t>(k)];
    }
  }
  for (int q = 0; q < m; ++q) {
    Mat& Lq = prod.L[static_cast<size_t>(n + q)];
    for (int j = 0; j < n; ++j) {
      auto acol = mp.lB[static_cast<size_t>(q)].col(j); // l_B(f_q) e_j
      auto bcol = mp.rA[static_cast<size_t>(j)].col(q); // r_A(e_j) f_q
      for (int k = 0; k < n; ++k) Lq.at(k, j) = acol[static_cast<size_t>(k)];
      for (int k = 0; k < m; ++k) Lq.at(n + k, j) = bcol[static_cast<size_t>(k)];
    }
    for (int p = 0; p < m; ++p)
      for (int k = 0; k < m; ++k) Lq.at(n + k, n + p) = mp.B.prod.coeff(q, p, k);
  }
  return prod;
}

PreLieAlgebra prelie_bowtie(const MatchedPairPreLie& mp) {
  return make_prelie(prelie_bowtie_product(mp));
}

} // namespace rbla

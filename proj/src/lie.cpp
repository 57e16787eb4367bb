#include "lie.hpp"

#include "error.hpp"

namespace rbla {

namespace {

std::string w1(const Space& s, int i) { return "(" + s.basis[static_cast<size_t>(i)] + ")"; }

std::string w2(const Space& a, int i, const Space& b, int j) {
  return "(" + a.basis[static_cast<size_t>(i)] + "," + b.basis[static_cast<size_t>(j)] + ")";
}

std::string w3(const Space& s, int i, int j, int k) {
  return "(" + s.basis[static_cast<size_t>(i)] + "," + s.basis[static_cast<size_t>(j)] + "," +
         s.basis[static_cast<size_t>(k)] + ")";
}

Tensor2 op_defect(const Space& module, Mat d) {
  return hom_tensor(LinearMap{module, module, std::move(d)});
}

} // namespace

CheckReport check_lie(const BilinearProduct& bracket) {
  Stopwatch sw;
  CheckReport rep{"lie", {}, 0};
  const Space& s = bracket.space;
  const int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      Vector d = add(Vector{s, eval_basis(bracket, i, j)}, Vector{s, eval_basis(bracket, j, i)});
      if (!is_zero(d)) rep.add("antisymmetry", w2(s, i, s, j), d);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector ei = basis_vector(s, i), ej = basis_vector(s, j), ek = basis_vector(s, k);
        Vector d = add(add(eval(bracket, eval(bracket, ei, ej), ek),
                           eval(bracket, eval(bracket, ej, ek), ei)),
                       eval(bracket, eval(bracket, ek, ei), ej));
        if (!is_zero(d)) rep.add("jacobi", w3(s, i, j, k), d);
      }
  rep.ms = sw.ms();
  return rep;
}

LieAlgebra make_lie(BilinearProduct bracket) {
  auto rep = check_lie(bracket);
  if (!rep.pass()) throw StructureError("bracket on '" + bracket.space.name + "' is not Lie", rep);
  return LieAlgebra{std::move(bracket)};
}

LinearMap ad(const LieAlgebra& g, const Vector& x) { return left_mult(g.bracket, x); }

Mat ad_op(const LieAlgebra& g, int i) { return left_op(g.bracket, i); }

LinearMap Representation::rho_map(const Vector& x) const {
  if (x.space != g.space()) throw InputError("representation applied to the wrong space");
  Mat m(module.dim(), module.dim());
  for (int i = 0; i < g.space().dim(); ++i) {
    if (x.c[static_cast<size_t>(i)].is_zero()) continue;
    m += x.c[static_cast<size_t>(i)] * rho[static_cast<size_t>(i)];
  }
  return LinearMap{module, module, std::move(m)};
}

Representation assemble_representation(LieAlgebra g, Space module, std::vector<Mat> rho) {
  if (static_cast<int>(rho.size()) != g.space().dim())
    throw InputError("representation needs one operator per basis vector of '" + g.space().name +
                     "'");
  for (const auto& m : rho)
    if (m.rows() != module.dim() || m.cols() != module.dim())
      throw InputError("representation operator shape does not match '" + module.name + "'");
  return Representation{std::move(g), std::move(module), std::move(rho)};
}

CheckReport check_representation(const Representation& r) {
  Stopwatch sw;
  CheckReport rep{"representation", {}, 0};
  const Space& gs = r.g.space();
  const int n = gs.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat d = r.rho_at(i) * r.rho_at(j) - r.rho_at(j) * r.rho_at(i);
      for (int k = 0; k < n; ++k) {
        Scalar c = r.g.bracket.coeff(i, j, k);
        if (!c.is_zero()) d -= c * r.rho_at(k);
      }
      if (!d.is_zero()) rep.add("homomorphism", w2(gs, i, gs, j), op_defect(r.module, d));
    }
  rep.ms = sw.ms();
  return rep;
}

Representation adjoint_rep(const LieAlgebra& g) {
  return Representation{g, g.space(), g.bracket.L};
}

Representation dual_representation(const Representation& r) {
  std::vector<Mat> dual;
  dual.reserve(r.rho.size());
  for (const auto& m : r.rho) dual.push_back(-m.transpose());
  return Representation{r.g, dual_of(r.module), std::move(dual)};
}

Scalar eval_form(const BilinearForm& f, const Vector& x, const Vector& y) {
  if (x.space != f.space || y.space != f.space)
    throw InputError("form arguments from the wrong space");
  auto by = f.b.apply(y.c);
  Scalar out;
  for (int i = 0; i < f.space.dim(); ++i)
    out += x.c[static_cast<size_t>(i)] * by[static_cast<size_t>(i)];
  return out;
}

CheckReport check_bilinear_form(const LieAlgebra& g, const BilinearForm& f, FormRequirements req) {
  Stopwatch sw;
  CheckReport rep{"form", {}, 0};
  const Space& s = f.space;
  if (s != g.space()) throw InputError("form space does not match the algebra");
  const int n = s.dim();
  if (req.symmetric)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Scalar d = f.b.at(i, j) - f.b.at(j, i);
        if (!d.is_zero()) rep.add_scalar("symmetry", w2(s, i, s, j), d);
      }
  if (req.invariant)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vector ei = basis_vector(s, i), ej = basis_vector(s, j), ek = basis_vector(s, k);
          Scalar d = eval_form(f, eval(g.bracket, ei, ej), ek) +
                     eval_form(f, ej, eval(g.bracket, ei, ek));
          if (!d.is_zero()) rep.add_scalar("invariance", w3(s, i, j, k), d);
        }
  if (req.nondegenerate && f.b.det().is_zero()) rep.add_flag("nondegeneracy", "det = 0");
  rep.ms = sw.ms();
  return rep;
}

Mat adjoint_operator_wrt_form(const BilinearForm& f, const Mat& p) {
  if (p.rows() != f.space.dim() || p.cols() != f.space.dim())
    throw InputError("operator shape does not match the form's space");
  auto inv = f.b.inverse();
  if (!inv) {
    CheckReport rep{"form", {}, 0};
    rep.add_flag("nondegeneracy", "det = 0");
    throw StructureError("adjoint needs a nondegenerate form", rep);
  }
  return *inv * p.transpose() * f.b;
}

CheckReport check_matched_pair_lie(const MatchedPairLie& mp) {
  Stopwatch sw;
  CheckReport rep{"matched-pair", {}, 0};
  rep.absorb("g", check_lie(mp.g.bracket));
  rep.absorb("h", check_lie(mp.h.bracket));
  Representation rr = mp.rho_rep(), mr = mp.mu_rep();
  rep.absorb("rho", check_representation(rr));
  rep.absorb("mu", check_representation(mr));
  const Space& gs = mp.g.space();
  const Space& hs = mp.h.space();
  auto rho_app = [&](const Vector& x, const Vector& a) { return apply(rr.rho_map(x), a); };
  auto mu_app = [&](const Vector& a, const Vector& x) { return apply(mr.rho_map(a), x); };
  for (int i = 0; i < gs.dim(); ++i) {
    Vector x = basis_vector(gs, i);
    for (int m = 0; m < hs.dim(); ++m)
      for (int p = m + 1; p < hs.dim(); ++p) {
        Vector a = basis_vector(hs, m), b = basis_vector(hs, p);
        Vector d = rho_app(x, eval(mp.h.bracket, a, b));
        d = sub(d, eval(mp.h.bracket, rho_app(x, a), b));
        d = sub(d, eval(mp.h.bracket, a, rho_app(x, b)));
        d = add(d, rho_app(mu_app(a, x), b));
        d = sub(d, rho_app(mu_app(b, x), a));
        if (!is_zero(d))
          rep.add("action-compat-on-h", w1(gs, i) + w2(hs, m, hs, p), d);
      }
  }
  for (int m = 0; m < hs.dim(); ++m) {
    Vector a = basis_vector(hs, m);
    for (int i = 0; i < gs.dim(); ++i)
      for (int j = i + 1; j < gs.dim(); ++j) {
        Vector x = basis_vector(gs, i), y = basis_vector(gs, j);
        Vector d = mu_app(a, eval(mp.g.bracket, x, y));
        d = sub(d, eval(mp.g.bracket, mu_app(a, x), y));
        d = sub(d, eval(mp.g.bracket, x, mu_app(a, y)));
        d = add(d, mu_app(rho_app(x, a), y));
        d = sub(d, mu_app(rho_app(y, a), x));
        if (!is_zero(d))
          rep.add("action-compat-on-g", w1(hs, m) + w2(gs, i, gs, j), d);
      }
  }
  rep.ms = sw.ms();
  return rep;
}

BilinearProduct bowtie_bracket(const MatchedPairLie& mp) {
  const Space& gs = mp.g.space();
  const Space& hs = mp.h.space();
  const int n = gs.dim(), m = hs.dim();
  Space total = direct_sum(gs, hs);
  BilinearProduct b = zero_product(total);
  for (int i = 0; i < n; ++i) {
    Mat& Li = b.L[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) Li.at(k, j) = mp.g.bracket.coeff(i, j, k);
    for (int p = 0; p < m; ++p) {
      auto hcol = mp.rho[static_cast<size_t>(i)].col(p);        // rho(e_i) f_p
      auto gcol = mp.mu[static_cast<size_t>(p)].col(i);         // mu(f_p) e_i
      for (int k = 0; k < n; ++k) Li.at(k, n + p) = -gcol[static_cast<size_t>(k)];
      for (int k = 0; k < m; ++k) Li.at(n + k, n + p) = hcol[static_cast<size_t>(k)];
    }
  }
  for (int q = 0; q < m; ++q) {
    Mat& Lq = b.L[static_cast<size_t>(n + q)];
    for (int j = 0; j < n; ++j) {
      auto gcol = mp.mu[static_cast<size_t>(q)].col(j);         // mu(f_q) e_j
      auto hcol = mp.rho[static_cast<size_t>(j)].col(q);        // rho(e_j) f_q
      for (int k = 0; k < n; ++k) Lq.at(k, j) = gcol[static_cast<size_t>(k)];
      for (int k = 0; k < m; ++k) Lq.at(n + k, j) = -hcol[static_cast<size_t>(k)];
    }
    for (int p = 0; p < m; ++p)
      for (int k = 0; k < m; ++k) Lq.at(n + k, n + p) = mp.h.bracket.coeff(q, p, k);
  }
  return b;
}

LieAlgebra bowtie_lie(const MatchedPairLie& mp) { return make_lie(bowtie_bracket(mp)); }

namespace {

MatchedPairLie one_sided_pair(const Representation& r) {
  LieAlgebra abelian{zero_product(r.module)};
  std::vector<Mat> mu(static_cast<size_t>(r.module.dim()),
                      Mat(r.g.space().dim(), r.g.space().dim()));
  return MatchedPairLie{r.g, std::move(abelian), r.rho, std::move(mu)};
}

} // namespace

BilinearProduct semidirect_bracket(const Representation& r) {
  return bowtie_bracket(one_sided_pair(r));
}

LieAlgebra semidirect_product_lie(const Representation& r) {
  return bowtie_lie(one_sided_pair(r));
}

} // namespace rbla

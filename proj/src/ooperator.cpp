#include "ooperator.hpp"

#include "error.hpp"

namespace rbla {

CheckReport check_O_operator(const OOperatorInstance& inst, bool full) {
  Stopwatch sw;
  if (inst.rep.g.bracket != inst.rb.alg.bracket)
    throw InputError("action is over a different algebra");
  const Space& gs = inst.rb.space();
  const Space& vs = inst.rep.module;
  if (inst.T.rows() != gs.dim() || inst.T.cols() != vs.dim())
    throw InputError("map shape does not match '" + vs.name + "' -> '" + gs.name + "'");
  if (inst.alpha.rows() != vs.dim() || inst.alpha.cols() != vs.dim())
    throw InputError("module operator shape does not match '" + vs.name + "'");

  CheckReport rep{"o-operator", {}, 0};
  auto act = [&](int m) { // rho(T v_m)
    Mat out(vs.dim(), vs.dim());
    for (int k = 0; k < gs.dim(); ++k) {
      const Scalar& c = inst.T.at(k, m);
      if (!c.is_zero()) out += c * inst.rep.rho_at(k);
    }
    return out;
  };
  for (int m = 0; m < vs.dim(); ++m) {
    Vector tu{gs, inst.T.col(m)};
    Mat rho_tu = act(m);
    for (int p = m + 1; p < vs.dim(); ++p) {
      Vector tv{gs, inst.T.col(p)};
      Mat rho_tv = act(p);
      std::vector<Scalar> inner = rho_tu.col(p); // rho(Tu) v_p
      auto other = rho_tv.col(m);                // rho(Tv) v_m
      for (int k = 0; k < vs.dim(); ++k) inner[static_cast<size_t>(k)] -= other[static_cast<size_t>(k)];
      Vector d = sub(eval(inst.rb.alg.bracket, tu, tv), Vector{gs, inst.T.apply(inner)});
      if (!is_zero(d))
        rep.add("o-operator",
                "(" + vs.basis[static_cast<size_t>(m)] + "," + vs.basis[static_cast<size_t>(p)] +
                    ")",
                d);
    }
  }
  Mat comp = inst.rb.P * inst.T - inst.T * inst.alpha;
  if (!comp.is_zero())
    rep.add("operator-compatibility", "(PT - Ta)", hom_tensor(LinearMap{vs, gs, comp}));
  if (full) rep.absorb("paired-module", check_rb_rep_identity(inst.rb, inst.rep, inst.alpha));
  rep.ms = sw.ms();
  return rep;
}

} // namespace rbla

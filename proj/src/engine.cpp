#include "engine.hpp"

#include <algorithm>

#include <json.hpp>

#include "bialgebra.hpp"
#include "cybe.hpp"
#include "error.hpp"
#include "lie.hpp"
#include "ooperator.hpp"
#include "prelie.hpp"
#include "rota_baxter.hpp"

namespace rbla {

namespace {

using ojson = nlohmann::ordered_json;

// ---- ingredient lookup -----------------------------------------------------

// Absent products read as zero; every other ingredient must be present.
BilinearProduct get_product(const StructureDocument& doc, const std::string& name) {
  auto it = doc.algebra.products.find(name);
  if (it != doc.algebra.products.end()) return it->second;
  return zero_product(doc.algebra.space);
}

bool has_product(const StructureDocument& doc, const std::string& name) {
  return doc.algebra.products.count(name) != 0;
}

const Mat& get_operator(const StructureDocument& doc, const std::string& name) {
  auto it = doc.algebra.operators.find(name);
  if (it == doc.algebra.operators.end())
    throw InputError("operator '" + name + "' not found");
  return it->second;
}

bool has_operator(const StructureDocument& doc, const std::string& name) {
  return doc.algebra.operators.count(name) != 0;
}

const BilinearForm& get_form(const StructureDocument& doc, const std::string& name) {
  auto it = doc.forms.find(name);
  if (it == doc.forms.end()) throw InputError("form '" + name + "' not found");
  return it->second;
}

const Coproduct& get_coproduct(const StructureDocument& doc, const std::string& name) {
  auto it = doc.coproducts.find(name);
  if (it == doc.coproducts.end())
    throw InputError("coproduct '" + name + "' not found");
  return it->second;
}

const Tensor2& get_tensor(const StructureDocument& doc, const std::string& name) {
  auto it = doc.tensors.find(name);
  if (it == doc.tensors.end()) throw InputError("tensor '" + name + "' not found");
  return it->second;
}

// The representation named by opt.rep, else "rho", else the only one present.
const RepresentationData& get_rep(const StructureDocument& doc, const EngineOptions& opt) {
  if (!opt.rep.empty()) {
    auto it = doc.representations.find(opt.rep);
    if (it == doc.representations.end())
      throw InputError("representation '" + opt.rep + "' not found");
    return it->second;
  }
  if (auto it = doc.representations.find("rho"); it != doc.representations.end())
    return it->second;
  if (doc.representations.size() == 1) return doc.representations.begin()->second;
  if (doc.representations.empty())
    throw InputError("no representation in the document");
  throw InputError("several representations present; pick one with --rep");
}

bool has_rep(const StructureDocument& doc, const EngineOptions& opt) {
  if (!opt.rep.empty()) return doc.representations.count(opt.rep) != 0;
  return doc.representations.count("rho") != 0 || doc.representations.size() == 1;
}

const AlgebraPart& get_partner(const StructureDocument& doc) {
  if (!doc.partner) throw InputError("the check needs a partner block");
  return *doc.partner;
}

const MatchedActions& get_actions(const StructureDocument& doc) {
  if (!doc.actions) throw InputError("the check needs an actions block");
  return *doc.actions;
}

BilinearProduct partner_product(const AlgebraPart& p, const std::string& name) {
  auto it = p.products.find(name);
  if (it != p.products.end()) return it->second;
  return zero_product(p.space);
}

Mat partner_operator(const AlgebraPart& p, const std::string& name) {
  auto it = p.operators.find(name);
  if (it == p.operators.end())
    throw InputError("partner operator '" + name + "' not found");
  return it->second;
}

// ---- assembled structures --------------------------------------------------

LieAlgebra doc_lie(const StructureDocument& doc) {
  return LieAlgebra{get_product(doc, "bracket")};
}

RBLieAlgebra doc_rb(const StructureDocument& doc) {
  return RBLieAlgebra{doc_lie(doc), doc.algebra.weight, get_operator(doc, "P")};
}

RBPreLieAlgebra doc_rb_prelie(const StructureDocument& doc) {
  return RBPreLieAlgebra{PreLieAlgebra{get_product(doc, "circ")}, doc.algebra.weight,
                         get_operator(doc, "P")};
}

RBLieAlgebra partner_rb(const AlgebraPart& p) {
  return RBLieAlgebra{LieAlgebra{partner_product(p, "bracket")}, p.weight,
                      partner_operator(p, "P")};
}

Representation to_representation(const StructureDocument& doc, const RepresentationData& rd) {
  return Representation{doc_lie(doc), rd.module, rd.rho};
}

// Companions default to zero when a representation block omits them.
Mat rep_alpha(const RepresentationData& rd) {
  return rd.alpha ? *rd.alpha : Mat(rd.module.dim(), rd.module.dim());
}

Mat rep_beta(const RepresentationData& rd) {
  return rd.beta ? *rd.beta : Mat(rd.module.dim(), rd.module.dim());
}

OOperatorInstance doc_o_instance(const StructureDocument& doc, const EngineOptions& opt) {
  const RepresentationData& rd = get_rep(doc, opt);
  return OOperatorInstance{doc_rb(doc), to_representation(doc, rd), rep_alpha(rd),
                           get_operator(doc, "T")};
}

// The coalgebra-side operator named by opt.q (default "Q"), with the
// shortcut spellings expanded.
Mat resolve_q(const StructureDocument& doc, const EngineOptions& opt) {
  const std::string q = opt.q.empty() ? std::string("Q") : opt.q;
  const int n = doc.algebra.space.dim();
  if (q == "0") return Mat(n, n);
  if (q == "-P") return -get_operator(doc, "P");
  if (q == "-P-lid")
    return -(get_operator(doc, "P") + doc.algebra.weight * Mat::identity(n));
  if (q == "Phat")
    return adjoint_operator_wrt_form(get_form(doc, "B"), get_operator(doc, "P"));
  return get_operator(doc, q);
}

bool q_resolvable(const StructureDocument& doc, const EngineOptions& opt) {
  try {
    resolve_q(doc, opt);
    return true;
  } catch (const InputError&) {
    return false;
  } catch (const StructureError&) {
    return false;
  }
}

bool module_admissible_data(const StructureDocument& doc, const EngineOptions& opt) {
  return has_rep(doc, opt) && get_rep(doc, opt).beta.has_value();
}

// ---- checker dispatch ------------------------------------------------------

CheckReport dispatch_check(const std::string& what, const StructureDocument& doc,
                           const EngineOptions& opt) {
  if (what == "lie") return check_lie(get_product(doc, "bracket"));
  if (what == "prelie") return check_prelie(get_product(doc, "circ"));
  if (what == "ldend")
    return check_ldendriform(
        LDendAlgebra{get_product(doc, "tri_r"), get_product(doc, "tri_l")}, opt.special);
  if (what == "rb")
    return check_rb_lie(get_product(doc, "bracket"), doc.algebra.weight,
                        get_operator(doc, "P"));
  if (what == "rb-prelie")
    return check_rb_prelie(get_product(doc, "circ"), doc.algebra.weight,
                           get_operator(doc, "P"));
  if (what == "rep") return check_representation(to_representation(doc, get_rep(doc, opt)));
  if (what == "rb-rep") {
    const RepresentationData& rd = get_rep(doc, opt);
    return check_rb_representation(doc_rb(doc),
                                   RBRep{to_representation(doc, rd), rep_alpha(rd)});
  }
  if (what == "admissible") {
    RBLieAlgebra rb = doc_rb(doc);
    if (opt.q.empty() && module_admissible_data(doc, opt)) {
      const RepresentationData& rd = get_rep(doc, opt);
      return check_admissible(rb, to_representation(doc, rd), *rd.beta);
    }
    return check_admissible_op(rb, resolve_q(doc, opt));
  }
  if (what == "form") return check_bilinear_form(doc_lie(doc), get_form(doc, "B"));
  if (what == "lie-coalg") return check_lie_coalgebra(get_coproduct(doc, "delta"));
  if (what == "rb-coalg")
    return check_rb_lie_coalgebra(get_coproduct(doc, "delta"), doc.algebra.weight,
                                  resolve_q(doc, opt));
  if (what == "lie-bialg")
    return check_lie_bialgebra(get_product(doc, "bracket"), get_coproduct(doc, "delta"));
  if (what == "rb-bialg")
    return check_rb_lie_bialgebra(RBLieBialgebra{get_product(doc, "bracket"),
                                                 doc.algebra.weight, get_operator(doc, "P"),
                                                 get_coproduct(doc, "delta"),
                                                 resolve_q(doc, opt)});
  if (what == "sld-coalg")
    return check_sld_coalgebra(
        SLDCoalgebra{get_coproduct(doc, "Delta"), get_coproduct(doc, "Nabla")});
  if (what == "sld-bialg")
    return check_sld_bialgebra(
        SLDBialgebra{get_product(doc, "tri_r"), get_product(doc, "tri_l"),
                     get_coproduct(doc, "Delta"), get_coproduct(doc, "Nabla")});
  if (what == "matched-pair") {
    const AlgebraPart& pt = get_partner(doc);
    const MatchedActions& act = get_actions(doc);
    return check_matched_pair_lie(MatchedPairLie{
        doc_lie(doc), LieAlgebra{partner_product(pt, "bracket")}, act.rho, act.mu});
  }
  if (what == "matched-pair-rb") {
    const AlgebraPart& pt = get_partner(doc);
    const MatchedActions& act = get_actions(doc);
    return check_matched_pair_rb(
        MatchedPairRB{doc_rb(doc), partner_rb(pt), act.rho, act.mu});
  }
  if (what == "matched-pair-prelie") {
    const AlgebraPart& pt = get_partner(doc);
    const MatchedActions& act = get_actions(doc);
    return check_matched_pair_prelie(MatchedPairPreLie{
        PreLieAlgebra{get_product(doc, "circ")},
        PreLieAlgebra{partner_product(pt, "circ")}, act.rho, act.rho_right, act.mu,
        act.mu_right});
  }
  if (what == "manin-rb") {
    RBLieAlgebra g = doc_rb(doc);
    RBLieAlgebra d = partner_rb(get_partner(doc));
    if (d.space() != dual_of(g.space()))
      throw InputError("the partner must live on the dual space");
    if (!(g.weight == d.weight)) throw InputError("the two weights differ");
    const int n = g.space().dim();
    std::vector<Mat> rho(static_cast<size_t>(n)), mu(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      rho[static_cast<size_t>(i)] = -left_op(g.alg.bracket, i).transpose();
      mu[static_cast<size_t>(i)] = -left_op(d.alg.bracket, i).transpose();
    }
    MatchedPairLie mp{g.alg, d.alg, std::move(rho), std::move(mu)};
    return check_manin_triple_rb(ManinTripleRB{g.alg.bracket, d.alg.bracket,
                                               bowtie_bracket(mp), g.weight, g.P, d.P});
  }
  if (what == "manin-prelie") {
    LDendAlgebra a{get_product(doc, "tri_r"), get_product(doc, "tri_l")};
    const AlgebraPart& pt = get_partner(doc);
    LDendAlgebra dual{partner_product(pt, "tri_r"), partner_product(pt, "tri_l")};
    if (dual.space() != dual_of(a.space()))
      throw InputError("the partner must live on the dual space");
    BilinearProduct ca = horizontal_vertical(a).second;
    BilinearProduct cd = horizontal_vertical(dual).second;
    const int n = a.space().dim();
    std::vector<Mat> lA(static_cast<size_t>(n)), rA(static_cast<size_t>(n));
    std::vector<Mat> lB(static_cast<size_t>(n)), rB(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      lA[static_cast<size_t>(i)] = -ca.L[static_cast<size_t>(i)].transpose();
      rA[static_cast<size_t>(i)] = -a.tri_l.L[static_cast<size_t>(i)].transpose();
      lB[static_cast<size_t>(i)] = -cd.L[static_cast<size_t>(i)].transpose();
      rB[static_cast<size_t>(i)] = -dual.tri_l.L[static_cast<size_t>(i)].transpose();
    }
    MatchedPairPreLie mp{PreLieAlgebra{ca}, PreLieAlgebra{cd}, lA, rA, lB, rB};
    return check_manin_triple_prelie(
        ManinTriplePreLie{ca, cd, prelie_bowtie_product(mp)});
  }
  if (what == "cybe")
    return check_admissible_cybe(
        CYBESolution{doc_rb(doc), resolve_q(doc, opt), get_tensor(doc, "r")});
  if (what == "o-operator") return check_O_operator(doc_o_instance(doc, opt), !opt.weak);
  if (what == "cond-coboundary")
    return check_coboundary_conditions(doc_rb(doc), resolve_q(doc, opt),
                                       get_tensor(doc, "r"));
  if (what == "same-construction")
    return check_same_construction(doc_rb(doc), resolve_q(doc, opt), get_tensor(doc, "r"));
  if (what == "triple-equivalence") {
    if (doc.partner && doc.partner->space == dual_of(doc.algebra.space))
      return triple_equivalence(doc_rb(doc), partner_rb(*doc.partner));
    if (doc.coproducts.count("delta") != 0)
      return triple_equivalence(RBLieBialgebra{get_product(doc, "bracket"),
                                               doc.algebra.weight, get_operator(doc, "P"),
                                               get_coproduct(doc, "delta"),
                                               resolve_q(doc, opt)});
    throw InputError(
        "triple equivalence needs a partner on the dual space or a coproduct delta");
  }
  throw InputError("unknown checker '" + what + "'");
}

// ---- builder output shapes -------------------------------------------------

DocumentFile single(StructureDocument d) {
  DocumentFile f;
  f.docs.push_back(std::move(d));
  return f;
}

DocumentFile batch(std::vector<StructureDocument> ds) {
  DocumentFile f;
  f.batch = true;
  f.docs = std::move(ds);
  return f;
}

StructureDocument rb_doc_of(const RBLieAlgebra& rb) {
  StructureDocument d;
  d.algebra.space = rb.space();
  d.algebra.weight = rb.weight;
  d.algebra.products["bracket"] = rb.alg.bracket;
  d.algebra.operators["P"] = rb.P;
  return d;
}

StructureDocument bialgebra_doc(const RBLieBialgebra& b) {
  StructureDocument d;
  d.algebra.space = b.space();
  d.algebra.weight = b.weight;
  d.algebra.products["bracket"] = b.bracket;
  d.algebra.operators["P"] = b.P;
  d.algebra.operators["Q"] = b.Q;
  d.coproducts["delta"] = b.delta;
  return d;
}

StructureDocument sld_doc(const SLDBialgebra& b) {
  StructureDocument d;
  d.algebra.space = b.space();
  d.algebra.products["tri_r"] = b.tri_r;
  d.algebra.products["tri_l"] = b.tri_l;
  d.coproducts["Delta"] = b.da;
  d.coproducts["Nabla"] = b.db;
  return d;
}

StructureDocument solution_doc(const CYBESolution& sol) {
  StructureDocument d = rb_doc_of(sol.rb);
  d.algebra.operators["Q"] = sol.Q;
  d.tensors["r"] = sol.r;
  return d;
}

// ---- builder dispatch ------------------------------------------------------

DocumentFile dispatch_derive(const std::string& op, const StructureDocument& doc,
                             const EngineOptions& opt) {
  if (op == "induce-prelie") {
    RBLieAlgebra rb = doc_rb(doc);
    PreLieAlgebra A = induce_prelie(rb);
    StructureDocument d;
    d.algebra.space = rb.space();
    d.algebra.weight = rb.weight;
    d.algebra.products["circ"] = A.prod;
    d.algebra.operators["P"] = rb.P;
    return single(std::move(d));
  }
  if (op == "subadjacent") {
    if (has_operator(doc, "P")) return single(rb_doc_of(subadjacent_rb(doc_rb_prelie(doc))));
    LieAlgebra g = subadjacent_lie(PreLieAlgebra{get_product(doc, "circ")});
    StructureDocument d;
    d.algebra.space = g.space();
    d.algebra.products["bracket"] = g.bracket;
    return single(std::move(d));
  }
  if (op == "dual-rep") {
    const RepresentationData& rd = get_rep(doc, opt);
    Representation dual = dual_representation(to_representation(doc, rd));
    RepresentationData out;
    out.module = dual.module;
    out.rho = dual.rho;
    if (rd.beta) out.alpha = rd.beta->transpose();
    if (rd.alpha) out.beta = rd.alpha->transpose();
    StructureDocument d = doc;
    d.representations.clear();
    d.representations["rho"] = std::move(out);
    return single(std::move(d));
  }
  if (op == "adjoint-op") {
    StructureDocument d = doc;
    d.algebra.operators["Phat"] =
        adjoint_operator_wrt_form(get_form(doc, "B"), get_operator(doc, "P"));
    return single(std::move(d));
  }
  if (op == "semidirect") {
    LieAlgebra g = semidirect_product_lie(to_representation(doc, get_rep(doc, opt)));
    StructureDocument d;
    d.algebra.space = g.space();
    d.algebra.products["bracket"] = g.bracket;
    return single(std::move(d));
  }
  if (op == "semidirect-rb") {
    const RepresentationData& rd = get_rep(doc, opt);
    return single(rb_doc_of(semidirect_product_rb(
        doc_rb(doc), RBRep{to_representation(doc, rd), rep_alpha(rd)})));
  }
  if (op == "special-ldend") {
    RBLieAlgebra rb = doc_rb(doc);
    Mat Q = resolve_q(doc, opt);
    LDendAlgebra ld = special_from_admissible(rb, Q);
    StructureDocument d;
    d.algebra.space = rb.space();
    d.algebra.weight = rb.weight;
    d.algebra.products["tri_r"] = ld.tri_r;
    d.algebra.products["tri_l"] = ld.tri_l;
    d.algebra.operators["P"] = rb.P;
    d.algebra.operators["Q"] = std::move(Q);
    return single(std::move(d));
  }
  if (op == "left-invariant-ldend") {
    LDendAlgebra ld = special_from_left_invariant_form(
        PreLieAlgebra{get_product(doc, "circ")}, get_form(doc, "B"));
    StructureDocument d;
    d.algebra.space = ld.space();
    d.algebra.products["tri_r"] = ld.tri_r;
    d.algebra.products["tri_l"] = ld.tri_l;
    return single(std::move(d));
  }
  if (op == "double-manin") {
    ManinTripleRB mt = build_manin_triple_rb(doc_rb(doc), partner_rb(get_partner(doc)));
    StructureDocument d;
    d.algebra.space = mt.dbl.space;
    d.algebra.weight = mt.weight;
    d.algebra.products["bracket"] = mt.dbl;
    d.algebra.operators["P"] = block_diag(mt.P, mt.Qstar);
    return single(std::move(d));
  }
  if (op == "coboundary-delta") {
    StructureDocument d = doc;
    d.coproducts["delta"] =
        coboundary_delta(get_product(doc, "bracket"), get_tensor(doc, "r"));
    return single(std::move(d));
  }
  if (op == "lift-o") {
    const RepresentationData& rd = get_rep(doc, opt);
    CYBESolution sol =
        lift_O_operator(doc_o_instance(doc, opt), resolve_q(doc, opt), rep_beta(rd));
    return single(solution_doc(sol));
  }
  if (op == "bialgebras-from-o") {
    std::vector<StructureDocument> ds;
    for (const RBLieBialgebra& b : bialgebra_family_from_O(doc_o_instance(doc, opt)))
      ds.push_back(bialgebra_doc(b));
    return batch(std::move(ds));
  }
  if (op == "canonical-r") {
    CanonicalFamily fam = canonical_family_from_prelie(doc_rb_prelie(doc));
    std::vector<StructureDocument> ds;
    ds.push_back(solution_doc(fam.solution));
    for (const RBLieBialgebra& b : fam.bialgebras) ds.push_back(bialgebra_doc(b));
    return batch(std::move(ds));
  }
  if (op == "induce-sld") {
    SLDBialgebra sb = induce_sld_bialgebra(
        RBLieBialgebra{get_product(doc, "bracket"), doc.algebra.weight,
                       get_operator(doc, "P"), get_coproduct(doc, "delta"),
                       resolve_q(doc, opt)});
    return single(sld_doc(sb));
  }
  if (op == "sld-from-o") {
    const RepresentationData& rd = get_rep(doc, opt);
    return single(sld_doc(
        sld_from_O(doc_o_instance(doc, opt), resolve_q(doc, opt), rep_beta(rd))));
  }
  if (op == "cons1") {
    RBLieAlgebra rb = doc_rb(doc);
    std::vector<StructureDocument> ds;
    if (!opt.q.empty()) {
      ds.push_back(sld_doc(sld_from_rb(rb, resolve_q(doc, opt))));
    } else {
      for (const SLDBialgebra& sb : sld_family_from_rb(rb)) ds.push_back(sld_doc(sb));
    }
    return batch(std::move(ds));
  }
  if (op == "cons2") {
    std::vector<StructureDocument> ds;
    for (const SLDBialgebra& sb : sld_family_from_prelie(doc_rb_prelie(doc)))
      ds.push_back(sld_doc(sb));
    return batch(std::move(ds));
  }
  if (op == "iterate-family") {
    std::vector<StructureDocument> ds;
    for (const SLDBialgebra& sb : iterate_family(doc_rb(doc), 1)) ds.push_back(sld_doc(sb));
    return batch(std::move(ds));
  }
  throw InputError("unknown builder '" + op + "'");
}

// ---- report applicability and tables ----------------------------------------

bool applicable(const std::string& what, const StructureDocument& doc,
                const EngineOptions& opt) {
  const bool bracket = has_product(doc, "bracket");
  const bool circ = has_product(doc, "circ");
  const bool ld = has_product(doc, "tri_r") || has_product(doc, "tri_l");
  const bool P = has_operator(doc, "P");
  const bool delta = doc.coproducts.count("delta") != 0;
  const bool sldco =
      doc.coproducts.count("Delta") != 0 && doc.coproducts.count("Nabla") != 0;
  const bool r = doc.tensors.count("r") != 0;
  const bool pair = doc.partner.has_value() && doc.actions.has_value();
  const bool dual_partner =
      doc.partner.has_value() && doc.partner->space == dual_of(doc.algebra.space);

  if (what == "lie") return bracket;
  if (what == "prelie") return circ;
  if (what == "ldend") return ld;
  if (what == "rb") return bracket && P;
  if (what == "rb-prelie") return circ && P;
  if (what == "rep") return has_rep(doc, opt);
  if (what == "rb-rep")
    return P && has_rep(doc, opt) && get_rep(doc, opt).alpha.has_value();
  if (what == "admissible")
    return bracket && P && (q_resolvable(doc, opt) || module_admissible_data(doc, opt));
  if (what == "form") return doc.forms.count("B") != 0;
  if (what == "lie-coalg") return delta;
  if (what == "rb-coalg") return delta && q_resolvable(doc, opt);
  if (what == "lie-bialg") return bracket && delta;
  if (what == "rb-bialg") return bracket && P && delta && q_resolvable(doc, opt);
  if (what == "sld-coalg") return sldco;
  if (what == "sld-bialg") return ld && sldco;
  if (what == "matched-pair") return pair;
  if (what == "matched-pair-rb")
    return pair && P && doc.partner->operators.count("P") != 0;
  if (what == "matched-pair-prelie")
    return pair && circ && doc.partner->products.count("circ") != 0;
  if (what == "manin-rb")
    return dual_partner && P && doc.partner->operators.count("P") != 0 &&
           doc.partner->weight == doc.algebra.weight;
  if (what == "manin-prelie")
    return dual_partner && ld &&
           (doc.partner->products.count("tri_r") != 0 ||
            doc.partner->products.count("tri_l") != 0);
  if (what == "cybe") return r && bracket && P && q_resolvable(doc, opt);
  if (what == "o-operator") return P && has_rep(doc, opt) && has_operator(doc, "T");
  if (what == "cond-coboundary") return r && bracket && P && q_resolvable(doc, opt);
  if (what == "same-construction")
    return r && bracket && P && q_resolvable(doc, opt) &&
           doc.algebra.weight == Scalar(0);
  if (what == "triple-equivalence") {
    if (dual_partner && P && doc.partner->operators.count("P") != 0 &&
        doc.partner->weight == doc.algebra.weight)
      return true;
    return bracket && P && delta && q_resolvable(doc, opt);
  }
  return false;
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<std::string> product_table(const BilinearProduct& p, const std::string& infix,
                                       bool upper_only) {
  std::vector<std::string> lines;
  const Space& s = p.space;
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = upper_only ? i + 1 : 0; j < s.dim(); ++j) {
      std::vector<Scalar> v = eval_basis(p, i, j);
      if (all_zero(v)) continue;
      lines.push_back(s.basis[static_cast<size_t>(i)] + infix +
                      s.basis[static_cast<size_t>(j)] + " = " + pretty(s, v));
    }
  }
  return lines;
}

// Product tables for documents carrying a weight-0 Rota-Baxter structure: the
// induced product, and when a form B is present, the adjoint operator and the
// left product it determines. Tables are skipped when their construction fails.
void add_tables(const StructureDocument& doc, ReportResult& res) {
  if (!has_product(doc, "bracket") || !has_operator(doc, "P")) return;
  if (!(doc.algebra.weight == Scalar(0))) return;
  const Space& s = doc.algebra.space;
  RBLieAlgebra rb = doc_rb(doc);
  BilinearProduct circ = zero_product(s);
  try {
    circ = induce_prelie(rb).prod;
  } catch (const StructureError&) {
    return;
  } catch (const InputError&) {
    return;
  }
  res.tables.emplace_back("pre-Lie product", product_table(circ, " o ", false));
  if (doc.forms.count("B") == 0) return;
  Mat phat;
  try {
    phat = adjoint_operator_wrt_form(doc.forms.at("B"), rb.P);
  } catch (const StructureError&) {
    return;
  } catch (const InputError&) {
    return;
  }
  std::vector<std::string> lines;
  for (int i = 0; i < s.dim(); ++i)
    lines.push_back("P^(" + s.basis[static_cast<size_t>(i)] + ") = " +
                    pretty(s, phat.col(i)));
  res.tables.emplace_back("adjoint operator P^", std::move(lines));
  try {
    LDendAlgebra ld = special_from_admissible(rb, phat);
    res.tables.emplace_back("left product <|", product_table(ld.tri_l, " <| ", true));
  } catch (const StructureError&) {
  } catch (const InputError&) {
  }
}

// ---- rendering ---------------------------------------------------------------

ojson check_to_json(const CheckReport& c) {
  ojson out;
  out["check"] = c.check;
  out["pass"] = c.pass();
  out["ms"] = c.ms;
  ojson vs = ojson::array();
  for (const Violation& v : c.violations) {
    ojson jv;
    jv["equation"] = v.equation;
    jv["witness"] = v.witness;
    if (!v.defect.empty()) {
      ojson d = ojson::object();
      for (const auto& [label, val] : v.defect) d[label] = val.str();
      jv["defect"] = std::move(d);
    }
    vs.push_back(std::move(jv));
  }
  out["violations"] = std::move(vs);
  return out;
}

ojson result_to_json(const ReportResult& res) {
  ojson out;
  out["pass"] = res.pass();
  ojson cs = ojson::array();
  for (const CheckReport& c : res.checks) cs.push_back(check_to_json(c));
  out["checks"] = std::move(cs);
  if (!res.tables.empty()) {
    ojson ts = ojson::array();
    for (const auto& [title, lines] : res.tables) {
      ojson t;
      t["title"] = title;
      t["lines"] = lines;
      ts.push_back(std::move(t));
    }
    out["tables"] = std::move(ts);
  }
  return out;
}

} // namespace

const std::vector<std::string>& checker_names() {
  static const std::vector<std::string> names{
      "lie",          "prelie",
      "ldend",        "rb",
      "rb-prelie",    "rep",
      "rb-rep",       "admissible",
      "form",         "lie-coalg",
      "rb-coalg",     "lie-bialg",
      "rb-bialg",     "sld-coalg",
      "sld-bialg",    "matched-pair",
      "matched-pair-rb", "matched-pair-prelie",
      "manin-rb",     "manin-prelie",
      "cybe",         "o-operator",
      "cond-coboundary", "same-construction",
      "triple-equivalence"};
  return names;
}

const std::vector<std::string>& builder_names() {
  static const std::vector<std::string> names{
      "induce-prelie", "subadjacent",   "dual-rep",        "adjoint-op",
      "semidirect",    "semidirect-rb", "special-ldend",   "left-invariant-ldend",
      "double-manin",  "coboundary-delta", "lift-o",       "bialgebras-from-o",
      "canonical-r",   "induce-sld",    "sld-from-o",      "cons1",
      "cons2",         "iterate-family"};
  return names;
}

CheckReport run_check(const std::string& what, const StructureDocument& doc,
                      const EngineOptions& opt) {
  const auto& names = checker_names();
  if (std::find(names.begin(), names.end(), what) == names.end())
    throw InputError("unknown checker '" + what + "'");
  try {
    return dispatch_check(what, doc, opt);
  } catch (const StructureError& e) {
    return e.report(); // construction failures carry their evidence
  }
}

DocumentFile run_derive(const std::string& op, const StructureDocument& doc,
                        const EngineOptions& opt) {
  const auto& names = builder_names();
  if (std::find(names.begin(), names.end(), op) == names.end())
    throw InputError("unknown builder '" + op + "'");
  return dispatch_derive(op, doc, opt);
}

bool ReportResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.pass(); });
}

ReportResult run_report(const StructureDocument& doc, const EngineOptions& opt) {
  ReportResult res;
  for (const std::string& what : checker_names())
    if (applicable(what, doc, opt)) res.checks.push_back(run_check(what, doc, opt));
  add_tables(doc, res);
  return res;
}

std::string render_text(const ReportResult& res) {
  std::string out;
  for (const CheckReport& c : res.checks) out += summary(c) + "\n";
  for (const auto& [title, lines] : res.tables) {
    out += "\n" + title + ":\n";
    for (const std::string& l : lines) out += "  " + l + "\n";
  }
  return out;
}

std::string render_text(const std::vector<ReportResult>& items) {
  if (items.size() == 1) return render_text(items[0]);
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    out += "-- item " + std::to_string(i) + " --\n";
    out += render_text(items[i]);
  }
  return out;
}

std::string render_json(const ReportResult& res, bool with_text) {
  ojson out = result_to_json(res);
  if (with_text) out["text"] = render_text(res);
  return out.dump(2) + "\n";
}

std::string render_json(const std::vector<ReportResult>& items, bool with_text) {
  ojson out;
  out["pass"] = std::all_of(items.begin(), items.end(),
                            [](const ReportResult& r) { return r.pass(); });
  ojson arr = ojson::array();
  for (const ReportResult& r : items) arr.push_back(result_to_json(r));
  out["items"] = std::move(arr);
  if (with_text) out["text"] = render_text(items);
  return out.dump(2) + "\n";
}

} // namespace rbla

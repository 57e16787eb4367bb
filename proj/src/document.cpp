#include "document.hpp"

#include <json.hpp>

#include <cstdlib>
#include <initializer_list>
#include <utility>

#include "error.hpp"

namespace rbla {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(msg + " at " + (path.empty() ? "/" : path));
}

const json& member(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) fail(path, "unknown field '" + it.key() + "'");
  }
}

Scalar parse_scalar(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "scalar must be a string like \"2\" or \"-1/3\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

int label_index(const Space& s, const std::string& label, const std::string& path) {
  for (int i = 0; i < s.dim(); ++i)
    if (s.basis[static_cast<size_t>(i)] == label) return i;
  fail(path, "unknown basis label '" + label + "' in '" + s.name + "'");
}

Space parse_space(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"name", "basis"});
  Space s;
  s.name = expect_string(member(j, path, "name"), path + "/name");
  const json& b = member(j, path, "basis");
  if (!b.is_array()) fail(path + "/basis", "expected an array");
  for (size_t i = 0; i < b.size(); ++i)
    s.basis.push_back(expect_string(b[i], path + "/basis/" + std::to_string(i)));
  if (s.dim() > max_dimension())
    fail(path, "dimension " + std::to_string(s.dim()) + " exceeds the limit " +
                   std::to_string(max_dimension()));
  for (size_t i = 0; i < s.basis.size(); ++i)
    for (size_t j2 = i + 1; j2 < s.basis.size(); ++j2)
      if (s.basis[i] == s.basis[j2])
        fail(path + "/basis", "duplicate name '" + s.basis[i] + "'");
  return s;
}

Mat parse_colmap(const json& j, const std::string& path, const Space& dom, const Space& cod) {
  expect_object(j, path);
  Mat m(cod.dim(), dom.dim());
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string cp = path + "/" + it.key();
    int col = label_index(dom, it.key(), cp);
    expect_object(it.value(), cp);
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
      int row = label_index(cod, jt.key(), cp + "/" + jt.key());
      m.at(row, col) = parse_scalar(jt.value(), cp + "/" + jt.key());
    }
  }
  return m;
}

// Walks [{left, right, value}, ...], resolving labels against s and rejecting
// a repeated (left, right) pair. fn(i, j, value json, value path).
template <class F>
void walk_entries(const json& arr, const std::string& path, const Space& s, F&& fn) {
  if (!arr.is_array()) fail(path, "expected an array");
  std::vector<std::vector<bool>> seen(static_cast<size_t>(s.dim()),
                                      std::vector<bool>(static_cast<size_t>(s.dim()), false));
  for (size_t e = 0; e < arr.size(); ++e) {
    std::string ep = path + "/" + std::to_string(e);
    const json& ej = arr[e];
    expect_object(ej, ep);
    check_keys(ej, ep, {"left", "right", "value"});
    int i = label_index(s, expect_string(member(ej, ep, "left"), ep + "/left"), ep + "/left");
    int j = label_index(s, expect_string(member(ej, ep, "right"), ep + "/right"), ep + "/right");
    auto& row = seen[static_cast<size_t>(i)];
    if (row[static_cast<size_t>(j)])
      fail(ep, "duplicate entry for (" + s.basis[static_cast<size_t>(i)] + ", " +
                   s.basis[static_cast<size_t>(j)] + ")");
    row[static_cast<size_t>(j)] = true;
    fn(i, j, member(ej, ep, "value"), ep + "/value");
  }
}

BilinearProduct parse_product(const json& j, const std::string& path, const Space& s) {
  expect_object(j, path);
  check_keys(j, path, {"antisymmetrize", "entries"});
  bool anti = false;
  if (auto it = j.find("antisymmetrize"); it != j.end()) {
    if (!it->is_boolean()) fail(path + "/antisymmetrize", "expected true or false");
    anti = it->get<bool>();
  }
  BilinearProduct p = zero_product(s);
  std::vector<std::vector<bool>> given(static_cast<size_t>(s.dim()),
                                       std::vector<bool>(static_cast<size_t>(s.dim()), false));
  if (auto it = j.find("entries"); it != j.end())
    walk_entries(*it, path + "/entries", s,
                 [&](int i, int jdx, const json& val, const std::string& vp) {
                   expect_object(val, vp);
                   given[static_cast<size_t>(i)][static_cast<size_t>(jdx)] = true;
                   for (auto vt = val.begin(); vt != val.end(); ++vt) {
                     int k = label_index(s, vt.key(), vp + "/" + vt.key());
                     p.L[static_cast<size_t>(i)].at(k, jdx) =
                         parse_scalar(vt.value(), vp + "/" + vt.key());
                   }
                 });
  if (anti) {
    const int n = s.dim();
    for (int i = 0; i < n; ++i) {
      if (given[static_cast<size_t>(i)][static_cast<size_t>(i)])
        for (int k = 0; k < n; ++k)
          if (!p.L[static_cast<size_t>(i)].at(k, i).is_zero())
            fail(path, "entry (" + s.basis[static_cast<size_t>(i)] + ", " +
                           s.basis[static_cast<size_t>(i)] +
                           ") must vanish under antisymmetrize");
      for (int j2 = i + 1; j2 < n; ++j2) {
        bool up = given[static_cast<size_t>(i)][static_cast<size_t>(j2)];
        bool dn = given[static_cast<size_t>(j2)][static_cast<size_t>(i)];
        for (int k = 0; k < n; ++k) {
          Scalar& a = p.L[static_cast<size_t>(i)].at(k, j2);
          Scalar& b = p.L[static_cast<size_t>(j2)].at(k, i);
          if (up && dn) {
            if (!(a == -b))
              fail(path, "conflicting completed entry for (" +
                             s.basis[static_cast<size_t>(j2)] + ", " +
                             s.basis[static_cast<size_t>(i)] + ")");
          } else if (up) {
            b = -a;
          } else if (dn) {
            a = -b;
          }
        }
      }
    }
  }
  return p;
}

BilinearForm parse_form(const json& j, const std::string& path, const Space& s) {
  expect_object(j, path);
  check_keys(j, path, {"entries"});
  Mat b(s.dim(), s.dim());
  if (auto it = j.find("entries"); it != j.end())
    walk_entries(*it, path + "/entries", s,
                 [&](int i, int jdx, const json& val, const std::string& vp) {
                   b.at(i, jdx) = parse_scalar(val, vp);
                 });
  return BilinearForm{s, std::move(b)};
}

Coproduct parse_coproduct(const json& j, const std::string& path, const Space& s) {
  expect_object(j, path);
  Coproduct d = zero_coproduct(s);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string cp = path + "/" + it.key();
    int i = label_index(s, it.key(), cp);
    walk_entries(it.value(), cp, s,
                 [&](int a, int b, const json& val, const std::string& vp) {
                   d.cols[static_cast<size_t>(i)].c.at(a, b) = parse_scalar(val, vp);
                 });
  }
  return d;
}

Tensor2 parse_tensor(const json& j, const std::string& path, const Space& s) {
  Tensor2 t = zero_tensor2(s, s);
  walk_entries(j, path, s, [&](int a, int b, const json& val, const std::string& vp) {
    t.c.at(a, b) = parse_scalar(val, vp);
  });
  return t;
}

RepresentationData parse_representation(const json& j, const std::string& path, const Space& gs) {
  expect_object(j, path);
  check_keys(j, path, {"module", "matrices", "alpha", "beta"});
  RepresentationData out;
  out.module = parse_space(member(j, path, "module"), path + "/module");
  const int m = out.module.dim();
  out.rho.assign(static_cast<size_t>(gs.dim()), Mat(m, m));
  if (auto it = j.find("matrices"); it != j.end()) {
    expect_object(*it, path + "/matrices");
    for (auto mt = it->begin(); mt != it->end(); ++mt) {
      std::string mp = path + "/matrices/" + mt.key();
      int i = label_index(gs, mt.key(), mp);
      out.rho[static_cast<size_t>(i)] = parse_colmap(mt.value(), mp, out.module, out.module);
    }
  }
  if (auto it = j.find("alpha"); it != j.end())
    out.alpha = parse_colmap(*it, path + "/alpha", out.module, out.module);
  if (auto it = j.find("beta"); it != j.end())
    out.beta = parse_colmap(*it, path + "/beta", out.module, out.module);
  return out;
}

// Every main-level operator is square on the carrier except T, which maps the
// module of the representation named "rho" (or the only one) into the carrier.
const Space& operator_domain(const std::string& name, const Space& gs,
                             const std::map<std::string, RepresentationData>& reps,
                             const std::string& path) {
  if (name != "T" || reps.empty()) return gs;
  if (auto it = reps.find("rho"); it != reps.end()) return it->second.module;
  if (reps.size() == 1) return reps.begin()->second.module;
  fail(path, "ambiguous module for operator 'T'");
}

AlgebraPart parse_algebra(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"space", "weight", "products", "operators"});
  AlgebraPart out;
  out.space = parse_space(member(j, path, "space"), path + "/space");
  if (auto it = j.find("weight"); it != j.end())
    out.weight = parse_scalar(*it, path + "/weight");
  if (auto it = j.find("products"); it != j.end()) {
    expect_object(*it, path + "/products");
    for (auto pt = it->begin(); pt != it->end(); ++pt)
      out.products[pt.key()] =
          parse_product(pt.value(), path + "/products/" + pt.key(), out.space);
  }
  if (auto it = j.find("operators"); it != j.end()) {
    expect_object(*it, path + "/operators");
    for (auto ot = it->begin(); ot != it->end(); ++ot)
      out.operators[ot.key()] =
          parse_colmap(ot.value(), path + "/operators/" + ot.key(), out.space, out.space);
  }
  return out;
}

std::vector<Mat> parse_action_list(const json& j, const std::string& path, const Space& over,
                                   const Space& on) {
  std::vector<Mat> out(static_cast<size_t>(over.dim()), Mat(on.dim(), on.dim()));
  expect_object(j, path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string p = path + "/" + it.key();
    int i = label_index(over, it.key(), p);
    out[static_cast<size_t>(i)] = parse_colmap(it.value(), p, on, on);
  }
  return out;
}

MatchedActions parse_actions(const json& j, const std::string& path, const Space& gs,
                             const Space& hs) {
  expect_object(j, path);
  check_keys(j, path, {"rho", "mu", "rho_right", "mu_right"});
  MatchedActions out;
  out.rho.assign(static_cast<size_t>(gs.dim()), Mat(hs.dim(), hs.dim()));
  out.mu.assign(static_cast<size_t>(hs.dim()), Mat(gs.dim(), gs.dim()));
  out.rho_right = out.rho;
  out.mu_right = out.mu;
  if (auto it = j.find("rho"); it != j.end())
    out.rho = parse_action_list(*it, path + "/rho", gs, hs);
  if (auto it = j.find("mu"); it != j.end())
    out.mu = parse_action_list(*it, path + "/mu", hs, gs);
  if (auto it = j.find("rho_right"); it != j.end())
    out.rho_right = parse_action_list(*it, path + "/rho_right", gs, hs);
  if (auto it = j.find("mu_right"); it != j.end())
    out.mu_right = parse_action_list(*it, path + "/mu_right", hs, gs);
  return out;
}

StructureDocument parse_single(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path,
             {"format", "space", "weight", "products", "operators", "forms", "coproducts",
              "tensors", "representations", "partner", "actions"});
  if (expect_string(member(j, path, "format"), path + "/format") != "rbla/1")
    fail(path + "/format", "expected \"rbla/1\"");
  StructureDocument doc;
  doc.algebra.space = parse_space(member(j, path, "space"), path + "/space");
  const Space& gs = doc.algebra.space;
  if (auto it = j.find("weight"); it != j.end())
    doc.algebra.weight = parse_scalar(*it, path + "/weight");
  if (auto it = j.find("representations"); it != j.end()) {
    expect_object(*it, path + "/representations");
    for (auto rt = it->begin(); rt != it->end(); ++rt)
      doc.representations[rt.key()] =
          parse_representation(rt.value(), path + "/representations/" + rt.key(), gs);
  }
  if (auto it = j.find("products"); it != j.end()) {
    expect_object(*it, path + "/products");
    for (auto pt = it->begin(); pt != it->end(); ++pt)
      doc.algebra.products[pt.key()] =
          parse_product(pt.value(), path + "/products/" + pt.key(), gs);
  }
  if (auto it = j.find("operators"); it != j.end()) {
    expect_object(*it, path + "/operators");
    for (auto ot = it->begin(); ot != it->end(); ++ot) {
      std::string op = path + "/operators/" + ot.key();
      const Space& dom = operator_domain(ot.key(), gs, doc.representations, op);
      doc.algebra.operators[ot.key()] = parse_colmap(ot.value(), op, dom, gs);
    }
  }
  if (auto it = j.find("forms"); it != j.end()) {
    expect_object(*it, path + "/forms");
    for (auto ft = it->begin(); ft != it->end(); ++ft)
      doc.forms[ft.key()] = parse_form(ft.value(), path + "/forms/" + ft.key(), gs);
  }
  if (auto it = j.find("coproducts"); it != j.end()) {
    expect_object(*it, path + "/coproducts");
    for (auto ct = it->begin(); ct != it->end(); ++ct)
      doc.coproducts[ct.key()] =
          parse_coproduct(ct.value(), path + "/coproducts/" + ct.key(), gs);
  }
  if (auto it = j.find("tensors"); it != j.end()) {
    expect_object(*it, path + "/tensors");
    for (auto tt = it->begin(); tt != it->end(); ++tt)
      doc.tensors[tt.key()] = parse_tensor(tt.value(), path + "/tensors/" + tt.key(), gs);
  }
  if (auto it = j.find("partner"); it != j.end())
    doc.partner = parse_algebra(*it, path + "/partner");
  if (auto it = j.find("actions"); it != j.end()) {
    if (!doc.partner) fail(path + "/actions", "actions need a partner block");
    doc.actions = parse_actions(*it, path + "/actions", gs, doc.partner->space);
  }
  return doc;
}

ordered space_json(const Space& s) {
  ordered out;
  out["name"] = s.name;
  out["basis"] = s.basis;
  return out;
}

ordered colmap_json(const Mat& m, const Space& dom, const Space& cod) {
  ordered out = ordered::object();
  for (int j = 0; j < dom.dim(); ++j) {
    ordered col = ordered::object();
    for (int i = 0; i < cod.dim(); ++i)
      if (!m.at(i, j).is_zero()) col[cod.basis[static_cast<size_t>(i)]] = m.at(i, j).str();
    if (!col.empty()) out[dom.basis[static_cast<size_t>(j)]] = std::move(col);
  }
  return out;
}

ordered product_json(const BilinearProduct& p) {
  const Space& s = p.space;
  ordered entries = ordered::array();
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      ordered val = ordered::object();
      for (int k = 0; k < s.dim(); ++k) {
        Scalar c = p.coeff(i, j, k);
        if (!c.is_zero()) val[s.basis[static_cast<size_t>(k)]] = c.str();
      }
      if (!val.empty())
        entries.push_back(ordered{{"left", s.basis[static_cast<size_t>(i)]},
                                  {"right", s.basis[static_cast<size_t>(j)]},
                                  {"value", std::move(val)}});
    }
  ordered out;
  out["entries"] = std::move(entries);
  return out;
}

ordered scalar_entries_json(const Mat& m, const Space& s) {
  ordered entries = ordered::array();
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      if (!m.at(i, j).is_zero())
        entries.push_back(ordered{{"left", s.basis[static_cast<size_t>(i)]},
                                  {"right", s.basis[static_cast<size_t>(j)]},
                                  {"value", m.at(i, j).str()}});
  return entries;
}

ordered coproduct_json(const Coproduct& d) {
  const Space& s = d.space;
  ordered out = ordered::object();
  for (int i = 0; i < s.dim(); ++i) {
    ordered entries = scalar_entries_json(d.cols[static_cast<size_t>(i)].c, s);
    if (!entries.empty()) out[s.basis[static_cast<size_t>(i)]] = std::move(entries);
  }
  return out;
}

ordered rep_json(const RepresentationData& r, const Space& gs) {
  ordered out;
  out["module"] = space_json(r.module);
  ordered mats = ordered::object();
  for (int i = 0; i < gs.dim(); ++i) {
    ordered cm = colmap_json(r.rho[static_cast<size_t>(i)], r.module, r.module);
    if (!cm.empty()) mats[gs.basis[static_cast<size_t>(i)]] = std::move(cm);
  }
  if (!mats.empty()) out["matrices"] = std::move(mats);
  if (r.alpha) out["alpha"] = colmap_json(*r.alpha, r.module, r.module);
  if (r.beta) out["beta"] = colmap_json(*r.beta, r.module, r.module);
  return out;
}

ordered algebra_json(const AlgebraPart& a) {
  ordered out;
  out["space"] = space_json(a.space);
  if (!a.weight.is_zero()) out["weight"] = a.weight.str();
  if (!a.products.empty()) {
    ordered ps = ordered::object();
    for (const auto& [name, p] : a.products) ps[name] = product_json(p);
    out["products"] = std::move(ps);
  }
  if (!a.operators.empty()) {
    ordered os = ordered::object();
    for (const auto& [name, m] : a.operators) os[name] = colmap_json(m, a.space, a.space);
    out["operators"] = std::move(os);
  }
  return out;
}

ordered action_list_json(const std::vector<Mat>& a, const Space& over, const Space& on) {
  ordered out = ordered::object();
  for (int i = 0; i < over.dim(); ++i) {
    ordered cm = colmap_json(a[static_cast<size_t>(i)], on, on);
    if (!cm.empty()) out[over.basis[static_cast<size_t>(i)]] = std::move(cm);
  }
  return out;
}

ordered actions_json(const MatchedActions& a, const Space& gs, const Space& hs) {
  ordered out;
  ordered rj = action_list_json(a.rho, gs, hs);
  if (!rj.empty()) out["rho"] = std::move(rj);
  ordered mj = action_list_json(a.mu, hs, gs);
  if (!mj.empty()) out["mu"] = std::move(mj);
  ordered rrj = action_list_json(a.rho_right, gs, hs);
  if (!rrj.empty()) out["rho_right"] = std::move(rrj);
  ordered mrj = action_list_json(a.mu_right, hs, gs);
  if (!mrj.empty()) out["mu_right"] = std::move(mrj);
  return out;
}

ordered doc_json(const StructureDocument& d) {
  const Space& gs = d.algebra.space;
  ordered out;
  out["format"] = "rbla/1";
  out["space"] = space_json(gs);
  if (!d.algebra.weight.is_zero()) out["weight"] = d.algebra.weight.str();
  if (!d.algebra.products.empty()) {
    ordered ps = ordered::object();
    for (const auto& [name, p] : d.algebra.products) ps[name] = product_json(p);
    out["products"] = std::move(ps);
  }
  if (!d.algebra.operators.empty()) {
    ordered os = ordered::object();
    for (const auto& [name, m] : d.algebra.operators) {
      const Space& dom = operator_domain(name, gs, d.representations, "/operators/" + name);
      os[name] = colmap_json(m, dom, gs);
    }
    out["operators"] = std::move(os);
  }
  if (!d.forms.empty()) {
    ordered fs = ordered::object();
    for (const auto& [name, f] : d.forms) fs[name]["entries"] = scalar_entries_json(f.b, gs);
    out["forms"] = std::move(fs);
  }
  if (!d.coproducts.empty()) {
    ordered cs = ordered::object();
    for (const auto& [name, c] : d.coproducts) cs[name] = coproduct_json(c);
    out["coproducts"] = std::move(cs);
  }
  if (!d.tensors.empty()) {
    ordered ts = ordered::object();
    for (const auto& [name, t] : d.tensors) ts[name] = scalar_entries_json(t.c, gs);
    out["tensors"] = std::move(ts);
  }
  if (!d.representations.empty()) {
    ordered rs = ordered::object();
    for (const auto& [name, r] : d.representations) rs[name] = rep_json(r, gs);
    out["representations"] = std::move(rs);
  }
  if (d.actions) out["actions"] = actions_json(*d.actions, gs, d.partner->space);
  if (d.partner) out["partner"] = algebra_json(*d.partner);
  return out;
}

} // namespace

int max_dimension() {
  if (const char* env = std::getenv("RBLA_MAX_DIM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return 16;
}

DocumentFile parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "expected an object");
  if (auto it = j.find("format"); it != j.end() && *it == "rbla/1-batch") {
    check_keys(j, "", {"format", "items"});
    const json& items = member(j, "", "items");
    if (!items.is_array()) fail("/items", "expected an array");
    DocumentFile f{true, {}};
    for (size_t i = 0; i < items.size(); ++i)
      f.docs.push_back(parse_single(items[i], "/items/" + std::to_string(i)));
    return f;
  }
  DocumentFile f{false, {}};
  f.docs.push_back(parse_single(j, ""));
  return f;
}

std::string serialize_document(const DocumentFile& f) {
  ordered out;
  if (f.batch) {
    out["format"] = "rbla/1-batch";
    ordered items = ordered::array();
    for (const auto& d : f.docs) items.push_back(doc_json(d));
    out["items"] = std::move(items);
  } else {
    if (f.docs.size() != 1)
      throw InputError("a plain document holds exactly one structure; use a batch");
    out = doc_json(f.docs.front());
  }
  return out.dump(2) + "\n";
}

} // namespace rbla

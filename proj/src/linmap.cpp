#include "linmap.hpp"

#include "error.hpp"

namespace rbla {

LinearMap make_map(Space dom, Space cod, Mat m) {
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw InputError("map shape does not match spaces '" + dom.name + "' -> '" + cod.name + "'");
  return LinearMap{std::move(dom), std::move(cod), std::move(m)};
}

LinearMap identity_map(const Space& s) { return LinearMap{s, s, Mat::identity(s.dim())}; }

LinearMap zero_map(const Space& dom, const Space& cod) {
  return LinearMap{dom, cod, Mat(cod.dim(), dom.dim())};
}

LinearMap scaled_identity(const Space& s, const Scalar& k) {
  return LinearMap{s, s, k * Mat::identity(s.dim())};
}

Vector apply(const LinearMap& f, const Vector& v) {
  if (v.space != f.dom) throw InputError("map applied to vector from the wrong space");
  return Vector{f.cod, f.m.apply(v.c)};
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (g.cod != f.dom) throw InputError("map composition space mismatch");
  return LinearMap{g.dom, f.cod, f.m * g.m};
}

LinearMap add(const LinearMap& a, const LinearMap& b) {
  if (a.dom != b.dom || a.cod != b.cod) throw InputError("map addition space mismatch");
  return LinearMap{a.dom, a.cod, a.m + b.m};
}

LinearMap sub(const LinearMap& a, const LinearMap& b) {
  if (a.dom != b.dom || a.cod != b.cod) throw InputError("map subtraction space mismatch");
  return LinearMap{a.dom, a.cod, a.m - b.m};
}

LinearMap scale(const Scalar& s, LinearMap f) {
  f.m = s * f.m;
  return f;
}

LinearMap negate(LinearMap f) { return scale(Scalar(-1), std::move(f)); }

bool is_zero(const LinearMap& f) { return f.m.is_zero(); }

LinearMap transpose_map(const LinearMap& f) {
  return LinearMap{dual_of(f.cod), dual_of(f.dom), f.m.transpose()};
}

std::optional<LinearMap> inverse_map(const LinearMap& f) {
  if (f.dom.dim() != f.cod.dim()) return std::nullopt;
  auto inv = f.m.inverse();
  if (!inv) return std::nullopt;
  return LinearMap{f.cod, f.dom, *inv};
}

LinearMap direct_sum_map(const LinearMap& a, const LinearMap& b) {
  Space dom = direct_sum(a.dom, b.dom);
  Space cod = direct_sum(a.cod, b.cod);
  Mat m(cod.dim(), dom.dim());
  for (int i = 0; i < a.cod.dim(); ++i)
    for (int j = 0; j < a.dom.dim(); ++j) m.at(i, j) = a.m.at(i, j);
  const int ro = a.cod.dim(), co = a.dom.dim();
  for (int i = 0; i < b.cod.dim(); ++i)
    for (int j = 0; j < b.dom.dim(); ++j) m.at(ro + i, co + j) = b.m.at(i, j);
  return LinearMap{std::move(dom), std::move(cod), std::move(m)};
}

} // namespace rbla

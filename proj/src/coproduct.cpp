#include "coproduct.hpp"

#include "error.hpp"

namespace rbla {

Coproduct make_coproduct(Space space, std::vector<Tensor2> cols) {
  if (static_cast<int>(cols.size()) != space.dim())
    throw InputError("coproduct on '" + space.name + "' needs one value per basis vector");
  for (const auto& t : cols)
    if (t.s1 != space || t.s2 != space)
      throw InputError("coproduct value lives in the wrong tensor square");
  return Coproduct{std::move(space), std::move(cols)};
}

Coproduct zero_coproduct(const Space& space) {
  std::vector<Tensor2> cols(static_cast<size_t>(space.dim()), zero_tensor2(space, space));
  return Coproduct{space, std::move(cols)};
}

Tensor2 apply_coproduct(const Coproduct& d, const Vector& x) {
  if (x.space != d.space) throw InputError("coproduct applied to vector from the wrong space");
  Tensor2 out = zero_tensor2(d.space, d.space);
  for (int i = 0; i < d.space.dim(); ++i) {
    const auto& xi = x.c[static_cast<size_t>(i)];
    if (xi.is_zero()) continue;
    out.c += xi * d.cols[static_cast<size_t>(i)].c;
  }
  return out;
}

bool is_coantisymmetric(const Coproduct& d) {
  for (const auto& t : d.cols)
    if (!is_antisymmetric(t)) return false;
  return true;
}

Tensor3 expand_left(const Coproduct& d, const Tensor2& t) {
  if (t.s1 != d.space || t.s2 != d.space) throw InputError("tensor expansion space mismatch");
  const int n = d.space.dim();
  Tensor3 out = zero_tensor3(d.space, d.space, d.space);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& tij = t.c.at(i, j);
      if (tij.is_zero()) continue;
      const auto& di = d.cols[static_cast<size_t>(i)];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.at(a, b, j) += tij * di.c.at(a, b);
    }
  return out;
}

Tensor3 expand_right(const Coproduct& d, const Tensor2& t) {
  if (t.s1 != d.space || t.s2 != d.space) throw InputError("tensor expansion space mismatch");
  const int n = d.space.dim();
  Tensor3 out = zero_tensor3(d.space, d.space, d.space);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& tij = t.c.at(i, j);
      if (tij.is_zero()) continue;
      const auto& dj = d.cols[static_cast<size_t>(j)];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.at(i, a, b) += tij * dj.c.at(a, b);
    }
  return out;
}

Coproduct dualize_product(const BilinearProduct& p) {
  Space dual = dual_of(p.space);
  const int n = dual.dim();
  Coproduct out = zero_coproduct(dual);
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out.cols[static_cast<size_t>(k)].c.at(a, b) = p.coeff(a, b, k);
  return out;
}

BilinearProduct dualize_coproduct(const Coproduct& d) {
  Space dual = dual_of(d.space);
  const int n = dual.dim();
  BilinearProduct out = zero_product(dual);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        out.L[static_cast<size_t>(a)].at(k, b) = d.cols[static_cast<size_t>(k)].c.at(a, b);
  return out;
}

} // namespace rbla

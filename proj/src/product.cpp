#include "product.hpp"

#include "error.hpp"

namespace rbla {

BilinearProduct make_product(Space space, std::vector<Mat> L) {
  const int n = space.dim();
  if (static_cast<int>(L.size()) != n)
    throw InputError("product on '" + space.name + "' needs one operator per basis vector");
  for (const auto& m : L)
    if (m.rows() != n || m.cols() != n)
      throw InputError("product operator shape does not match '" + space.name + "'");
  return BilinearProduct{std::move(space), std::move(L)};
}

BilinearProduct zero_product(const Space& space) {
  std::vector<Mat> L(static_cast<size_t>(space.dim()), Mat(space.dim(), space.dim()));
  return BilinearProduct{space, std::move(L)};
}

std::vector<Scalar> eval_basis(const BilinearProduct& p, int i, int j) {
  return p.L[static_cast<size_t>(i)].col(j);
}

Vector eval(const BilinearProduct& p, const Vector& x, const Vector& y) {
  if (x.space != p.space || y.space != p.space)
    throw InputError("product arguments from the wrong space");
  const int n = p.space.dim();
  Vector out = zero_vector(p.space);
  for (int i = 0; i < n; ++i) {
    if (x.c[static_cast<size_t>(i)].is_zero()) continue;
    auto row = p.L[static_cast<size_t>(i)].apply(y.c);
    for (int k = 0; k < n; ++k)
      out.c[static_cast<size_t>(k)] += x.c[static_cast<size_t>(i)] * row[static_cast<size_t>(k)];
  }
  return out;
}

LinearMap left_mult(const BilinearProduct& p, const Vector& x) {
  if (x.space != p.space) throw InputError("left multiplication by vector from the wrong space");
  const int n = p.space.dim();
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (x.c[static_cast<size_t>(i)].is_zero()) continue;
    m += x.c[static_cast<size_t>(i)] * p.L[static_cast<size_t>(i)];
  }
  return LinearMap{p.space, p.space, std::move(m)};
}

LinearMap right_mult(const BilinearProduct& p, const Vector& y) {
  if (y.space != p.space) throw InputError("right multiplication by vector from the wrong space");
  const int n = p.space.dim();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    if (y.c[static_cast<size_t>(j)].is_zero()) continue;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        m.at(k, i) += y.c[static_cast<size_t>(j)] * p.coeff(i, j, k);
  }
  return LinearMap{p.space, p.space, std::move(m)};
}

Mat left_op(const BilinearProduct& p, int i) { return p.L[static_cast<size_t>(i)]; }

Mat right_op(const BilinearProduct& p, int j) {
  const int n = p.space.dim();
  Mat m(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) m.at(k, i) = p.coeff(i, j, k);
  return m;
}

bool is_antisymmetric_product(const BilinearProduct& p) {
  const int n = p.space.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        if (!(p.coeff(i, j, k) + p.coeff(j, i, k)).is_zero()) return false;
  return true;
}

BilinearProduct commutator(const BilinearProduct& p) {
  const int n = p.space.dim();
  BilinearProduct out = zero_product(p.space);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.L[static_cast<size_t>(i)].at(k, j) = p.coeff(i, j, k) - p.coeff(j, i, k);
  return out;
}

bool block_closed(const BilinearProduct& p, int lo, int len) {
  const int n = p.space.dim();
  for (int i = lo; i < lo + len; ++i)
    for (int j = lo; j < lo + len; ++j)
      for (int k = 0; k < n; ++k) {
        if (k >= lo && k < lo + len) continue;
        if (!p.coeff(i, j, k).is_zero()) return false;
      }
  return true;
}

BilinearProduct restrict_block(const BilinearProduct& p, int lo, const Space& sub) {
  const int len = sub.dim();
  if (lo < 0 || lo + len > p.space.dim()) throw InputError("product block out of range");
  BilinearProduct out = zero_product(sub);
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j)
      for (int k = 0; k < len; ++k)
        out.L[static_cast<size_t>(i)].at(k, j) = p.coeff(lo + i, lo + j, lo + k);
  return out;
}

} // namespace rbla

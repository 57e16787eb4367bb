#include "tensor.hpp"

#include "error.hpp"

namespace rbla {

Tensor2 zero_tensor2(const Space& a, const Space& b) {
  return Tensor2{a, b, Mat(a.dim(), b.dim())};
}

Tensor2 flip(const Tensor2& t) { return Tensor2{t.s2, t.s1, t.c.transpose()}; }

Tensor2 add(const Tensor2& a, const Tensor2& b) {
  if (a.s1 != b.s1 || a.s2 != b.s2) throw InputError("tensor addition space mismatch");
  return Tensor2{a.s1, a.s2, a.c + b.c};
}

Tensor2 sub(const Tensor2& a, const Tensor2& b) {
  if (a.s1 != b.s1 || a.s2 != b.s2) throw InputError("tensor subtraction space mismatch");
  return Tensor2{a.s1, a.s2, a.c - b.c};
}

Tensor2 scale(const Scalar& s, Tensor2 t) {
  t.c = s * t.c;
  return t;
}

Tensor2 negate(Tensor2 t) { return scale(Scalar(-1), std::move(t)); }

bool is_zero(const Tensor2& t) { return t.c.is_zero(); }

bool is_antisymmetric(const Tensor2& t) {
  if (t.s1 != t.s2) return false;
  return (t.c + t.c.transpose()).is_zero();
}

Tensor2 apply2(const LinearMap& A, const LinearMap& B, const Tensor2& t) {
  if (A.dom != t.s1 || B.dom != t.s2) throw InputError("tensor map application space mismatch");
  return Tensor2{A.cod, B.cod, A.m * t.c * B.m.transpose()};
}

Tensor2 act_left(const Mat& A, const Tensor2& t) {
  if (A.cols() != t.s1.dim() || A.rows() != A.cols())
    throw InputError("tensor action shape mismatch");
  return Tensor2{t.s1, t.s2, A * t.c};
}

Tensor2 act_right(const Mat& A, const Tensor2& t) {
  if (A.cols() != t.s2.dim() || A.rows() != A.cols())
    throw InputError("tensor action shape mismatch");
  return Tensor2{t.s1, t.s2, t.c * A.transpose()};
}

Tensor2 act_both(const Mat& A, const Tensor2& t) {
  if (t.s1 != t.s2 || A.cols() != t.s1.dim() || A.rows() != A.cols())
    throw InputError("tensor action shape mismatch");
  return Tensor2{t.s1, t.s2, A * t.c + t.c * A.transpose()};
}

LinearMap map_from_tensor(const Tensor2& t) {
  return LinearMap{dual_of(t.s1), t.s2, t.c.transpose()};
}

Tensor2 tensor_from_map(const LinearMap& T) {
  return Tensor2{dual_of(T.dom), T.cod, T.m.transpose()};
}

Tensor2 hom_tensor(const LinearMap& T) { return Tensor2{T.cod, dual_of(T.dom), T.m}; }

Scalar& Tensor3::at(int i, int j, int k) {
  return c[static_cast<size_t>((i * s2.dim() + j) * s3.dim() + k)];
}

const Scalar& Tensor3::at(int i, int j, int k) const {
  return c[static_cast<size_t>((i * s2.dim() + j) * s3.dim() + k)];
}

Tensor3 zero_tensor3(const Space& a, const Space& b, const Space& c) {
  Tensor3 t{a, b, c, {}};
  t.c.resize(static_cast<size_t>(a.dim()) * b.dim() * c.dim());
  return t;
}

Tensor3 add(const Tensor3& a, const Tensor3& b) {
  if (a.s1 != b.s1 || a.s2 != b.s2 || a.s3 != b.s3)
    throw InputError("tensor addition space mismatch");
  Tensor3 out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

Tensor3 sub(const Tensor3& a, const Tensor3& b) {
  if (a.s1 != b.s1 || a.s2 != b.s2 || a.s3 != b.s3)
    throw InputError("tensor subtraction space mismatch");
  Tensor3 out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

Tensor3 scale(const Scalar& s, Tensor3 t) {
  for (auto& x : t.c) x *= s;
  return t;
}

Tensor3 negate(Tensor3 t) { return scale(Scalar(-1), std::move(t)); }

bool is_zero(const Tensor3& t) {
  for (const auto& x : t.c)
    if (!x.is_zero()) return false;
  return true;
}

Tensor3 cyclic_shift(const Tensor3& t) {
  Tensor3 out = zero_tensor3(t.s3, t.s1, t.s2);
  for (int i = 0; i < out.s1.dim(); ++i)
    for (int j = 0; j < out.s2.dim(); ++j)
      for (int k = 0; k < out.s3.dim(); ++k) out.at(i, j, k) = t.at(j, k, i);
  return out;
}

Tensor3 swap12(const Tensor3& t) {
  Tensor3 out = zero_tensor3(t.s2, t.s1, t.s3);
  for (int i = 0; i < out.s1.dim(); ++i)
    for (int j = 0; j < out.s2.dim(); ++j)
      for (int k = 0; k < out.s3.dim(); ++k) out.at(i, j, k) = t.at(j, i, k);
  return out;
}

Tensor3 apply3(const LinearMap& A, const LinearMap& B, const LinearMap& C, const Tensor3& t) {
  if (A.dom != t.s1 || B.dom != t.s2 || C.dom != t.s3)
    throw InputError("tensor map application space mismatch");
  Tensor3 out = zero_tensor3(A.cod, B.cod, C.cod);
  for (int p = 0; p < A.cod.dim(); ++p)
    for (int q = 0; q < B.cod.dim(); ++q)
      for (int r = 0; r < C.cod.dim(); ++r) {
        Scalar acc;
        for (int i = 0; i < t.s1.dim(); ++i) {
          if (A.m.at(p, i).is_zero()) continue;
          for (int j = 0; j < t.s2.dim(); ++j) {
            if (B.m.at(q, j).is_zero()) continue;
            for (int k = 0; k < t.s3.dim(); ++k)
              acc += A.m.at(p, i) * B.m.at(q, j) * C.m.at(r, k) * t.at(i, j, k);
          }
        }
        out.at(p, q, r) = acc;
      }
  return out;
}

} // namespace rbla

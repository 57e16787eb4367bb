#pragma once

#include <vector>

#include "linmap.hpp"
#include "matrix.hpp"
#include "space.hpp"

namespace rbla {

// Element of s1 (x) s2: sum of c(i,j) * e_i (x) f_j over the two bases.
struct Tensor2 {
  Space s1, s2;
  Mat c; // s1.dim rows, s2.dim cols

  bool operator==(const Tensor2&) const = default;
};

Tensor2 zero_tensor2(const Space& a, const Space& b);
Tensor2 flip(const Tensor2& t); // x (x) y -> y (x) x
Tensor2 add(const Tensor2& a, const Tensor2& b);
Tensor2 sub(const Tensor2& a, const Tensor2& b);
Tensor2 scale(const Scalar& s, Tensor2 t);
Tensor2 negate(Tensor2 t);
bool is_zero(const Tensor2& t);
bool is_antisymmetric(const Tensor2& t); // requires s1 == s2; t + flip(t) == 0

// (A (x) B) t, componentwise on the two slots.
Tensor2 apply2(const LinearMap& A, const LinearMap& B, const Tensor2& t);

// Same-space endomorphism actions: (A (x) id) t, (id (x) A) t, and their sum.
Tensor2 act_left(const Mat& A, const Tensor2& t);
Tensor2 act_right(const Mat& A, const Tensor2& t);
Tensor2 act_both(const Mat& A, const Tensor2& t);

// Sum c(i,j) e_i (x) f_j  <->  the map dual(s1) -> s2 sending e_i* to sum_j c(i,j) f_j.
LinearMap map_from_tensor(const Tensor2& t);
Tensor2 tensor_from_map(const LinearMap& T);

// T : V -> W as the element sum_k T(e_k) (x) e_k* of W (x) V*.
Tensor2 hom_tensor(const LinearMap& T);

// Element of s1 (x) s2 (x) s3, coefficients stored flat as (i*d2 + j)*d3 + k.
struct Tensor3 {
  Space s1, s2, s3;
  std::vector<Scalar> c;

  Scalar& at(int i, int j, int k);
  const Scalar& at(int i, int j, int k) const;
  bool operator==(const Tensor3&) const = default;
};

Tensor3 zero_tensor3(const Space& a, const Space& b, const Space& c);
Tensor3 add(const Tensor3& a, const Tensor3& b);
Tensor3 sub(const Tensor3& a, const Tensor3& b);
Tensor3 scale(const Scalar& s, Tensor3 t);
Tensor3 negate(Tensor3 t);
bool is_zero(const Tensor3& t);

// x (x) y (x) z -> z (x) x (x) y: out(i,j,k) = in(j,k,i), spaces (s3, s1, s2).
Tensor3 cyclic_shift(const Tensor3& t);
// x (x) y (x) z -> y (x) x (x) z.
Tensor3 swap12(const Tensor3& t);

// (A (x) B (x) C) t on the three slots.
Tensor3 apply3(const LinearMap& A, const LinearMap& B, const LinearMap& C, const Tensor3& t);

} // namespace rbla

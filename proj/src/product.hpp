#pragma once

#include <utility>
#include <vector>

#include "linmap.hpp"
#include "matrix.hpp"
#include "space.hpp"

namespace rbla {

// Bilinear product on a space, stored by its left multiplication operators:
// L[i] is the matrix of y -> e_i * y, so coeff of e_k in e_i * e_j is L[i](k, j).
struct BilinearProduct {
  Space space;
  std::vector<Mat> L;

  Scalar coeff(int i, int j, int k) const { return L[static_cast<size_t>(i)].at(k, j); }
  bool operator==(const BilinearProduct&) const = default;
};

BilinearProduct make_product(Space space, std::vector<Mat> L);
BilinearProduct zero_product(const Space& space);

std::vector<Scalar> eval_basis(const BilinearProduct& p, int i, int j); // e_i * e_j
Vector eval(const BilinearProduct& p, const Vector& x, const Vector& y);

LinearMap left_mult(const BilinearProduct& p, const Vector& x);  // y -> x * y
LinearMap right_mult(const BilinearProduct& p, const Vector& y); // x -> x * y
Mat left_op(const BilinearProduct& p, int i);                    // matrix of y -> e_i * y
Mat right_op(const BilinearProduct& p, int j);                   // matrix of x -> x * e_j

bool is_antisymmetric_product(const BilinearProduct& p);
BilinearProduct commutator(const BilinearProduct& p); // x*y - y*x

// Whether products of basis vectors indexed in [lo, lo+len) stay inside that block.
bool block_closed(const BilinearProduct& p, int lo, int len);
// The product induced on that block; requires sub.dim() == len.
BilinearProduct restrict_block(const BilinearProduct& p, int lo, const Space& sub);

} // namespace rbla

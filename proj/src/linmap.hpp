#pragma once

#include "matrix.hpp"

namespace rbla {

// Linear map between labelled spaces; m has cod.dim rows, dom.dim columns.
struct LinearMap {
  Space dom, cod;
  Mat m;

  bool operator==(const LinearMap&) const = default;
};

LinearMap make_map(Space dom, Space cod, Mat m);
LinearMap identity_map(const Space& s);
LinearMap zero_map(const Space& dom, const Space& cod);
LinearMap scaled_identity(const Space& s, const Scalar& k);

Vector apply(const LinearMap& f, const Vector& v);
LinearMap compose(const LinearMap& f, const LinearMap& g); // f after g
LinearMap add(const LinearMap& a, const LinearMap& b);
LinearMap sub(const LinearMap& a, const LinearMap& b);
LinearMap scale(const Scalar& s, LinearMap f);
LinearMap negate(LinearMap f);
bool is_zero(const LinearMap& f);

// <T*(w*), v> = <w*, T(v)>: maps dual(cod) to dual(dom), matrix transposed.
// Involutive because dual_of is.
LinearMap transpose_map(const LinearMap& f);

std::optional<LinearMap> inverse_map(const LinearMap& f);

// Block-diagonal sum acting on direct_sum(a.dom, b.dom).
LinearMap direct_sum_map(const LinearMap& a, const LinearMap& b);

} // namespace rbla

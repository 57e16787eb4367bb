#pragma once

#include <vector>

#include "product.hpp"
#include "tensor.hpp"

namespace rbla {

// Linear map space -> space (x) space, stored by its values on basis vectors.
struct Coproduct {
  Space space;
  std::vector<Tensor2> cols; // cols[i] = value on e_i

  bool operator==(const Coproduct&) const = default;
};

Coproduct make_coproduct(Space space, std::vector<Tensor2> cols);
Coproduct zero_coproduct(const Space& space);

Tensor2 apply_coproduct(const Coproduct& d, const Vector& x);
bool is_coantisymmetric(const Coproduct& d); // every value is antisymmetric

// Apply d to one slot of a tensor in space (x) space.
Tensor3 expand_left(const Coproduct& d, const Tensor2& t);  // (d (x) id) t
Tensor3 expand_right(const Coproduct& d, const Tensor2& t); // (id (x) d) t

// A product on V transposes to a coproduct on V* and back; both round-trip exactly.
Coproduct dualize_product(const BilinearProduct& p);
BilinearProduct dualize_coproduct(const Coproduct& d);

} // namespace rbla

#pragma once

#include "rota_baxter.hpp"

namespace rbla {

// T : V -> g against an action (rho; V) with module partner alpha.
struct OOperatorInstance {
  RBLieAlgebra rb;
  Representation rep;
  Mat alpha;
  Mat T; // rows over g, columns over V

  bool operator==(const OOperatorInstance&) const = default;
};

// Weak laws: [Tu, Tv] = T( rho(Tu)v - rho(Tv)u ) and PT = T alpha.
// With full = true, also requires (rho, alpha) to be paired to (g, P).
CheckReport check_O_operator(const OOperatorInstance& inst, bool full);

} // namespace rbla

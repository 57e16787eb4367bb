#pragma once

#include <vector>

#include "product.hpp"
#include "report.hpp"

namespace rbla {

struct LieAlgebra {
  BilinearProduct bracket;

  const Space& space() const { return bracket.space; }
  bool operator==(const LieAlgebra&) const = default;
};

// Antisymmetry and the Jacobi identity, by basis triples.
CheckReport check_lie(const BilinearProduct& bracket);
// Verified constructor.
LieAlgebra make_lie(BilinearProduct bracket);

LinearMap ad(const LieAlgebra& g, const Vector& x);
Mat ad_op(const LieAlgebra& g, int i);

// Action of g on a module, stored as one matrix per basis vector of g.
struct Representation {
  LieAlgebra g;
  Space module;
  std::vector<Mat> rho;

  Mat rho_at(int i) const { return rho[static_cast<size_t>(i)]; }
  LinearMap rho_map(const Vector& x) const;
  bool operator==(const Representation&) const = default;
};

Representation assemble_representation(LieAlgebra g, Space module, std::vector<Mat> rho);
CheckReport check_representation(const Representation& r);

Representation adjoint_rep(const LieAlgebra& g);
// On the dual module: rho*(x) = -rho(x)^T.
Representation dual_representation(const Representation& r);

// Bracket on g (+) V: [x + u, y + v] = [x, y] + rho(x)v - rho(y)u.
LieAlgebra semidirect_product_lie(const Representation& r);

// Form values B(e_i, e_j) = b(i, j).
struct BilinearForm {
  Space space;
  Mat b;

  bool operator==(const BilinearForm&) const = default;
};

Scalar eval_form(const BilinearForm& f, const Vector& x, const Vector& y);

struct FormRequirements {
  bool symmetric = true;
  bool invariant = true;
  bool nondegenerate = true;
};

CheckReport check_bilinear_form(const LieAlgebra& g, const BilinearForm& f,
                                FormRequirements req = {});

// The operator adjoint to p with respect to a nondegenerate form:
// B(p x, y) = B(x, adjoint y) for all x, y.
Mat adjoint_operator_wrt_form(const BilinearForm& f, const Mat& p);

// Two algebras acting on each other: rho[i] is e_i of g acting on h's space,
// mu[m] is f_m of h acting on g's space.
struct MatchedPairLie {
  LieAlgebra g, h;
  std::vector<Mat> rho;
  std::vector<Mat> mu;

  Representation rho_rep() const { return Representation{g, h.space(), rho}; }
  Representation mu_rep() const { return Representation{h, g.space(), mu}; }
};

CheckReport check_matched_pair_lie(const MatchedPairLie& mp);

// Bracket on g (+) h:
// [x + a, y + b] = [x, y] + mu(a)y - mu(b)x + [a, b] + rho(x)b - rho(y)a.
// Raw structure constants; no laws are checked.
BilinearProduct bowtie_bracket(const MatchedPairLie& mp);
// Same, but runs the Jacobi check on the result, so it doubles as an
// independent verification of the matched pair conditions.
LieAlgebra bowtie_lie(const MatchedPairLie& mp);

// The raw semidirect bracket [x + u, y + v] = [x, y] + rho(x)v - rho(y)u.
BilinearProduct semidirect_bracket(const Representation& r);

} // namespace rbla

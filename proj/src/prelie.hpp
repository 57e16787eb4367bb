#pragma once

#include <utility>
#include <vector>

#include "ooperator.hpp"

namespace rbla {

// Associator symmetry (x*y)*z - x*(y*z) = (y*x)*z - y*(x*z) over basis triples.
CheckReport check_prelie(const BilinearProduct& p);

struct PreLieAlgebra {
  BilinearProduct prod;

  const Space& space() const { return prod.space; }
  bool operator==(const PreLieAlgebra&) const = default;
};

PreLieAlgebra make_prelie(BilinearProduct prod);

// x*y = [Px, y]; defined for weight 0 only. Verified.
PreLieAlgebra induce_prelie(const RBLieAlgebra& rb);

// Commutator bracket of the product; verified Lie.
LieAlgebra subadjacent_lie(const PreLieAlgebra& A);

CheckReport check_rb_prelie(const BilinearProduct& prod, const Scalar& weight, const Mat& P);

struct RBPreLieAlgebra {
  PreLieAlgebra alg;
  Scalar weight;
  Mat P;

  const Space& space() const { return alg.space(); }
  bool operator==(const RBPreLieAlgebra&) const = default;
};

RBPreLieAlgebra make_rb_prelie(PreLieAlgebra alg, Scalar weight, Mat P);

// Sub-adjacent bracket keeps the operator and weight. Also verifies that left
// multiplication pairs with P as a module of the result, and that the identity
// map is an O-operator for that module; throws with evidence otherwise.
RBLieAlgebra subadjacent_rb(const RBPreLieAlgebra& A);

// u*v = rho(Tu)v on the module of an O-operator, with operator alpha. Verified.
RBPreLieAlgebra induced_rb_prelie(const OOperatorInstance& inst);

// Two products on one space, written x |> y and x <| y.
struct LDendAlgebra {
  BilinearProduct tri_r; // x |> y
  BilinearProduct tri_l; // x <| y

  const Space& space() const { return tri_r.space; }
  bool operator==(const LDendAlgebra&) const = default;
};

// The two defining identities; special additionally makes <| antisymmetric.
CheckReport check_ldendriform(const LDendAlgebra& a, bool special);

// Horizontal x o y = x|>y - y<|x and vertical x o y = x|>y + x<|y products;
// they coincide exactly when the structure is special.
std::pair<BilinearProduct, BilinearProduct> horizontal_vertical(const LDendAlgebra& a);

// For weight 0 and admissible Q: x <| y = -Q([x,y]), x |> y = [Px,y] - x<|y.
// Verified special, compatible with the induced product by construction.
LDendAlgebra special_from_admissible(const RBLieAlgebra& rb, const Mat& Q);

// B(x*y, z) = -B(y, x*z) over basis triples, plus symmetry and nondegeneracy.
CheckReport check_left_invariant_form(const PreLieAlgebra& A, const BilinearForm& f);

// <| defined by B(x<|y, z) = B(x, z*y); |> = * - <|. Verified special.
LDendAlgebra special_from_left_invariant_form(const PreLieAlgebra& A, const BilinearForm& f);

// Module of a pre-Lie algebra: left and right action families.
struct PreLieRep {
  PreLieAlgebra A;
  Space module;
  std::vector<Mat> l, r;

  bool operator==(const PreLieRep&) const = default;
};

CheckReport check_prelie_representation(const PreLieRep& rep);
// On the dual module: l'(x) = -(l(x) - r(x))^T, r'(x) = r(x)^T.
PreLieRep dual_prelie_representation(const PreLieRep& rep);
// l(x) = rho(Px), r(x) = -rho(x) alpha, over the induced product; weight 0. Verified.
PreLieRep induced_prelie_representation(const RBLieAlgebra& rb, const Representation& rep,
                                        const Mat& alpha);

struct MatchedPairPreLie {
  PreLieAlgebra A, B;
  std::vector<Mat> lA, rA; // e_i of A acting on B's space
  std::vector<Mat> lB, rB; // f_m of B acting on A's space
};

CheckReport check_matched_pair_prelie(const MatchedPairPreLie& mp);

// (x+a)*(y+b) = x*y + lB(a)y + rB(b)x + a*b + lA(x)b + rA(y)a.
BilinearProduct prelie_bowtie_product(const MatchedPairPreLie& mp); // raw
PreLieAlgebra prelie_bowtie(const MatchedPairPreLie& mp);           // verified

} // namespace rbla

#pragma once

#include <utility>
#include <vector>

#include "lie.hpp"

namespace rbla {

// P(x)P(y) = P( P(x)y + xP(y) + w*xy ) over basis pairs, for any bilinear product.
CheckReport check_rb_product(const BilinearProduct& p, const Scalar& weight, const Mat& P);

struct RBLieAlgebra {
  LieAlgebra alg;
  Scalar weight;
  Mat P;

  const Space& space() const { return alg.space(); }
  bool operator==(const RBLieAlgebra&) const = default;
};

// Lie laws plus the operator identity.
CheckReport check_rb_lie(const BilinearProduct& bracket, const Scalar& weight, const Mat& P);
// Verified constructor; the algebra itself is assumed already verified.
RBLieAlgebra make_rb_lie(LieAlgebra alg, Scalar weight, Mat P);

// The bracket [x,y]' = [Px,y] + [x,Py] + w[x,y]; P stays an operator of the
// same weight on it. Both facts are verified.
RBLieAlgebra descendent_rb_lie(const RBLieAlgebra& rb);

// Module operator paired with the algebra's operator:
// rho(Px)a(v) = a( rho(Px)v + rho(x)a(v) + w*rho(x)v ).
struct RBRep {
  Representation rep;
  Mat alpha;

  bool operator==(const RBRep&) const = default;
};

// Just the pairing identity above, by basis vectors of g.
CheckReport check_rb_rep_identity(const RBLieAlgebra& rb, const Representation& rep,
                                  const Mat& alpha);
// Module action laws plus the pairing identity.
CheckReport check_rb_representation(const RBLieAlgebra& rb, const RBRep& r);

// beta( rho(Px)v ) = rho(Px)beta(v) + beta( rho(x)beta(v) ) + w*rho(x)beta(v).
// Checked twice: directly, and through the transposed action on the dual
// module, where it becomes the pairing identity; the two must agree.
CheckReport check_admissible(const RBLieAlgebra& rb, const Representation& rep, const Mat& beta);

// Same with the algebra acting on itself: Q([Px,y]) = [Px,Qy] + Q([x,Qy]) + w[x,Qy].
CheckReport check_admissible_op(const RBLieAlgebra& rb, const Mat& Q);
// The raw aggregate form of that identity, usable on unverified products.
CheckReport check_admissible_op_product(const BilinearProduct& bracket, const Scalar& weight,
                                        const Mat& R, const Mat& S);

// Operators admissible for every choice of algebra: -P - w*id, -w*id, 0.
std::vector<std::pair<std::string, Mat>> standard_admissibles(const RBLieAlgebra& rb);
// Module operator -alpha - w*id, admissible whenever (rho, alpha) is paired.
Mat admissible_from_partner(const Mat& alpha, const Scalar& weight);

// Module isomorphism phi with phi rho1(x) = rho2(x) phi and phi a1 = a2 phi.
CheckReport check_rep_equivalence(const RBRep& a, const RBRep& b, const LinearMap& phi);

// Operator P (+) alpha on g (+) V; verified via the operator identity, which
// holds exactly when (rho, alpha) is a paired module.
RBLieAlgebra semidirect_product_rb(const RBLieAlgebra& rb, const RBRep& r);

struct MatchedPairRB {
  RBLieAlgebra g, h;
  std::vector<Mat> rho; // e_i of g acting on h's space
  std::vector<Mat> mu;  // f_m of h acting on g's space

  MatchedPairLie lie_part() const { return MatchedPairLie{g.alg, h.alg, rho, mu}; }
};

// Matched pair laws plus: (rho, P_h) is paired to (g, P_g) and (mu, P_g) to (h, P_h).
CheckReport check_matched_pair_rb(const MatchedPairRB& mp);
// Operator P_g (+) P_h on the bowtie bracket, verified.
RBLieAlgebra rb_bowtie(const MatchedPairRB& mp);

// For data (rho; V), alpha, Q, beta over (g, P): four itemized conditions
//   (1) (rho, alpha) is a paired module of (g, P);
//   (2) Q is admissible to (g, P);
//   (3) beta is admissible to (g, P) on (rho; V);
//   (4) beta(rho(x)alpha(v)) = beta(rho(Qx)v) + rho(Qx)alpha(v) + w*rho(Qx)v;
// plus two composite routes that must agree with their conjunction:
//   Q + beta admissible to (g (+) V, P + alpha), and
//   Q + alpha^T admissible to (g (+) V*, P + beta^T) over the dual action.
CheckReport check_semidirect_admissibility(const RBLieAlgebra& rb, const Representation& rep,
                                           const Mat& alpha, const Mat& Q, const Mat& beta);

} // namespace rbla

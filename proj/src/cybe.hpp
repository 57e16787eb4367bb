#pragma once

#include <utility>
#include <vector>

#include "bialgebra.hpp"
#include "ooperator.hpp"
#include "prelie.hpp"

namespace rbla {

// d_r(e_i) = (ad(e_i) (x) id + id (x) ad(e_i)) r. Satisfies the cocycle
// condition for every r; the coalgebra laws are what invariance governs.
Coproduct coboundary_delta(const BilinearProduct& bracket, const Tensor2& r);

// [r12, r13] + [r12, r23] + [r13, r23] over the bracket.
Tensor3 cybe_tensor(const BilinearProduct& bracket, const Tensor2& r);

// Per basis vector x: the two-slot action of ad(x) kills r + flip(r), and the
// three-slot action kills the equation tensor. Together these make d_r a Lie
// coalgebra when the bracket is Lie.
CheckReport check_invariance_conditions(const LieAlgebra& g, const Tensor2& r);

// A tensor on g (x) g together with the companion operator tied to it by the
// side conditions below.
struct CYBESolution {
  RBLieAlgebra rb;
  Mat Q;
  Tensor2 r;
};

// Equation tensor zero, plus the side conditions (P (x) id - id (x) Q) r = 0
// and (Q (x) id - id (x) P) r = 0, each reported on its own. For
// antisymmetric r the same data reads as a weak O-operator into the dual of
// the adjoint module; that route is absorbed when it fails and a flag records
// any verdict divergence.
CheckReport check_admissible_cybe(const CYBESolution& sol);

// For general r whose induced coproduct dualizes to a Lie bracket (throws
// StructureError with the offending witness otherwise): the reduced tensor
// condition equivalent to the coalgebra operator law, and the one equivalent
// to the mixed compatibility law, each next to a direct evaluation of the law
// it encodes. Agreement flags fire only when the carrier hypotheses hold.
CheckReport check_coboundary_conditions(const RBLieAlgebra& rb, const Mat& Q, const Tensor2& r);

// Antisymmetric solution with admissible companion -> bialgebra carrying
// delta = d_r. Verified before returning; throws StructureError on failure.
RBLieBialgebra coboundary_rb_bialgebra(const CYBESolution& sol);

// Embeds T : V -> g into (g (+) V*)^(x)2 against the dual basis and
// antisymmetrizes; carrier operator P (+) beta^T, companion Q (+) alpha^T
// over the semidirect bracket of the dual module. Pure assembly, no checks
// beyond shapes.
CYBESolution lift_O_operator(const OOperatorInstance& inst, const Mat& Q, const Mat& beta);

// The lift solves its equation exactly when T satisfies the weak operator
// laws and Q T = T beta, provided beta is admissible on the module. All
// routes are reported; a flag records divergence under those hypotheses.
CheckReport check_lifted_solution(const OOperatorInstance& inst, const Mat& Q, const Mat& beta);

// Full O-operator plus a compatible companion pair (Q, beta) with
// Q T = T beta -> bialgebra on g (+) V* with delta from the lifted tensor.
// Verified; throws StructureError with evidence otherwise.
RBLieBialgebra bialgebra_from_O(const OOperatorInstance& inst, const Mat& Q, const Mat& beta);

// The three companion pairs that work for every full O-operator:
// (0, 0), (-w, -w) on the identity, and (-P - w, -alpha - w).
std::vector<RBLieBialgebra> bialgebra_family_from_O(const OOperatorInstance& inst);

// sum_i e_i (x) e_i* - e_i* (x) e_i on s (+) s*.
Tensor2 canonical_r(const Space& s);

struct CanonicalFamily {
  CYBESolution solution;                  // identity-map lift, companions zero
  std::vector<RBLieBialgebra> bialgebras; // the three companion pairs
};

// The identity map is an O-operator over left multiplication of a Rota-Baxter
// pre-Lie algebra; its lift is the canonical tensor above. Verified.
CanonicalFamily canonical_family_from_prelie(const RBPreLieAlgebra& A);

// r12 <| r13 = r12 * r23 + r13 * r23, where * is the associated product
// |> + <| of a special pair.
CheckReport check_sld_equation(const LDendAlgebra& a, const Tensor2& r);

// First coproduct (L|>(x) (x) id + id (x) ad(x)) r with ad the commutator of
// the associated product; second -(L*(x) (x) id + id (x) L*(x)) r. Raw.
std::pair<Coproduct, Coproduct> coboundary_sld_pair(const LDendAlgebra& a, const Tensor2& r);

// Antisymmetric solution of the equation above -> bialgebra carrying that
// coproduct pair. Verified; throws StructureError on failure.
SLDBialgebra coboundary_sld_bialgebra(const LDendAlgebra& a, const Tensor2& r);

// For the split pair x * y = [Px, y], x <| y = -Q [x, y] the defect of the
// equation above equals (Q (x) id (x) id) applied to the equation tensor plus
// the pairing of s = (id (x) P) r - (Q (x) id) r against d_r in the right
// slot. Holds for every r, P, Q and every bilinear bracket; reported as a
// standing identity.
CheckReport check_sld_reduction(const BilinearProduct& bracket, const Mat& P, const Mat& Q,
                                const Tensor2& r);

// On a weight-zero antisymmetric solution the coproduct pair built from the
// split products agrees column by column with the pair assembled from d_r and
// the operators. Reports both hypotheses and all column differences.
CheckReport check_same_construction(const RBLieAlgebra& rb, const Mat& Q, const Tensor2& r);

// Weight zero: the lifted bialgebra of a full O-operator, twisted into a
// special L-dendriform bialgebra on g (+) V*. Verified.
SLDBialgebra sld_from_O(const OOperatorInstance& inst, const Mat& Q, const Mat& beta);

// Adjoint-module instance with T = P and companion pair (Q, Q).
SLDBialgebra sld_from_rb(const RBLieAlgebra& rb, const Mat& Q);

// The two companions Q = -P and Q = 0 that need nothing beyond the carrier.
std::vector<SLDBialgebra> sld_family_from_rb(const RBLieAlgebra& rb);

// Identity-map instance of a weight-zero Rota-Baxter pre-Lie algebra, with
// the same two companion choices.
std::vector<SLDBialgebra> sld_family_from_prelie(const RBPreLieAlgebra& A);

// Four structures per round: two from the algebra, two from its induced
// pre-Lie algebra; then descend through the derived bracket and repeat.
// levels = 1 yields eight.
std::vector<SLDBialgebra> iterate_family(const RBLieAlgebra& rb, int levels);

} // namespace rbla

#pragma once

#include "coproduct.hpp"
#include "prelie.hpp"
#include "rota_baxter.hpp"

namespace rbla {

// Coproduct laws: co-antisymmetry and the cyclic identity on (id (x) d) d.
CheckReport check_lie_coalgebra(const Coproduct& d);

// Defect of d([x,y]) = (ad(x)(x)id + id(x)ad(x)) d(y) - (ad(y)(x)id + id(x)ad(y)) d(x).
Tensor2 cocycle_defect(const BilinearProduct& bracket, const Coproduct& d, const Vector& x,
                       const Vector& y);
CheckReport check_cocycle(const BilinearProduct& bracket, const Coproduct& d);

// (Q (x) Q) d(x) = (Q (x) id + id (x) Q) d(Qx) + w d(Qx), cross-checked on the dual algebra.
CheckReport check_rb_lie_coalgebra(const Coproduct& d, const Scalar& weight, const Mat& Q);

// Bracket, coproduct, and the cocycle condition tying them, with no operators.
CheckReport check_lie_bialgebra(const BilinearProduct& bracket, const Coproduct& d);

// Bracket and coproduct on one space, with an operator attached to each.
struct RBLieBialgebra {
  BilinearProduct bracket;
  Scalar weight;
  Mat P;
  Coproduct delta;
  Mat Q;

  const Space& space() const { return bracket.space; }
};

CheckReport check_rb_lie_bialgebra(const RBLieBialgebra& b);

// The structure the bialgebra conditions transport along duality: both component
// algebras act on each other by coadjoint actions.
MatchedPairRB rb_bialgebra_matched_pair(const RBLieBialgebra& b);

// A bracket on g + g* containing the two given brackets as diagonal blocks, with
// the canonical pairing form invariant and the block-diagonal operator multiplicative.
struct ManinTripleRB {
  BilinearProduct g_bracket;    // on g
  BilinearProduct dual_bracket; // on g*
  BilinearProduct dbl;          // on g + g*
  Scalar weight;
  Mat P;     // operator on g
  Mat Qstar; // operator on g*
};

// The canonical pairing form (x+a*, y+b*) -> <x,b*> + <a*,y> as a matrix on g + g*.
Mat pairing_form(int n);

CheckReport check_manin_triple_rb(const ManinTripleRB& mt);

// Double bracket built from the coadjoint actions; verified before returning.
ManinTripleRB build_manin_triple_rb(const RBLieAlgebra& g, const RBLieAlgebra& dual);

// Three independently computed verdicts (Manin triple, matched pair, bialgebra laws)
// plus a flag when they disagree.
CheckReport triple_equivalence(const RBLieBialgebra& b);
// Same, assembling the bialgebra from an algebra and a partner on its dual space.
CheckReport triple_equivalence(const RBLieAlgebra& g, const RBLieAlgebra& dual);

// Pair of coproducts dual to a special L-dendriform structure on the dual space.
struct SLDCoalgebra {
  Coproduct da; // dual of |> on the dual space
  Coproduct db; // dual of <| on the dual space; co-antisymmetric

  const Space& space() const { return da.space; }
};

CheckReport check_sld_coalgebra(const SLDCoalgebra& c);

struct SLDBialgebra {
  BilinearProduct tri_r; // x |> y
  BilinearProduct tri_l; // x <| y
  Coproduct da;
  Coproduct db;

  const Space& space() const { return tri_r.space; }
};

CheckReport check_sld_bialgebra(const SLDBialgebra& b);

// Weight-zero construction: <| and |> from the admissible operator, the coproduct
// pair from delta twisted by P and Q. Verified before returning.
SLDBialgebra induce_sld_bialgebra(const RBLieBialgebra& b);

// For weight-zero data with both operators admissible on their sides: the three
// twisted cocycle conditions, each reported separately, plus a flag comparing their
// joint verdict with the direct laws on the induced structure.
CheckReport check_sld_induction_conditions(const RBLieBialgebra& b);

// Pre-Lie product on A + A* containing the two given products as diagonal blocks,
// with the canonical pairing form left-invariant.
struct ManinTriplePreLie {
  BilinearProduct a_prod;    // on A
  BilinearProduct dual_prod; // on A*
  BilinearProduct dbl;       // on A + A*
};

CheckReport check_manin_triple_prelie(const ManinTriplePreLie& mt);

// Weight-zero ManinTripleRB -> the triple of derived pre-Lie products; the block
// structure and the <| built from the pairing form are cross-checked.
ManinTriplePreLie manin_triple_prelie_from_rb(const ManinTripleRB& mt);

// Three independently computed verdicts for special L-dendriform structures on a
// space and its dual: pre-Lie Manin triple on the sum, matched pair of the minus
// transpose multiplication operators, and the bialgebra laws. Flags disagreement.
CheckReport check_prelie_triple_equivalence(const LDendAlgebra& a, const LDendAlgebra& dual);

} // namespace rbla

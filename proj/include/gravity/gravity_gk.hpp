#pragma once

#include <string>
#include <vector>

#include "gravity/arnold.hpp"
#include "gravity/circle_action.hpp"
#include "gravity/combinatorics.hpp"
#include "gravity/gravity_westerland.hpp"
#include "gravity/linalg.hpp"

namespace gravity {

// Element of the residue-dual gravity operad. Shares the canonical
// coordinate system of GravityElementW (dual basis of
// moduli_basis(arity, degree-1)), which is what turns the comparison
// theorem into equality of structure constants.
struct GravityElementGK {
    int arity = 0;
    int degree = 0;
    Vec coords;
};

// Residue along the boundary divisor indexed by t, applied to a
// Delta*-closed class on n labels. On a monomial it extracts, with sign
// (-1)^{l-1}, each factor w(a_l,b_l) supported inside the block (its dlog
// of the collapse parameter has residue 1), restricts the remaining
// factors (inside the block -> inner labels, otherwise -> outer labels with
// the block merged to label i), and unshuffles the remaining word into
// outer (x) inner with the Koszul sign. Degree drops by 1; both tensor
// factors land in Delta*-closed subspaces.
TensorElement residue(const TreeInsertion& t, const ArnoldElement& x);

// Same rule applied to a raw generator word (no closedness requirement);
// used by the well-definedness tests to see the rule annihilate Arnold
// relations before any straightening.
TensorElement residue_word(const TreeInsertion& t, const GeneratorWord& word,
                           const Rational& coeff);

// Residue of the degree-k moduli basis of arity t.n, expressed over the
// moduli bases of both factors: block(p) is the matrix of the
// (p, k-1-p)-Kunneth component, rows flattened as alpha * dim_in + beta,
// columns over moduli_basis(t.n, k). Construction fails with NotInSpan if
// some residue were to leave the Delta*-closed subspace.
struct ResidueBlocks {
    // block_coords[p][gamma] lists ((alpha, beta), value).
    std::vector<std::vector<std::vector<std::pair<std::pair<int, int>, Rational>>>> blocks;
};
const ResidueBlocks& residue_blocks(const TreeInsertion& t, int k);

// Dual of the residue map with the suspension sign (-1)^{deg x - 1}.
GravityElementGK grav_gk_compose(const TreeInsertion& t, const GravityElementGK& x,
                                 const GravityElementGK& y);

LinearMap gk_structure_matrix(const TreeInsertion& t, int deg_x, int deg_y);

struct ComparisonCell {
    int r = 0, s = 0, i = 0;
    int deg_x = 0, deg_y = 0;
    // "ok", "mismatch", or "uniform-sign" when the two matrices agree up to
    // one overall sign for the whole cell (a convention discrepancy, which
    // is still a failure until the convention ledger is amended).
    std::string status;
    std::string detail;
};

struct ComparisonReport {
    int max_total_arity = 0;
    std::vector<ComparisonCell> cells;
    int mismatches = 0;

    bool pass() const { return mismatches == 0; }
};

// Structure constants of both models compared cell by cell over every tree
// with r + s - 1 <= max_total_arity and every degree pair.
ComparisonReport compare_operads(int max_total_arity);

}  // namespace gravity

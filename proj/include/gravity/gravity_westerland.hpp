#pragma once

#include <string>
#include <vector>

#include "gravity/arnold.hpp"
#include "gravity/circle_action.hpp"
#include "gravity/combinatorics.hpp"
#include "gravity/linalg.hpp"

namespace gravity {

// Element of the kernel-of-Delta gravity operad in arity n, homological
// degree k. Homology is the linear dual of the Arnold basis; the class is
// stored in canonical coordinates over the dual basis of
// moduli_basis(n, k-1), via the transfer identification
// ker Delta cap H_k ~ H_{k-1}(M_{0,n+1}). Arity 1 is the unit line in
// degree 0 with a single coordinate.
struct GravityElementW {
    int arity = 0;
    int degree = 0;
    Vec coords;

    bool is_zero() const {
        for (const Rational& c : coords)
            if (!gravity::is_zero(c))
                return false;
        return true;
    }
};

// Dimension of the arity-n gravity component in degree k.
int grav_dim(int n, int k);

// Degrees k with nonzero component in arity n: {0} for n = 1, else 1..n-1.
std::vector<int> grav_degrees(int n);

// Graded list of canonical basis elements.
std::vector<GravityElementW> grav_w_space(int n);
GravityElementW grav_w_basis_element(int n, int k, int index);

// The functional on H^k(Conf_n) realizing the element, as a row vector
// over the admissible monomial basis. For n >= 2 this is coords^T P where
// P is the Delta*-descent matrix; such functionals are exactly the ones
// annihilating the degree-k kernel of Delta*.
Vec w_functional(const GravityElementW& x);

// Inverse of w_functional on its image; throws NotInSpan when the row is
// not a valid kernel functional (i.e. does not annihilate ker Delta*).
GravityElementW w_from_functional(int n, int k, const Vec& functional);

// Little-disks composition restricted to ker Delta: pair the cocomposition
// of the target monomials against the two functionals, check the result
// still annihilates ker Delta* (stability), and express it in canonical
// coordinates. Degree adds.
GravityElementW grav_w_compose(const TreeInsertion& t, const GravityElementW& x,
                               const GravityElementW& y);

// Structure constants of grav_w_compose on canonical bases: rows indexed by
// pairs (alpha, beta) flattened as alpha * dim_y + beta, columns by the
// canonical basis of the target.
LinearMap w_structure_matrix(const TreeInsertion& t, int deg_x, int deg_y);

struct SuboperadReport {
    int r = 0, s = 0, i = 0;
    bool pass = true;
    int pairs_checked = 0;
    std::string detail;  // first counterexample, empty when pass
};

// Exhaustively asserts that composites of kernel basis vectors are again
// annihilated by Delta.
SuboperadReport check_suboperad(int r, int s, int i);

}  // namespace gravity

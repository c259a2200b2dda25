#pragma once

#include <vector>

#include "gravity/arnold.hpp"
#include "gravity/linalg.hpp"

namespace gravity {

// The cohomology contraction Delta*, dual to the circle-action operator on
// homology. It is the unique degree -1 derivation with Delta*(w(a,b)) = 1;
// on an admissible monomial it is the alternating deletion
//   sum_l (-1)^{l-1} (monomial with factor l removed).
ArnoldElement delta_contract(const ArnoldElement& x);

// Matrix of Delta*: H^k(Conf_n) -> H^{k-1}(Conf_n) over the admissible
// monomial bases. Memoized.
const LinearMap& delta_matrix(int n, int k);

// A Delta*-closed class, representing an element of H^k(M_{0,n+1}) inside
// the Arnold algebra. weight records the purity bookkeeping -2k.
struct ModuliClass {
    ArnoldElement underlying;
    int weight = 0;
};

// Tate weight of the degree-k graded piece.
inline int weight(int k) { return -2 * k; }

// Echelonized basis of ker(Delta*: H^k(Conf_n) -> H^{k-1}(Conf_n)); its
// size is the t^k coefficient of prod_{j=2}^{n-1} (1 + j t). Memoized.
const std::vector<ModuliClass>& moduli_basis(int n, int k);

// The same basis as RREF coordinate rows over basis(n, k).
const EchelonForm& moduli_matrix(int n, int k);

inline int moduli_dim(int n, int k) { return moduli_matrix(n, k).rank(); }

// Coordinates of a Delta*-closed element over moduli_basis(n, k). Throws
// NotDeltaClosed when the element is not closed, NotInSpan if it somehow
// fails to lie in the span (which would contradict closedness).
Vec moduli_coordinates(const ArnoldElement& x);

}  // namespace gravity

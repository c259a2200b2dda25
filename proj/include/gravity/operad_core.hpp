#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gravity/combinatorics.hpp"
#include "gravity/linalg.hpp"

namespace gravity {

enum class Model { Westerland, GetzlerKapranov };

std::string model_name(Model m);

// Finite presentation of a graded symmetric operad: per-arity graded bases,
// composition structure constants, and the symmetric action through
// adjacent transpositions (full tables are recovered by factorization).
struct OperadPresentation {
    int max_arity = 0;
    std::string name;

    // dims[n][k], 1 <= n <= max_arity, 0 <= k <= n-1. dims[0] unused.
    std::vector<std::vector<int>> dims;
    // labels[n][k][index]
    std::vector<std::vector<std::vector<std::string>>> labels;

    // key {r, s, i, p, q} -> matrix with rows indexed by basis pairs
    // (alpha * dim_s_q + beta) and columns by the arity r+s-1 basis in
    // degree p+q. Present whenever both factor dimensions are nonzero.
    std::map<std::array<int, 5>, LinearMap> composition;

    // key {n, j, k} -> matrix of the adjacent transposition (j, j+1) on the
    // degree-k component of arity n, acting on coordinate columns.
    std::map<std::array<int, 3>, LinearMap> action;

    int dim(int n, int k) const {
        if (n < 1 || n > max_arity || k < 0 || k >= static_cast<int>(dims[n].size()))
            return 0;
        return dims[n][k];
    }
};

// Element of a presented operad in coordinates.
struct PresentedElement {
    int arity = 0;
    int degree = 0;
    Vec coords;
};

PresentedElement presented_basis_element(const OperadPresentation& p, int n, int k, int index);
PresentedElement presented_unit(const OperadPresentation& p);

// x o_i y through the stored structure constants.
PresentedElement presented_compose(const OperadPresentation& p, int i,
                                   const PresentedElement& x, const PresentedElement& y);

// Left action of an arbitrary permutation, via adjacent factorization.
PresentedElement presented_act(const OperadPresentation& p, const Permutation& g,
                               const PresentedElement& x);

// Builds the presentation of one of the two gravity models up to max_arity.
// Both share the canonical bases and symmetric action; only the composition
// matrices are model-specific.
OperadPresentation build_presentation(Model model, int max_arity);

struct AxiomReport {
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;

    void note(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            if (failures.size() < 32)
                failures.push_back(what);
        }
    }
};

// Unit laws, sequential associativity, parallel commutation of disjoint
// insertions (with the Koszul sign), Sigma-equivariance of every o_i on
// adjacent transpositions, and the Coxeter relations of the stored action,
// exhaustively on basis elements within the total-arity bound.
AxiomReport check_axioms(const OperadPresentation& p, int max_total_arity);

// Diagonal operad endomorphism x -> r^{|x|} x, returned as the scale factor
// per (arity, degree). Throws ZeroScalar for r = 0.
std::map<std::pair<int, int>, Rational> grading_automorphism(const Rational& r,
                                                             const OperadPresentation& p);

// Checks alpha_r . alpha_s = alpha_{rs} and that alpha_r commutes with
// every stored composition matrix.
AxiomReport check_grading_action(const OperadPresentation& p, const std::vector<Rational>& scalars);

// The generalized-Jacobi relation of the gravity presentation with k
// bracket inputs and l trailing inputs, evaluated in the presented operad:
//   sum_{a<b} {{x_a,x_b}, x_*, y_*}  =  {{x_1..x_k}, y_*} if l>0, else 0
// in arity k+l, degree 2. In this basis the bracket is Sigma_2-symmetric,
// which makes every Koszul extraction sign +1. Requires k >= 3, or k == 2
// with l >= 1 (there is no k = 2, l = 0 relation). Braces are iterated o_i
// compositions of the one-dimensional degree-1 generators.
AxiomReport check_getzler_relations(int k, int l, const OperadPresentation& p);

}  // namespace gravity

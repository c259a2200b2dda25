#pragma once

#include <vector>

#include "gravity/errors.hpp"

namespace gravity {

// Permutations of {1..m} are stored as vectors of length m with 1-based
// images: perm[j-1] is the image of j.
using Permutation = std::vector<int>;

Permutation identity_permutation(int m);
Permutation adjacent_transposition(int m, int j);  // swaps j and j+1, 1 <= j < m
Permutation compose_permutations(const Permutation& g, const Permutation& h);  // g after h
Permutation inverse_permutation(const Permutation& g);
bool is_permutation(const Permutation& g);

// Writes g as a product of adjacent transpositions t_{j}, returned as the
// list of indices j such that g = t_{j_1} t_{j_2} ... t_{j_m} (composition
// right to left).
std::vector<int> adjacent_factorization(const Permutation& g);

// The n-tree with one internal edge: an s-corolla grafted on the i-th leaf
// of an r-corolla. The inner block B = {i, ..., i+s-1} is the set of
// composite labels carried by the grafted corolla; the remaining labels
// collapse onto the outer corolla, with the block itself inheriting outer
// label i.
struct TreeInsertion {
    int r = 0;
    int s = 0;
    int i = 0;
    int n = 0;  // r + s - 1

    bool in_block(int label) const { return label >= i && label <= i + s - 1; }

    // Outer label of a composite label. Labels inside the block map to i,
    // labels outside map order-preservingly to {1..r} \ {i} shifted around
    // the collapsed block.
    int outer_label(int label) const {
        if (in_block(label))
            return i;
        return label < i ? label : label - s + 1;
    }

    // Inner label of a composite label in B, an order-preserving bijection
    // B -> {1..s}.
    int inner_label(int label) const { return label - i + 1; }

    // Inverse direction: the composite label carrying outer label a (for
    // a != i this is a single label; a == i returns the first block label).
    int composite_of_outer(int a) const { return a <= i ? a : a + s - 1; }
    int composite_of_inner(int b) const { return i + b - 1; }
};

TreeInsertion tree_insertion(int r, int s, int i);

// Block permutations entering operad equivariance. For sigma in S_r,
// block_outer(sigma, s, i) is the permutation of {1..n} that moves the
// consecutive block at position i to position sigma(i) order-preservingly
// and permutes the remaining labels the way sigma permutes the outer
// labels. For tau in S_s, block_inner(tau, r, i) acts by tau inside the
// block and fixes everything else.
Permutation block_outer(const Permutation& sigma, int s, int i);
Permutation block_inner(const Permutation& tau, int r, int i);

// A permutation of graded symbols: position j carries degree degrees[j-1]
// before permuting, and the permuted sequence is x_{perm(1)},...,x_{perm(k)}.
struct GradedPermutation {
    Permutation perm;
    std::vector<int> degrees;
};

// Koszul sign of reordering: (-1)^{d_a d_b} for every transposition of
// adjacent symbols, independent of the chosen decomposition.
int koszul_sign(const GradedPermutation& p);

}  // namespace gravity

#include "gravity/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace gravity {

Permutation identity_permutation(int m) {
    Permutation g(m);
    std::iota(g.begin(), g.end(), 1);
    return g;
}

Permutation adjacent_transposition(int m, int j) {
    if (j < 1 || j >= m)
        throw OutOfRange("adjacent transposition index out of range");
    Permutation g = identity_permutation(m);
    std::swap(g[j - 1], g[j]);
    return g;
}

Permutation compose_permutations(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size())
        throw Error("composing permutations of different sizes");
    Permutation out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        out[j] = g[h[j] - 1];
    return out;
}

Permutation inverse_permutation(const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        out[g[j] - 1] = static_cast<int>(j) + 1;
    return out;
}

bool is_permutation(const Permutation& g) {
    std::vector<bool> seen(g.size(), false);
    for (int v : g) {
        if (v < 1 || v > static_cast<int>(g.size()) || seen[v - 1])
            return false;
        seen[v - 1] = true;
    }
    return true;
}

std::vector<int> adjacent_factorization(const Permutation& g) {
    // Bubble-sort the word g(1)...g(m) back to the identity; the swaps we
    // apply, reversed, multiply out to g.
    Permutation w = g;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                swaps.push_back(static_cast<int>(j) + 1);
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

TreeInsertion tree_insertion(int r, int s, int i) {
    if (r < 1 || s < 1)
        throw OutOfRange("tree insertion requires r >= 1 and s >= 1");
    if (i < 1 || i > r)
        throw OutOfRange("tree insertion leaf index out of range");
    TreeInsertion t;
    t.r = r;
    t.s = s;
    t.i = i;
    t.n = r + s - 1;
    return t;
}

Permutation block_outer(const Permutation& sigma, int s, int i) {
    const int r = static_cast<int>(sigma.size());
    if (!is_permutation(sigma))
        throw Error("block_outer: not a permutation");
    if (i < 1 || i > r)
        throw OutOfRange("block_outer: leaf index out of range");
    const int n = r + s - 1;
    const int target = sigma[i - 1];
    Permutation out(n);
    TreeInsertion src = tree_insertion(r, s, i);
    TreeInsertion dst = tree_insertion(r, s, target);
    for (int label = 1; label <= n; ++label) {
        if (src.in_block(label))
            out[label - 1] = dst.composite_of_inner(src.inner_label(label));
        else
            out[label - 1] = dst.composite_of_outer(sigma[src.outer_label(label) - 1]);
    }
    return out;
}

Permutation block_inner(const Permutation& tau, int r, int i) {
    const int s = static_cast<int>(tau.size());
    if (!is_permutation(tau))
        throw Error("block_inner: not a permutation");
    if (i < 1 || i > r)
        throw OutOfRange("block_inner: leaf index out of range");
    const int n = r + s - 1;
    Permutation out = identity_permutation(n);
    for (int b = 1; b <= s; ++b)
        out[i + b - 2] = i + tau[b - 1] - 1;
    return out;
}

int koszul_sign(const GradedPermutation& p) {
    if (!is_permutation(p.perm))
        throw Error("koszul_sign: not a permutation");
    if (p.perm.size() != p.degrees.size())
        throw Error("koszul_sign: degree list has wrong length");
    // Every inversion (u, v) of the permuted word corresponds to one
    // adjacent transposition of the symbols u and v in any decomposition.
    long exponent = 0;
    const std::size_t k = p.perm.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (p.perm[a] > p.perm[b])
                exponent += static_cast<long>(p.degrees[p.perm[a] - 1]) * p.degrees[p.perm[b] - 1];
    return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace gravity

#include <doctest.h>

#include <random>

#include "gravity/combinatorics.hpp"

using namespace gravity;

namespace {

int bounded(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Permutation random_permutation(std::mt19937_64& rng, int m) {
    Permutation g = identity_permutation(m);
    for (int j = m - 1; j > 0; --j)
        std::swap(g[j], g[bounded(rng, 0, j)]);
    return g;
}

// Brute-force oracle: walk an explicit adjacent-transposition decomposition
// of the permuted word and multiply the (-1)^{d d'} factors as they occur.
int koszul_oracle(const Permutation& perm, const std::vector<int>& degrees) {
    std::vector<int> word(perm.begin(), perm.end());
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j + 1 < word.size(); ++j) {
            if (word[j] > word[j + 1]) {
                if ((degrees[word[j] - 1] * degrees[word[j + 1] - 1]) % 2 != 0)
                    sign = -sign;
                std::swap(word[j], word[j + 1]);
                moved = true;
            }
        }
    }
    return sign;
}

}  // namespace

TEST_CASE("tree t(6,3,3) has n = 8 and inner block {3,4,5}") {
    TreeInsertion t = tree_insertion(6, 3, 3);
    CHECK(t.n == 8);
    for (int label = 1; label <= 8; ++label)
        CHECK(t.in_block(label) == (label >= 3 && label <= 5));
    CHECK(t.inner_label(3) == 1);
    CHECK(t.inner_label(5) == 3);
    CHECK(t.outer_label(1) == 1);
    CHECK(t.outer_label(4) == 3);  // collapsed block
    CHECK(t.outer_label(6) == 4);
    CHECK(t.outer_label(8) == 6);
}

TEST_CASE("unary insertion relabels nothing") {
    for (int r = 1; r <= 5; ++r) {
        for (int i = 1; i <= r; ++i) {
            TreeInsertion t = tree_insertion(r, 1, i);
            CHECK(t.n == r);
            for (int label = 1; label <= r; ++label)
                CHECK(t.outer_label(label) == label);
            CHECK(t.in_block(i));
        }
    }
}

TEST_CASE("tree (2,2,2) follows the collapse convention") {
    TreeInsertion t = tree_insertion(2, 2, 2);
    CHECK(t.n == 3);
    CHECK_FALSE(t.in_block(1));
    CHECK(t.in_block(2));
    CHECK(t.in_block(3));
    CHECK(t.outer_label(1) == 1);
    CHECK(t.outer_label(2) == 2);
    CHECK(t.outer_label(3) == 2);
}

TEST_CASE("tree label maps cover the composite labels exactly once") {
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; r + s - 1 <= 7; ++s)
            for (int i = 1; i <= r; ++i) {
                TreeInsertion t = tree_insertion(r, s, i);
                std::vector<int> outer_seen(r + 1, 0), inner_seen(s + 1, 0);
                for (int label = 1; label <= t.n; ++label) {
                    if (t.in_block(label))
                        inner_seen[t.inner_label(label)]++;
                    else
                        outer_seen[t.outer_label(label)]++;
                }
                for (int a = 1; a <= r; ++a)
                    CHECK(outer_seen[a] == (a == i ? 0 : 1));
                for (int b = 1; b <= s; ++b)
                    CHECK(inner_seen[b] == 1);
            }
}

TEST_CASE("tree insertion rejects out-of-range leaves") {
    CHECK_THROWS_AS(tree_insertion(3, 2, 0), OutOfRange);
    CHECK_THROWS_AS(tree_insertion(3, 2, 4), OutOfRange);
    CHECK_THROWS_AS(tree_insertion(0, 2, 1), OutOfRange);
}

TEST_CASE("koszul sign basics") {
    CHECK(koszul_sign({identity_permutation(4), {1, 2, 3, 0}}) == 1);
    CHECK(koszul_sign({{2, 1}, {1, 1}}) == -1);
    CHECK(koszul_sign({{2, 1}, {1, 2}}) == 1);
    CHECK(koszul_sign({{2, 1}, {0, 1}}) == 1);
}

TEST_CASE("koszul sign matches the adjacent-decomposition oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int m = bounded(rng, 1, 5);
        Permutation g = random_permutation(rng, m);
        std::vector<int> degrees(m);
        for (int& d : degrees)
            d = bounded(rng, 0, 3);
        CHECK(koszul_sign({g, degrees}) == koszul_oracle(g, degrees));
    }
}

TEST_CASE("koszul sign is a homomorphism") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int m = bounded(rng, 1, 5);
        Permutation g = random_permutation(rng, m);
        Permutation h = random_permutation(rng, m);
        std::vector<int> degrees(m);
        for (int& d : degrees)
            d = bounded(rng, 0, 3);
        // Degrees travel with the symbols: after applying h the symbol at
        // position j is h(j), so g acts on the permuted degree list.
        std::vector<int> permuted(m);
        for (int j = 0; j < m; ++j)
            permuted[j] = degrees[h[j] - 1];
        int lhs = koszul_sign({compose_permutations(h, g), degrees});
        int rhs = koszul_sign({h, degrees}) * koszul_sign({g, permuted});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("adjacent factorization reassembles the permutation") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int m = bounded(rng, 1, 6);
        Permutation g = random_permutation(rng, m);
        Permutation rebuilt = identity_permutation(m);
        for (int j : adjacent_factorization(g))
            rebuilt = compose_permutations(rebuilt, adjacent_transposition(m, j));
        CHECK(rebuilt == g);
    }
}

TEST_CASE("block permutations are permutations with the right block image") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int r = bounded(rng, 1, 5), s = bounded(rng, 1, 4), i = bounded(rng, 1, r);
        Permutation sigma = random_permutation(rng, r);
        Permutation outer = block_outer(sigma, s, i);
        CHECK(is_permutation(outer));
        TreeInsertion src = tree_insertion(r, s, i);
        TreeInsertion dst = tree_insertion(r, s, sigma[i - 1]);
        for (int label = 1; label <= src.n; ++label) {
            if (src.in_block(label))
                CHECK(dst.inner_label(outer[label - 1]) == src.inner_label(label));
            else
                CHECK(dst.outer_label(outer[label - 1]) == sigma[src.outer_label(label) - 1]);
        }
        Permutation tau = random_permutation(rng, s);
        Permutation inner = block_inner(tau, r, i);
        CHECK(is_permutation(inner));
        for (int label = 1; label <= src.n; ++label) {
            if (src.in_block(label))
                CHECK(src.inner_label(inner[label - 1]) == tau[src.inner_label(label) - 1]);
            else
                CHECK(inner[label - 1] == label);
        }
    }
}

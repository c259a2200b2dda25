#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "gravity/arnold.hpp"
#include "gravity/errors.hpp"

using namespace gravity;

namespace {

int bounded(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ArnoldMonomial mono(std::initializer_list<std::pair<int, int>> factors) {
    ArnoldMonomial m;
    for (auto [a, b] : factors)
        m.factors.push_back(OmegaGenerator{a, b});
    return m;
}

ArnoldElement element(int n, std::initializer_list<std::pair<int, int>> factors) {
    ArnoldElement e(n, static_cast<int>(factors.size()));
    e.add_term(mono(factors), Rational(1));
    return e;
}

ArnoldElement random_element(std::mt19937_64& rng, int n, int k) {
    const auto& monomials = basis(n, k);
    ArnoldElement x(n, k);
    if (monomials.empty())
        return x;
    for (int t = 0; t < 4; ++t) {
        int c = bounded(rng, -2, 2);
        if (c != 0)
            x.add_term(monomials[bounded(rng, 0, static_cast<int>(monomials.size()) - 1)],
                       Rational(c));
    }
    return x;
}

// Coefficients of prod_{j=1}^{n-1} (1 + j t), the independent dimension count.
std::vector<long> arnold_poincare(int n) {
    std::vector<long> poly{1};
    for (int j = 1; j <= n - 1; ++j) {
        std::vector<long> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d];
            next[d + 1] += poly[d] * j;
        }
        poly = std::move(next);
    }
    return poly;
}

using Triple = std::map<std::tuple<ArnoldMonomial, ArnoldMonomial, ArnoldMonomial>, Rational>;

void add_triple(Triple& acc, const ArnoldMonomial& a, const ArnoldMonomial& b,
                const ArnoldMonomial& c, const Rational& v) {
    auto key = std::make_tuple(a, b, c);
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(std::move(key), v);
    else {
        it->second += v;
        if (is_zero(it->second))
            acc.erase(it);
    }
}

}  // namespace

TEST_CASE("basis examples") {
    CHECK(basis(2, 1) == std::vector<ArnoldMonomial>{mono({{1, 2}})});
    CHECK(basis(3, 2) ==
          std::vector<ArnoldMonomial>{mono({{1, 2}, {1, 3}}), mono({{1, 2}, {2, 3}})});
    long total = 0;
    for (int k = 0; k <= 6; ++k)
        total += static_cast<long>(basis(7, k).size());
    CHECK(total == 5040);
}

TEST_CASE("basis sizes match the Poincare polynomial for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        auto poly = arnold_poincare(n);
        for (int k = 0; k <= n; ++k) {
            long expected = k < static_cast<int>(poly.size()) ? poly[k] : 0;
            CHECK(static_cast<long>(basis(n, k).size()) == expected);
        }
    }
}

TEST_CASE("straightening examples") {
    SUBCASE("square of a generator vanishes") {
        CHECK(straighten({{1, 2}, {1, 2}}, Rational(1), 3).is_zero());
    }
    SUBCASE("shared second index straightens via the Arnold relation") {
        ArnoldElement got = straighten({{1, 3}, {2, 3}}, Rational(1), 3);
        ArnoldElement want(3, 2);
        want.add_term(mono({{1, 2}, {2, 3}}), Rational(1));
        want.add_term(mono({{1, 2}, {1, 3}}), Rational(-1));
        CHECK(got == want);
    }
    SUBCASE("degree above the top degree vanishes") {
        CHECK(straighten({{1, 2}, {2, 3}, {1, 3}}, Rational(1), 3).is_zero());
    }
    SUBCASE("w(a,a) is rejected") {
        CHECK_THROWS_AS(straighten({{1, 1}}, Rational(1), 2), InvalidGenerator);
    }
    SUBCASE("labels outside the ambient are rejected") {
        CHECK_THROWS_AS(straighten({{1, 4}}, Rational(1), 3), LabelOutOfRange);
    }
    SUBCASE("idempotent on admissible monomials") {
        ArnoldElement e = straighten({{1, 2}, {2, 3}}, Rational(1), 3);
        REQUIRE(e.terms().size() == 1);
        CHECK(e.terms().begin()->first == mono({{1, 2}, {2, 3}}));
        CHECK(e.terms().begin()->second == Rational(1));
    }
}

TEST_CASE("arnold relation straightens to zero for all triples, n <= 6") {
    for (int n = 3; n <= 6; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) {
                    ArnoldElement rel(n, 2);
                    rel += straighten({{a, b}, {b, c}}, Rational(1), n);
                    rel += straighten({{b, c}, {c, a}}, Rational(1), n);
                    rel += straighten({{c, a}, {a, b}}, Rational(1), n);
                    CHECK(rel.is_zero());
                }
}

TEST_CASE("multiplication") {
    ArnoldElement x = element(4, {{1, 2}, {2, 3}});
    SUBCASE("unit law") {
        CHECK(multiply(x, ArnoldElement::unit(4)) == x);
        CHECK(multiply(ArnoldElement::unit(4), x) == x);
    }
    SUBCASE("admissible product stays put") {
        ArnoldElement got = multiply(element(3, {{1, 2}}), element(3, {{1, 3}}));
        CHECK(got == element(3, {{1, 2}, {1, 3}}));
    }
    SUBCASE("ambient mismatch") {
        CHECK_THROWS_AS(multiply(element(3, {{1, 2}}), element(4, {{1, 2}})), AmbientMismatch);
    }
    SUBCASE("graded commutativity on random elements") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            int n = bounded(rng, 2, 6);
            int kx = bounded(rng, 0, n - 1), ky = bounded(rng, 0, n - 1);
            ArnoldElement a = random_element(rng, n, kx);
            ArnoldElement b = random_element(rng, n, ky);
            ArnoldElement lhs = multiply(a, b);
            ArnoldElement rhs = multiply(b, a);
            if ((kx * ky) % 2 != 0)
                rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("symmetric group action") {
    SUBCASE("omega is label symmetric") {
        CHECK(sn_act({2, 1}, element(2, {{1, 2}})) == element(2, {{1, 2}}));
    }
    SUBCASE("transposition (2 3) moves labels") {
        CHECK(sn_act({1, 3, 2}, element(3, {{1, 2}})) == element(3, {{1, 3}}));
    }
    SUBCASE("the 3-cycle on w(1,2)w(1,3)") {
        ArnoldElement got = sn_act({2, 3, 1}, element(3, {{1, 2}, {1, 3}}));
        ArnoldElement want(3, 2);
        want.add_term(mono({{1, 2}, {2, 3}}), Rational(-1));
        CHECK(got == want);
    }
    SUBCASE("group action property") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 25; ++trial) {
            int n = bounded(rng, 2, 6);
            Permutation g = identity_permutation(n), h = identity_permutation(n);
            for (int j = n - 1; j > 0; --j)
                std::swap(g[j], g[bounded(rng, 0, j)]);
            for (int j = n - 1; j > 0; --j)
                std::swap(h[j], h[bounded(rng, 0, j)]);
            ArnoldElement x = random_element(rng, n, bounded(rng, 0, n - 1));
            CHECK(sn_act(compose_permutations(g, h), x) == sn_act(g, sn_act(h, x)));
        }
    }
    SUBCASE("algebra map") {
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 25; ++trial) {
            int n = bounded(rng, 2, 5);
            Permutation g = identity_permutation(n);
            for (int j = n - 1; j > 0; --j)
                std::swap(g[j], g[bounded(rng, 0, j)]);
            ArnoldElement x = random_element(rng, n, bounded(rng, 0, 2));
            ArnoldElement y = random_element(rng, n, bounded(rng, 0, 2));
            CHECK(sn_act(g, multiply(x, y)) == multiply(sn_act(g, x), sn_act(g, y)));
        }
    }
}

TEST_CASE("cocompose generator examples for t(2,2,1)") {
    TreeInsertion t = tree_insertion(2, 2, 1);
    SUBCASE("both endpoints inside the block") {
        TensorElement got = cocompose(t, element(3, {{1, 2}}));
        TensorElement want(2, 2);
        want.add_term(ArnoldMonomial{}, mono({{1, 2}}), Rational(1));
        CHECK(got == want);
    }
    SUBCASE("one endpoint merges to the outer label") {
        TensorElement got = cocompose(t, element(3, {{1, 3}}));
        TensorElement want(2, 2);
        want.add_term(mono({{1, 2}}), ArnoldMonomial{}, Rational(1));
        CHECK(got == want);
    }
    SUBCASE("repeated merged generator collapses to zero") {
        CHECK(cocompose(t, element(3, {{1, 3}, {2, 3}})).is_zero());
    }
}

TEST_CASE("cocompose is an algebra map with Koszul signs") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        int r = bounded(rng, 1, 4), s = bounded(rng, 1, 4);
        int n = r + s - 1;
        if (n < 2)
            continue;
        TreeInsertion t = tree_insertion(r, s, bounded(rng, 1, r));
        ArnoldElement x = random_element(rng, n, bounded(rng, 0, std::min(2, n - 1)));
        ArnoldElement y = random_element(rng, n, bounded(rng, 0, std::min(2, n - 1)));
        TensorElement lhs = cocompose(t, multiply(x, y));
        TensorElement rhs = multiply(cocompose(t, x), cocompose(t, y));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cocompose satisfies the dual sequential and parallel axioms") {
    std::mt19937_64 rng(8);
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s)
            for (int u = 1; r + s + u - 2 <= 6; ++u) {
                const int n = r + s + u - 2;
                if (n < 1)
                    continue;
                for (int i = 1; i <= r; ++i) {
                    for (int trial = 0; trial < 2; ++trial) {
                        ArnoldElement x =
                            random_element(rng, n, n == 1 ? 0 : bounded(rng, 1, std::min(3, n - 1)));
                        // Sequential shape: the second insertion lands inside
                        // the first block.
                        for (int j = 1; j <= s; ++j) {
                            Triple lhs, rhs;
                            TensorElement first =
                                cocompose(tree_insertion(r + s - 1, u, i + j - 1), x);
                            for (const auto& [key, c] : first.terms()) {
                                ArnoldElement left(r + s - 1, key.first.degree());
                                left.add_term(key.first, Rational(1));
                                TensorElement second =
                                    cocompose(tree_insertion(r, s, i), left);
                                for (const auto& [kk, cc] : second.terms())
                                    add_triple(lhs, kk.first, kk.second, key.second, c * cc);
                            }
                            TensorElement outer = cocompose(tree_insertion(r, s + u - 1, i), x);
                            for (const auto& [key, c] : outer.terms()) {
                                ArnoldElement right(s + u - 1, key.second.degree());
                                right.add_term(key.second, Rational(1));
                                TensorElement second = cocompose(tree_insertion(s, u, j), right);
                                for (const auto& [kk, cc] : second.terms())
                                    add_triple(rhs, key.first, kk.first, kk.second, c * cc);
                            }
                            CHECK(lhs == rhs);
                        }
                        // Parallel shape: the second insertion lands strictly
                        // left of the first block; the two inner factors swap
                        // with a Koszul sign.
                        for (int j = 1; j < i; ++j) {
                            Triple lhs, rhs;
                            TensorElement first = cocompose(tree_insertion(r + s - 1, u, j), x);
                            for (const auto& [key, c] : first.terms()) {
                                ArnoldElement left(r + s - 1, key.first.degree());
                                left.add_term(key.first, Rational(1));
                                TensorElement second = cocompose(tree_insertion(r, s, i), left);
                                for (const auto& [kk, cc] : second.terms())
                                    add_triple(lhs, kk.first, kk.second, key.second, c * cc);
                            }
                            TensorElement first2 =
                                cocompose(tree_insertion(r + u - 1, s, i + u - 1), x);
                            for (const auto& [key, c] : first2.terms()) {
                                ArnoldElement left(r + u - 1, key.first.degree());
                                left.add_term(key.first, Rational(1));
                                TensorElement second = cocompose(tree_insertion(r, u, j), left);
                                for (const auto& [kk, cc] : second.terms()) {
                                    Rational v = c * cc;
                                    if ((key.second.degree() * kk.second.degree()) % 2 != 0)
                                        v = -v;
                                    add_triple(rhs, kk.first, key.second, kk.second, v);
                                }
                            }
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
}

TEST_CASE("tensor multiplication carries the middle Koszul sign") {
    TensorElement a(2, 2), b(2, 2);
    a.add_term(ArnoldMonomial{}, mono({{1, 2}}), Rational(1));  // 1 (x) w
    b.add_term(mono({{1, 2}}), ArnoldMonomial{}, Rational(1));  // w (x) 1
    TensorElement ab = multiply(a, b);
    TensorElement want(2, 2);
    want.add_term(mono({{1, 2}}), mono({{1, 2}}), Rational(-1));
    CHECK(ab == want);
    CHECK(multiply(b, a).terms().begin()->second == Rational(1));
}

#pragma once

// Numeric oracle for the Arnold algebra, independent of the exact-rational
// pipeline. Monomials are evaluated as exterior products of the 1-forms
// dlog(z_a - z_b) at random complex configurations: a degree-k element is
// paired with k tangent vectors through the determinant of the matrix of
// 1-form values. Identities between classes become numeric identities
// between determinants; 1e-9 relative tolerance leaves five orders of
// margin over double-precision roundoff at these sizes.

#include <complex>
#include <random>
#include <vector>

#include "gravity/arnold.hpp"
#include "gravity/circle_action.hpp"
#include "gravity/combinatorics.hpp"

namespace oracle {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline double to_double(const gravity::Rational& q) {
    return q.get_d();
}

// Random points with pairwise separation at least 0.4 in a box of radius 2.
inline CVec random_configuration(std::mt19937_64& rng, int n) {
    auto coord = [&rng]() { return (static_cast<double>(rng() % 4000001) - 2000000.0) / 1000000.0; };
    while (true) {
        CVec z(n);
        for (int c = 0; c < n; ++c)
            z[c] = Complex(coord(), coord());
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                if (std::abs(z[a] - z[b]) < 0.4)
                    ok = false;
        if (ok)
            return z;
    }
}

inline std::vector<CVec> random_tangents(std::mt19937_64& rng, int count, int dim) {
    auto coord = [&rng]() { return (static_cast<double>(rng() % 2000001) - 1000000.0) / 1000000.0; };
    std::vector<CVec> v(count, CVec(dim));
    for (int j = 0; j < count; ++j)
        for (int c = 0; c < dim; ++c)
            v[j][c] = Complex(coord(), coord());
    return v;
}

inline Complex determinant(std::vector<CVec> m) {
    const std::size_t k = m.size();
    Complex det(1.0, 0.0);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
                pivot = r;
        if (std::abs(m[pivot][col]) == 0.0)
            return Complex(0.0, 0.0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            Complex f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < k; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Value of dlog(z_a - z_b) on a tangent vector (1-based labels).
inline Complex dlog_value(const CVec& z, const CVec& v, int a, int b) {
    return (v[a - 1] - v[b - 1]) / (z[a - 1] - z[b - 1]);
}

// Wedge of the word's 1-forms evaluated on tangents (word.size() of them).
inline Complex eval_word(const gravity::GeneratorWord& word, const CVec& z,
                         const std::vector<CVec>& tangents) {
    const std::size_t k = word.size();
    if (k == 0)
        return Complex(1.0, 0.0);
    std::vector<CVec> m(k, CVec(k));
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t col = 0; col < k; ++col)
            m[row][col] = dlog_value(z, tangents[col], word[row].first, word[row].second);
    return determinant(std::move(m));
}

inline Complex eval_element(const gravity::ArnoldElement& x, const CVec& z,
                            const std::vector<CVec>& tangents) {
    Complex acc(0.0, 0.0);
    for (const auto& [mono, c] : x.terms()) {
        gravity::GeneratorWord word;
        for (const auto& g : mono.factors)
            word.emplace_back(g.a, g.b);
        acc += to_double(c) * eval_word(word, z, tangents);
    }
    return acc;
}

// --- product-space evaluation -------------------------------------------

struct ProductTangents {
    std::vector<CVec> u;  // tangents in the outer configuration space
    std::vector<CVec> w;  // tangents in the inner configuration space
};

// Rows of a tensor term (out (x) in), evaluated on product tangents.
inline Complex eval_tensor_term(const gravity::ArnoldMonomial& out,
                                const gravity::ArnoldMonomial& in, const CVec& zu,
                                const CVec& zw, const ProductTangents& t) {
    const std::size_t k = out.factors.size() + in.factors.size();
    std::vector<CVec> m(k, CVec(k));
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t row = 0;
        for (const auto& g : out.factors)
            m[row++][col] = dlog_value(zu, t.u[col], g.a, g.b);
        for (const auto& g : in.factors)
            m[row++][col] = dlog_value(zw, t.w[col], g.a, g.b);
    }
    return determinant(std::move(m));
}

inline Complex eval_tensor(const gravity::TensorElement& x, const CVec& zu, const CVec& zw,
                           const ProductTangents& t) {
    Complex acc(0.0, 0.0);
    for (const auto& [key, c] : x.terms())
        acc += to_double(c) * eval_tensor_term(key.first, key.second, zu, zw, t);
    return acc;
}

// Composite configuration z(u, w, eps) of the little-disks insertion and
// the pushforward of product tangents.
inline CVec compose_configuration(const gravity::TreeInsertion& t, const CVec& zu, const CVec& zw,
                                  double eps) {
    CVec z(t.n);
    for (int c = 1; c <= t.n; ++c) {
        if (t.in_block(c))
            z[c - 1] = zu[t.i - 1] + eps * zw[t.inner_label(c) - 1];
        else
            z[c - 1] = zu[t.outer_label(c) - 1];
    }
    return z;
}

inline CVec push_tangent(const gravity::TreeInsertion& t, const CVec& vu, const CVec& vw,
                         double eps) {
    CVec v(t.n);
    for (int c = 1; c <= t.n; ++c) {
        if (t.in_block(c))
            v[c - 1] = vu[t.i - 1] + eps * vw[t.inner_label(c) - 1];
        else
            v[c - 1] = vu[t.outer_label(c) - 1];
    }
    return v;
}

// Pullback of the monomial along the insertion at parameter eps, evaluated
// on pushed product tangents. Factors supported inside the block cancel
// their eps exactly, so the matrix entries extend continuously to eps = 0,
// where they are evaluated when eps == 0 is passed.
inline Complex eval_pullback(const gravity::TreeInsertion& t, const gravity::GeneratorWord& word,
                             const CVec& zu, const CVec& zw, const ProductTangents& tv,
                             double eps) {
    const std::size_t k = word.size();
    if (k == 0)
        return Complex(1.0, 0.0);
    CVec z;
    std::vector<CVec> pushed;
    if (eps != 0.0) {
        z = compose_configuration(t, zu, zw, eps);
        for (std::size_t col = 0; col < k; ++col)
            pushed.push_back(push_tangent(t, tv.u[col], tv.w[col], eps));
    }
    std::vector<CVec> m(k, CVec(k));
    for (std::size_t row = 0; row < k; ++row) {
        const auto [a, b] = word[row];
        const bool a_in = t.in_block(a), b_in = t.in_block(b);
        for (std::size_t col = 0; col < k; ++col) {
            if (a_in && b_in)
                m[row][col] = dlog_value(zw, tv.w[col], t.inner_label(a), t.inner_label(b));
            else if (eps == 0.0)
                m[row][col] = dlog_value(zu, tv.u[col], t.outer_label(a), t.outer_label(b));
            else
                m[row][col] = dlog_value(z, pushed[col], a, b);
        }
    }
    return determinant(std::move(m));
}

// Residue along the block collapse, evaluated numerically: the first slot
// contracts with eps d/d eps of the composite configuration (whose entries
// have exact limits 1 inside the block and 0 otherwise), the remaining
// slots with pushed product tangents at eps -> 0.
inline Complex eval_residue_limit(const gravity::TreeInsertion& t,
                                  const gravity::GeneratorWord& word, const CVec& zu,
                                  const CVec& zw, const ProductTangents& tv) {
    const std::size_t k = word.size();
    if (k == 0)
        return Complex(0.0, 0.0);
    std::vector<CVec> m(k, CVec(k));
    for (std::size_t row = 0; row < k; ++row) {
        const auto [a, b] = word[row];
        const bool a_in = t.in_block(a), b_in = t.in_block(b);
        m[row][0] = (a_in && b_in) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        for (std::size_t col = 1; col < k; ++col) {
            if (a_in && b_in)
                m[row][col] = dlog_value(zw, tv.w[col - 1], t.inner_label(a), t.inner_label(b));
            else
                m[row][col] = dlog_value(zu, tv.u[col - 1], t.outer_label(a), t.outer_label(b));
        }
    }
    return determinant(std::move(m));
}

inline bool close(Complex lhs, Complex rhs, double tol = 1e-9) {
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) <= tol * scale;
}

}  // namespace oracle

#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gravity/combinatorics.hpp"
#include "gravity/linalg.hpp"
#include "gravity/rational.hpp"

namespace gravity {

// Degree-1 generator w(a,b) of the cohomology of the configuration space
// of n points in the plane, the class of dlog(z_a - z_b). The generator is
// symmetric in its labels; we normalize a < b.
struct OmegaGenerator {
    int a = 0;
    int b = 0;
    auto operator<=>(const OmegaGenerator&) const = default;
};

// Product w(a_1,b_1)...w(a_k,b_k) in admissible form: second indices
// strictly increasing (b_1 < ... < b_k), each a_l < b_l. These monomials
// form the no-broken-circuit basis of the Arnold algebra.
struct ArnoldMonomial {
    std::vector<OmegaGenerator> factors;

    int degree() const { return static_cast<int>(factors.size()); }
    bool admissible() const;
    auto operator<=>(const ArnoldMonomial&) const = default;
};

std::string monomial_to_string(const ArnoldMonomial& m);  // "w(1,2)w(2,3)", "1" in degree 0

// Homogeneous element of H^k(Conf_n), a rational combination of admissible
// monomials. Immutable value semantics; no zero coefficients stored.
class ArnoldElement {
  public:
    ArnoldElement() = default;
    ArnoldElement(int n, int degree) : n_(n), degree_(degree) {}

    static ArnoldElement unit(int n) {
        ArnoldElement e(n, 0);
        e.add_term(ArnoldMonomial{}, Rational(1));
        return e;
    }

    int ambient() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ArnoldMonomial, Rational>& terms() const { return terms_; }

    void add_term(const ArnoldMonomial& m, const Rational& c);
    ArnoldElement& operator+=(const ArnoldElement& other);
    ArnoldElement operator*(const Rational& c) const;
    ArnoldElement operator-() const { return *this * Rational(-1); }
    bool operator==(const ArnoldElement&) const = default;

  private:
    int n_ = 0;
    int degree_ = 0;
    std::map<ArnoldMonomial, Rational> terms_;
};

// All admissible degree-k monomials on n labels, ordered lexicographically
// on the factor sequence ((a_1,b_1),(a_2,b_2),...). Memoized; the count is
// the t^k coefficient of prod_{j=1}^{n-1} (1 + j t).
const std::vector<ArnoldMonomial>& basis(int n, int k);
int basis_index(int n, int k, const ArnoldMonomial& m);  // -1 when absent

Vec to_coordinates(const ArnoldElement& x);
ArnoldElement from_coordinates(int n, int k, const Vec& coords);

// Raw generator word, not necessarily admissible; pairs may be unordered.
using GeneratorWord = std::vector<std::pair<int, int>>;

// Class of the signed product of the word in the admissible basis. The
// rewriting uses graded commutativity (all generators are odd) and the
// Arnold relation in the form
//   w(a,b) w(c,b) = w(a,c) w(c,b) - w(a,c) w(a,b)   (a < c < b),
// which strictly decreases the multiset of second indices, so it
// terminates. Idempotent on admissible monomials; repeated generators give 0.
ArnoldElement straighten(const GeneratorWord& word, const Rational& sign, int n);

// Graded-commutative product.
ArnoldElement multiply(const ArnoldElement& x, const ArnoldElement& y);

// Relabeling action of a permutation g of {1..n}: w(a,b) -> w(g(a),g(b)),
// then straighten. A left action and an algebra map.
ArnoldElement sn_act(const Permutation& g, const ArnoldElement& x);

// Element of a tensor product H^*(Conf_r) (x) H^*(Conf_s), stored over
// pairs of admissible monomials. Not necessarily homogeneous: cocomposition
// spreads one element over several Kunneth blocks.
class TensorElement {
  public:
    TensorElement() = default;
    TensorElement(int n_out, int n_in) : n_out_(n_out), n_in_(n_in) {}

    int ambient_out() const { return n_out_; }
    int ambient_in() const { return n_in_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<ArnoldMonomial, ArnoldMonomial>, Rational>& terms() const {
        return terms_;
    }

    void add_term(const ArnoldMonomial& out, const ArnoldMonomial& in, const Rational& c);
    void add_product(const ArnoldElement& out, const ArnoldElement& in, const Rational& c);
    TensorElement& operator+=(const TensorElement& other);
    bool operator==(const TensorElement&) const = default;

  private:
    int n_out_ = 0;
    int n_in_ = 0;
    std::map<std::pair<ArnoldMonomial, ArnoldMonomial>, Rational> terms_;
};

// Product of tensor elements with the Koszul sign
// (x (x) y)(x' (x) y') = (-1)^{|y||x'|} (x x') (x) (y y').
TensorElement multiply(const TensorElement& x, const TensorElement& y);

// Cocomposition along t, the algebra map dual to the little-disks
// composition Conf_r x Conf_s -> Conf_n. On a generator w(a,b):
//   both endpoints in the block  ->  1 (x) w(inner a, inner b)
//   otherwise                    ->  w(outer a, outer b) (x) 1
// (an endpoint inside the block merges to the outer label i), extended
// multiplicatively with Koszul signs.
TensorElement cocompose(const TreeInsertion& t, const ArnoldElement& x);

}  // namespace gravity

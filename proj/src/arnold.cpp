#include "gravity/arnold.hpp"

#include <algorithm>
#include <mutex>

namespace gravity {

bool ArnoldMonomial::admissible() const {
    for (std::size_t l = 0; l < factors.size(); ++l) {
        if (factors[l].a >= factors[l].b || factors[l].a < 1)
            return false;
        if (l > 0 && factors[l - 1].b >= factors[l].b)
            return false;
    }
    return true;
}

std::string monomial_to_string(const ArnoldMonomial& m) {
    if (m.factors.empty())
        return "1";
    std::string out;
    for (const OmegaGenerator& g : m.factors)
        out += "w(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    return out;
}

void ArnoldElement::add_term(const ArnoldMonomial& m, const Rational& c) {
    if (gravity::is_zero(c))
        return;
    if (m.degree() != degree_)
        throw Error("adding a term of the wrong degree");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (gravity::is_zero(it->second))
            terms_.erase(it);
    }
}

ArnoldElement& ArnoldElement::operator+=(const ArnoldElement& other) {
    if (other.is_zero())
        return *this;
    if (n_ != other.n_)
        throw AmbientMismatch("adding elements with different ambient label counts");
    if (degree_ != other.degree_)
        throw Error("adding elements of different degrees");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

ArnoldElement ArnoldElement::operator*(const Rational& c) const {
    ArnoldElement out(n_, degree_);
    if (gravity::is_zero(c))
        return out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace(m, v * c);
    return out;
}

namespace {

struct BasisKey {
    int n;
    int k;
    auto operator<=>(const BasisKey&) const = default;
};

struct BasisData {
    std::vector<ArnoldMonomial> monomials;
    std::map<ArnoldMonomial, int> index;
};

std::mutex basis_mutex;
std::map<BasisKey, BasisData> basis_cache;

void generate(int n, int k, ArnoldMonomial& prefix, std::vector<ArnoldMonomial>& out) {
    if (prefix.degree() == k) {
        out.push_back(prefix);
        return;
    }
    const int remaining = k - prefix.degree();
    const int min_b = prefix.factors.empty() ? 2 : prefix.factors.back().b + 1;
    // Need `remaining` strictly increasing second indices <= n.
    for (int b = min_b; b + remaining - 1 <= n; ++b) {
        for (int a = 1; a < b; ++a) {
            prefix.factors.push_back(OmegaGenerator{a, b});
            generate(n, k, prefix, out);
            prefix.factors.pop_back();
        }
    }
}

const BasisData& basis_data(int n, int k) {
    if (n < 1 || k < 0)
        throw OutOfRange("basis requires n >= 1 and k >= 0");
    std::lock_guard<std::mutex> lock(basis_mutex);
    auto it = basis_cache.find(BasisKey{n, k});
    if (it != basis_cache.end())
        return it->second;
    BasisData data;
    ArnoldMonomial prefix;
    generate(n, k, prefix, data.monomials);
    std::sort(data.monomials.begin(), data.monomials.end());
    for (int idx = 0; idx < static_cast<int>(data.monomials.size()); ++idx)
        data.index.emplace(data.monomials[idx], idx);
    return basis_cache.emplace(BasisKey{n, k}, std::move(data)).first->second;
}

}  // namespace

const std::vector<ArnoldMonomial>& basis(int n, int k) {
    return basis_data(n, k).monomials;
}

int basis_index(int n, int k, const ArnoldMonomial& m) {
    const BasisData& data = basis_data(n, k);
    auto it = data.index.find(m);
    return it == data.index.end() ? -1 : it->second;
}

Vec to_coordinates(const ArnoldElement& x) {
    const auto& b = basis(x.ambient(), x.degree());
    Vec out(b.size(), Rational(0));
    for (const auto& [m, c] : x.terms()) {
        int idx = basis_index(x.ambient(), x.degree(), m);
        if (idx < 0)
            throw Error("element contains a non-admissible monomial");
        out[idx] = c;
    }
    return out;
}

ArnoldElement from_coordinates(int n, int k, const Vec& coords) {
    const auto& b = basis(n, k);
    if (coords.size() != b.size())
        throw Error("coordinate vector has wrong length");
    ArnoldElement out(n, k);
    for (std::size_t idx = 0; idx < b.size(); ++idx)
        out.add_term(b[idx], coords[idx]);
    return out;
}

namespace {

using Word = std::vector<OmegaGenerator>;

// Sorts the word by (b, a), accumulating the permutation sign (generators
// are odd). Returns false if a factor repeats, i.e. the term is zero.
bool sort_word(Word& w, int& sign) {
    for (std::size_t l = 1; l < w.size(); ++l) {
        OmegaGenerator key = w[l];
        std::size_t j = l;
        while (j > 0 && (w[j - 1].b > key.b || (w[j - 1].b == key.b && w[j - 1].a > key.a))) {
            w[j] = w[j - 1];
            sign = -sign;
            --j;
        }
        w[j] = key;
    }
    for (std::size_t l = 1; l < w.size(); ++l)
        if (w[l - 1] == w[l])
            return false;
    return true;
}

}  // namespace

ArnoldElement straighten(const GeneratorWord& word, const Rational& sign, int n) {
    Word normalized;
    normalized.reserve(word.size());
    for (const auto& [a, b] : word) {
        if (a == b)
            throw InvalidGenerator("w(a,a) is not a generator");
        if (a < 1 || b < 1 || a > n || b > n)
            throw LabelOutOfRange("generator label outside {1..n}");
        normalized.push_back(OmegaGenerator{std::min(a, b), std::max(a, b)});
    }

    ArnoldElement result(n, static_cast<int>(word.size()));
    if (is_zero(sign))
        return result;

    std::map<Word, Rational> work;
    work.emplace(std::move(normalized), sign);
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        Word w = std::move(node.key());
        Rational c = std::move(node.mapped());
        int flip = 1;
        if (!sort_word(w, flip))
            continue;  // repeated generator
        if (flip < 0)
            c = -c;

        // First adjacent pair sharing a second index, if any.
        std::size_t l = 0;
        while (l + 1 < w.size() && w[l].b != w[l + 1].b)
            ++l;
        if (w.size() < 2 || l + 1 == w.size()) {
            ArnoldMonomial m;
            m.factors = std::move(w);
            result.add_term(m, c);
            continue;
        }
        // w(a,b) w(c,b) = w(a,c) w(c,b) - w(a,c) w(a,b), a < c < b.
        const int a = w[l].a, cc = w[l + 1].a, b = w[l].b;
        Word w1 = w;
        w1[l] = OmegaGenerator{a, cc};
        w1[l + 1] = OmegaGenerator{cc, b};
        Word w2 = w;
        w2[l] = OmegaGenerator{a, cc};
        w2[l + 1] = OmegaGenerator{a, b};
        auto accumulate = [&work](Word&& ww, Rational val) {
            auto it = work.find(ww);
            if (it == work.end()) {
                work.emplace(std::move(ww), std::move(val));
            } else {
                it->second += val;
                if (is_zero(it->second))
                    work.erase(it);
            }
        };
        accumulate(std::move(w1), c);
        accumulate(std::move(w2), -c);
    }
    return result;
}

ArnoldElement multiply(const ArnoldElement& x, const ArnoldElement& y) {
    if (x.ambient() != y.ambient())
        throw AmbientMismatch("multiplying elements with different ambient label counts");
    ArnoldElement out(x.ambient(), x.degree() + y.degree());
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            GeneratorWord word;
            word.reserve(mx.factors.size() + my.factors.size());
            for (const OmegaGenerator& g : mx.factors)
                word.emplace_back(g.a, g.b);
            for (const OmegaGenerator& g : my.factors)
                word.emplace_back(g.a, g.b);
            out += straighten(word, cx * cy, x.ambient());
        }
    }
    return out;
}

ArnoldElement sn_act(const Permutation& g, const ArnoldElement& x) {
    if (static_cast<int>(g.size()) != x.ambient())
        throw AmbientMismatch("permutation size does not match ambient label count");
    if (!is_permutation(g))
        throw Error("sn_act: not a permutation");
    ArnoldElement out(x.ambient(), x.degree());
    for (const auto& [m, c] : x.terms()) {
        GeneratorWord word;
        word.reserve(m.factors.size());
        for (const OmegaGenerator& f : m.factors)
            word.emplace_back(g[f.a - 1], g[f.b - 1]);
        out += straighten(word, c, x.ambient());
    }
    return out;
}

void TensorElement::add_term(const ArnoldMonomial& out, const ArnoldMonomial& in,
                             const Rational& c) {
    if (gravity::is_zero(c))
        return;
    auto key = std::make_pair(out, in);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (gravity::is_zero(it->second))
            terms_.erase(it);
    }
}

void TensorElement::add_product(const ArnoldElement& out, const ArnoldElement& in,
                                const Rational& c) {
    if (out.ambient() != n_out_ || in.ambient() != n_in_)
        throw AmbientMismatch("tensor factor has wrong ambient label count");
    for (const auto& [mo, co] : out.terms())
        for (const auto& [mi, ci] : in.terms())
            add_term(mo, mi, c * co * ci);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    if (other.is_zero())
        return *this;
    if (n_out_ != other.n_out_ || n_in_ != other.n_in_)
        throw AmbientMismatch("adding tensors over different spaces");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

TensorElement multiply(const TensorElement& x, const TensorElement& y) {
    if (x.ambient_out() != y.ambient_out() || x.ambient_in() != y.ambient_in())
        throw AmbientMismatch("multiplying tensors over different spaces");
    TensorElement out(x.ambient_out(), x.ambient_in());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const int cross = kx.second.degree() * ky.first.degree();
            Rational c = cx * cy;
            if (cross % 2 != 0)
                c = -c;
            GeneratorWord wo, wi;
            for (const OmegaGenerator& g : kx.first.factors)
                wo.emplace_back(g.a, g.b);
            for (const OmegaGenerator& g : ky.first.factors)
                wo.emplace_back(g.a, g.b);
            for (const OmegaGenerator& g : kx.second.factors)
                wi.emplace_back(g.a, g.b);
            for (const OmegaGenerator& g : ky.second.factors)
                wi.emplace_back(g.a, g.b);
            out.add_product(straighten(wo, Rational(1), x.ambient_out()),
                            straighten(wi, Rational(1), x.ambient_in()), c);
        }
    }
    return out;
}

TensorElement cocompose(const TreeInsertion& t, const ArnoldElement& x) {
    if (x.ambient() != t.n)
        throw AmbientMismatch("cocompose: element ambient does not match tree");
    TensorElement result(t.r, t.s);
    for (const auto& [m, c] : x.terms()) {
        GeneratorWord out_word, in_word;
        int cross_exponent = 0;  // out factors passing earlier in factors
        for (const OmegaGenerator& g : m.factors) {
            const bool a_in = t.in_block(g.a);
            const bool b_in = t.in_block(g.b);
            if (a_in && b_in) {
                in_word.emplace_back(t.inner_label(g.a), t.inner_label(g.b));
            } else {
                out_word.emplace_back(t.outer_label(g.a), t.outer_label(g.b));
                cross_exponent += static_cast<int>(in_word.size());
            }
        }
        Rational coeff = c;
        if (cross_exponent % 2 != 0)
            coeff = -coeff;
        result.add_product(straighten(out_word, Rational(1), t.r),
                           straighten(in_word, Rational(1), t.s), coeff);
    }
    return result;
}

}  // namespace gravity

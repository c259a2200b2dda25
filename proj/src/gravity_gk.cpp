#include "gravity/gravity_gk.hpp"

#include <map>
#include <mutex>

#include "gravity/errors.hpp"

namespace gravity {

namespace {

// Shared monomial rule. Splits word \ {extracted factor} into outer and
// inner restrictions with the unshuffle Koszul sign.
void residue_terms(const TreeInsertion& t, const std::vector<OmegaGenerator>& factors,
                   const Rational& coeff, TensorElement& out) {
    for (std::size_t l = 0; l < factors.size(); ++l) {
        if (!t.in_block(factors[l].a) || !t.in_block(factors[l].b))
            continue;
        GeneratorWord out_word, in_word;
        int cross_exponent = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j == l)
                continue;
            const OmegaGenerator& g = factors[j];
            if (t.in_block(g.a) && t.in_block(g.b)) {
                in_word.emplace_back(t.inner_label(g.a), t.inner_label(g.b));
            } else {
                out_word.emplace_back(t.outer_label(g.a), t.outer_label(g.b));
                cross_exponent += static_cast<int>(in_word.size());
            }
        }
        Rational c = coeff;
        if ((static_cast<int>(l) + cross_exponent) % 2 != 0)
            c = -c;
        out.add_product(straighten(out_word, Rational(1), t.r),
                        straighten(in_word, Rational(1), t.s), c);
    }
}

}  // namespace

TensorElement residue(const TreeInsertion& t, const ArnoldElement& x) {
    if (x.ambient() != t.n)
        throw AmbientMismatch("residue: element ambient does not match tree");
    if (!delta_contract(x).is_zero())
        throw NotDeltaClosed("residue is only defined on Delta*-closed classes");
    TensorElement out(t.r, t.s);
    for (const auto& [m, c] : x.terms())
        residue_terms(t, m.factors, c, out);
    return out;
}

TensorElement residue_word(const TreeInsertion& t, const GeneratorWord& word,
                           const Rational& coeff) {
    std::vector<OmegaGenerator> factors;
    factors.reserve(word.size());
    for (const auto& [a, b] : word) {
        if (a == b)
            throw InvalidGenerator("w(a,a) is not a generator");
        factors.push_back(OmegaGenerator{std::min(a, b), std::max(a, b)});
    }
    TensorElement out(t.r, t.s);
    residue_terms(t, factors, coeff, out);
    return out;
}

namespace {

struct ResidueKey {
    int r, s, i, k;
    auto operator<=>(const ResidueKey&) const = default;
};

std::mutex residue_mutex;
std::map<ResidueKey, ResidueBlocks> residue_cache;

ResidueBlocks build_residue_blocks(const TreeInsertion& t, int k) {
    const auto& source = moduli_basis(t.n, k);
    ResidueBlocks data;
    data.blocks.resize(k);  // p ranges over 0..k-1
    for (int p = 0; p < k; ++p)
        data.blocks[p].resize(source.size());

    for (std::size_t gamma = 0; gamma < source.size(); ++gamma) {
        TensorElement res = residue(t, source[gamma].underlying);
        // Split into Kunneth blocks and express each over the moduli bases
        // of the factors. The pivot columns of the echelon bases make the
        // coordinates readable entrywise; the full reconstruction check
        // certifies that the residue lies in ker (x) ker.
        std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rational>> block_matrix;
        for (const auto& [key, c] : res.terms()) {
            const int p = key.first.degree();
            const int io = basis_index(t.r, p, key.first);
            const int ii = basis_index(t.s, k - 1 - p, key.second);
            block_matrix[{p, io}][{p, ii}] = c;  // grouped only for iteration below
        }
        for (int p = 0; p < k; ++p) {
            const int q = k - 1 - p;
            const EchelonForm& eo = moduli_matrix(t.r, p);
            const EchelonForm& ei = moduli_matrix(t.s, q);
            // Read the coefficient of m_alpha (x) m_beta at the pivot pair.
            std::vector<std::pair<std::pair<int, int>, Rational>> cell;
            for (int alpha = 0; alpha < eo.rank(); ++alpha) {
                for (int beta = 0; beta < ei.rank(); ++beta) {
                    auto row = block_matrix.find({p, eo.pivots[alpha]});
                    if (row == block_matrix.end())
                        continue;
                    auto entry = row->second.find({p, ei.pivots[beta]});
                    if (entry == row->second.end() || is_zero(entry->second))
                        continue;
                    cell.emplace_back(std::make_pair(alpha, beta), entry->second);
                }
            }
            // Reconstruction check: the block must equal
            // sum cell[(alpha,beta)] m_alpha (x) m_beta exactly.
            TensorElement reconstructed(t.r, t.s);
            for (const auto& [ab, value] : cell)
                reconstructed.add_product(moduli_basis(t.r, p)[ab.first].underlying,
                                          moduli_basis(t.s, q)[ab.second].underlying, value);
            TensorElement actual(t.r, t.s);
            for (const auto& [key, c] : res.terms())
                if (key.first.degree() == p)
                    actual.add_term(key.first, key.second, c);
            if (!(reconstructed == actual))
                throw NotInSpan("residue output is not Delta*-closed in both factors");
            data.blocks[p][gamma] = std::move(cell);
        }
    }
    return data;
}

void check_element(const GravityElementGK& x) {
    if (x.arity == 1) {
        if (x.degree != 0 || x.coords.size() != 1)
            throw Error("arity-1 gravity element must be the unit line in degree 0");
        return;
    }
    if (x.degree < 1)
        throw Error("gravity degree must be at least 1");
    if (static_cast<int>(x.coords.size()) != grav_dim(x.arity, x.degree))
        throw Error("gravity coordinate vector has wrong length");
}

}  // namespace

const ResidueBlocks& residue_blocks(const TreeInsertion& t, int k) {
    ResidueKey key{t.r, t.s, t.i, k};
    std::lock_guard<std::mutex> lock(residue_mutex);
    auto it = residue_cache.find(key);
    if (it == residue_cache.end())
        it = residue_cache.emplace(key, build_residue_blocks(t, k)).first;
    return it->second;
}

GravityElementGK grav_gk_compose(const TreeInsertion& t, const GravityElementGK& x,
                                 const GravityElementGK& y) {
    check_element(x);
    check_element(y);
    if (x.arity != t.r || y.arity != t.s)
        throw AmbientMismatch("composition arities do not match the tree");

    // Unit insertions: the boundary divisor degenerates, the composition is
    // the identity on the other argument.
    if (t.s == 1) {
        GravityElementGK out = x;
        for (Rational& c : out.coords)
            c *= y.coords[0];
        return out;
    }
    if (t.r == 1) {
        GravityElementGK out = y;
        for (Rational& c : out.coords)
            c *= x.coords[0];
        return out;
    }

    const int p = x.degree, q = y.degree;
    const int k = p + q - 1;  // degree of the residue source
    GravityElementGK out;
    out.arity = t.n;
    out.degree = p + q;
    out.coords.assign(grav_dim(t.n, p + q), Rational(0));
    if (out.coords.empty())
        return out;

    const ResidueBlocks& blocks = residue_blocks(t, k);
    const auto& cell_rows = blocks.blocks[p - 1];
    const bool flip = (p - 1) % 2 != 0;  // suspension sign (-1)^{deg x - 1}
    for (std::size_t gamma = 0; gamma < cell_rows.size(); ++gamma) {
        Rational acc(0);
        for (const auto& [ab, value] : cell_rows[gamma]) {
            const Rational& cx = x.coords[ab.first];
            const Rational& cy = y.coords[ab.second];
            if (is_zero(cx) || is_zero(cy))
                continue;
            acc += value * cx * cy;
        }
        out.coords[gamma] = flip ? Rational(-acc) : acc;
    }
    return out;
}

LinearMap gk_structure_matrix(const TreeInsertion& t, int deg_x, int deg_y) {
    const int dim_x = grav_dim(t.r, deg_x);
    const int dim_y = grav_dim(t.s, deg_y);
    const int dim_out = grav_dim(t.n, deg_x + deg_y);
    LinearMap m;
    m.rows = dim_x * dim_y;
    m.cols = dim_out;
    m.source_basis_tag = "grav:n=" + std::to_string(t.n) + ":k=" + std::to_string(deg_x + deg_y);
    m.target_basis_tag = "grav-pairs:r=" + std::to_string(t.r) + ":s=" + std::to_string(t.s) +
                         ":p=" + std::to_string(deg_x) + ":q=" + std::to_string(deg_y);
    for (int a = 0; a < dim_x; ++a) {
        GravityElementGK x{t.r, deg_x, Vec(dim_x, Rational(0))};
        x.coords[a] = 1;
        for (int b = 0; b < dim_y; ++b) {
            GravityElementGK y{t.s, deg_y, Vec(dim_y, Rational(0))};
            y.coords[b] = 1;
            GravityElementGK z = grav_gk_compose(t, x, y);
            for (int col = 0; col < dim_out; ++col)
                if (!is_zero(z.coords[col]))
                    m.add(a * dim_y + b, col, z.coords[col]);
        }
    }
    m.normalize();
    return m;
}

ComparisonReport compare_operads(int max_total_arity) {
    ComparisonReport report;
    report.max_total_arity = max_total_arity;
    for (int r = 1; r <= max_total_arity; ++r) {
        for (int s = 1; r + s - 1 <= max_total_arity; ++s) {
            for (int i = 1; i <= r; ++i) {
                TreeInsertion t = tree_insertion(r, s, i);
                for (int p : grav_degrees(r)) {
                    for (int q : grav_degrees(s)) {
                        if (grav_dim(r, p) == 0 || grav_dim(s, q) == 0)
                            continue;
                        LinearMap w = w_structure_matrix(t, p, q);
                        LinearMap gk = gk_structure_matrix(t, p, q);
                        ComparisonCell cell;
                        cell.r = r;
                        cell.s = s;
                        cell.i = i;
                        cell.deg_x = p;
                        cell.deg_y = q;
                        if (w.entries == gk.entries) {
                            cell.status = "ok";
                        } else {
                            ++report.mismatches;
                            bool uniform_sign = w.entries.size() == gk.entries.size();
                            if (uniform_sign)
                                for (std::size_t e = 0; e < w.entries.size(); ++e)
                                    if (w.entries[e].row != gk.entries[e].row ||
                                        w.entries[e].col != gk.entries[e].col ||
                                        w.entries[e].value != -gk.entries[e].value)
                                        uniform_sign = false;
                            cell.status = uniform_sign ? "uniform-sign" : "mismatch";
                            for (std::size_t e = 0; e < w.entries.size() && cell.detail.empty();
                                 ++e) {
                                if (e >= gk.entries.size() ||
                                    w.entries[e].row != gk.entries[e].row ||
                                    w.entries[e].col != gk.entries[e].col ||
                                    w.entries[e].value != gk.entries[e].value)
                                    cell.detail = "first difference at stored entry " +
                                                  std::to_string(e);
                            }
                            if (cell.detail.empty())
                                cell.detail = "entry lists differ in length";
                        }
                        report.cells.push_back(std::move(cell));
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace gravity

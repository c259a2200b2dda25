#include "gravity/linalg.hpp"

#include <algorithm>
#include <map>

#include "gravity/errors.hpp"

namespace gravity {

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (int j = 0; j < static_cast<int>(v.size()); ++j)
        if (!is_zero(v[j]))
            out.emplace_back(j, v[j]);
    return out;
}

Vec to_dense(const SparseVec& v, int size) {
    Vec out(size, Rational(0));
    for (const auto& [j, c] : v)
        out[j] = c;
    return out;
}

void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (is_zero(c) || src.empty())
        return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i]));
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            ++j;
        } else {
            Rational sum = dst[i].second + c * src[j].second;
            if (!is_zero(sum))
                out.emplace_back(dst[i].first, std::move(sum));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

Rational dot(const SparseVec& a, const Vec& b) {
    Rational acc(0);
    for (const auto& [j, c] : a)
        acc += c * b[j];
    return acc;
}

void LinearMap::add(int r, int c, Rational v) {
    entries.push_back(Entry{r, c, std::move(v)});
}

void LinearMap::normalize() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
            merged.back().value += e.value;
        else
            merged.push_back(std::move(e));
    }
    entries.clear();
    for (auto& e : merged)
        if (!is_zero(e.value))
            entries.push_back(std::move(e));
}

void LinearMap::check_well_formed() const {
    if (rows < 0 || cols < 0)
        throw Error("linear map with negative shape");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const Entry& e = entries[k];
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw Error("linear map entry out of range");
        if (is_zero(e.value))
            throw Error("linear map stores an explicit zero");
        if (k > 0) {
            const Entry& p = entries[k - 1];
            if (p.row > e.row || (p.row == e.row && p.col >= e.col))
                throw Error("linear map entries not sorted");
        }
    }
}

std::vector<SparseVec> LinearMap::row_vectors() const {
    std::vector<SparseVec> out(rows);
    for (const Entry& e : entries)
        out[e.row].emplace_back(e.col, e.value);
    return out;
}

std::vector<SparseVec> LinearMap::col_vectors() const {
    std::vector<SparseVec> out(cols);
    for (const Entry& e : entries)
        out[e.col].emplace_back(e.row, e.value);
    return out;
}

Vec apply_map(const LinearMap& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw Error("apply: vector length does not match column count");
    Vec out(m.rows, Rational(0));
    for (const Entry& e : m.entries)
        out[e.row] += e.value * v[e.col];
    return out;
}

Vec apply_transpose(const LinearMap& m, const Vec& w) {
    if (static_cast<int>(w.size()) != m.rows)
        throw Error("apply_transpose: vector length does not match row count");
    Vec out(m.cols, Rational(0));
    for (const Entry& e : m.entries)
        out[e.col] += e.value * w[e.row];
    return out;
}

Vec EchelonForm::reduce(Vec& v) const {
    Vec coeffs(rows.size(), Rational(0));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const Rational& lead = v[pivots[j]];
        if (is_zero(lead))
            continue;
        coeffs[j] = lead;
        for (const auto& [col, val] : rows[j])
            v[col] -= coeffs[j] * val;
    }
    return coeffs;
}

namespace {

// Forward elimination. Processes columns left to right; among the pending
// rows whose leading entry sits in the current column, the sparsest one
// becomes the pivot (Markowitz-style tie-break, smallest index wins).
// Any strategy yields the same final RREF, so this choice only affects
// fill-in, not output.
void forward_eliminate(std::vector<SparseVec>& pending, int cols,
                       std::vector<SparseVec>& echelon, std::vector<int>& pivots) {
    pending.erase(std::remove_if(pending.begin(), pending.end(),
                                 [](const SparseVec& r) { return r.empty(); }),
                  pending.end());
    for (int col = 0; col < cols && !pending.empty(); ++col) {
        int best = -1;
        for (int r = 0; r < static_cast<int>(pending.size()); ++r) {
            if (pending[r].front().first != col)
                continue;
            if (best < 0 || pending[r].size() < pending[best].size())
                best = r;
        }
        if (best < 0)
            continue;
        SparseVec pivot_row = std::move(pending[best]);
        pending.erase(pending.begin() + best);
        Rational inv = 1 / pivot_row.front().second;
        if (inv != 1)
            for (auto& [c, val] : pivot_row)
                val *= inv;
        std::size_t keep = 0;
        for (std::size_t r = 0; r < pending.size(); ++r) {
            SparseVec& row = pending[r];
            if (row.front().first == col) {
                Rational factor = -row.front().second;
                axpy(row, factor, pivot_row);
            }
            if (!row.empty()) {
                if (keep != r)
                    pending[keep] = std::move(row);
                ++keep;
            }
        }
        pending.resize(keep);
        echelon.push_back(std::move(pivot_row));
        pivots.push_back(col);
    }
}

}  // namespace

EchelonForm rref(std::vector<SparseVec> rows, int cols) {
    EchelonForm e;
    e.cols = cols;
    forward_eliminate(rows, cols, e.rows, e.pivots);
    // Backward pass: clear every pivot column above its pivot row.
    for (int j = static_cast<int>(e.rows.size()) - 1; j >= 0; --j) {
        int pcol = e.pivots[j];
        for (int i = 0; i < j; ++i) {
            SparseVec& row = e.rows[i];
            auto it = std::lower_bound(row.begin(), row.end(), pcol,
                                       [](const auto& ent, int c) { return ent.first < c; });
            if (it != row.end() && it->first == pcol) {
                Rational factor = -it->second;
                axpy(row, factor, e.rows[j]);
            }
        }
    }
    return e;
}

std::vector<Vec> kernel_basis(const LinearMap& m) {
    m.check_well_formed();
    EchelonForm e = rref(m.row_vectors(), m.cols);

    std::vector<bool> is_pivot(m.cols, false);
    for (int p : e.pivots)
        is_pivot[p] = true;

    // One spanning vector per free column, then a second RREF to land on
    // the canonical echelon basis of the kernel subspace.
    std::vector<SparseVec> span;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f])
            continue;
        SparseVec v;
        for (std::size_t j = 0; j < e.rows.size(); ++j) {
            auto it = std::lower_bound(e.rows[j].begin(), e.rows[j].end(), f,
                                       [](const auto& ent, int c) { return ent.first < c; });
            if (it != e.rows[j].end() && it->first == f)
                v.emplace_back(e.pivots[j], -it->second);
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        span.push_back(std::move(v));
    }
    EchelonForm k = rref(std::move(span), m.cols);
    std::vector<Vec> out;
    out.reserve(k.rows.size());
    for (const SparseVec& row : k.rows)
        out.push_back(to_dense(row, m.cols));
    return out;
}

int rank(const LinearMap& m) {
    m.check_well_formed();
    std::vector<SparseVec> rows = m.row_vectors();
    std::vector<SparseVec> echelon;
    std::vector<int> pivots;
    forward_eliminate(rows, m.cols, echelon, pivots);
    return static_cast<int>(echelon.size());
}

Vec coordinates_in_span(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) {
        for (const Rational& c : v)
            if (!is_zero(c))
                throw NotInSpan("nonzero vector against empty basis");
        return {};
    }
    const int cols = static_cast<int>(v.size());
    const int count = static_cast<int>(basis.size());
    // Augment each basis row with a unit tail so the elimination tracks the
    // change of basis: rref([B | I]) = [R | T] with R = T B.
    std::vector<SparseVec> rows;
    rows.reserve(count);
    for (int i = 0; i < count; ++i) {
        if (static_cast<int>(basis[i].size()) != cols)
            throw Error("coordinates_in_span: basis vector of wrong length");
        SparseVec row = to_sparse(basis[i]);
        row.emplace_back(cols + i, Rational(1));
        rows.push_back(std::move(row));
    }
    EchelonForm e = rref(std::move(rows), cols);  // pivots only in the first block
    if (e.rank() != count)
        throw Error("coordinates_in_span: basis rows are linearly dependent");

    Vec ext(cols + count, Rational(0));
    std::copy(v.begin(), v.end(), ext.begin());
    e.reduce(ext);
    for (int j = 0; j < cols; ++j)
        if (!is_zero(ext[j]))
            throw NotInSpan("vector outside the span of the basis");
    Vec coords(count);
    for (int i = 0; i < count; ++i)
        coords[i] = -ext[cols + i];
    return coords;
}

std::vector<Vec> solve_columns(const LinearMap& m, const std::vector<SparseVec>& rhs) {
    m.check_well_formed();
    const int k = static_cast<int>(rhs.size());
    std::vector<SparseVec> rows = m.row_vectors();
    // Append the right-hand sides as extra columns and eliminate over the
    // coefficient block only.
    std::map<int, std::vector<std::pair<int, Rational>>> extra;  // row -> (rhs index, value)
    for (int j = 0; j < k; ++j)
        for (const auto& [r, val] : rhs[j])
            extra[r].emplace_back(j, val);
    for (auto& [r, tail] : extra) {
        if (r < 0 || r >= m.rows)
            throw Error("solve_columns: rhs index out of range");
        for (const auto& [j, val] : tail)
            rows[r].emplace_back(m.cols + j, val);
    }
    EchelonForm e = rref(std::move(rows), m.cols);

    std::vector<Vec> solutions(k, Vec(m.cols, Rational(0)));
    for (std::size_t row = 0; row < e.rows.size(); ++row) {
        int pivot = e.pivots[row];
        for (const auto& [col, val] : e.rows[row])
            if (col >= m.cols)
                solutions[col - m.cols][pivot] = val;
    }
    // Consistency: a zero coefficient row with a nonzero tail has no
    // solution. Such rows were dropped by rref only if entirely zero, so
    // detect them by re-checking the residual of each solution.
    for (int j = 0; j < k; ++j) {
        Vec image = apply_map(m, solutions[j]);
        Vec target = to_dense(rhs[j], m.rows);
        if (image != target)
            throw NotInSpan("solve_columns: inconsistent system");
    }
    return solutions;
}

}  // namespace gravity

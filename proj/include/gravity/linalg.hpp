#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gravity/rational.hpp"

namespace gravity {

using Vec = std::vector<Rational>;

// Sparse vector, entries sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int size);

// dst += c * src
void axpy(SparseVec& dst, const Rational& c, const SparseVec& src);
Rational dot(const SparseVec& a, const Vec& b);

struct Entry {
    int row;
    int col;
    Rational value;

    bool operator==(const Entry& other) const {
        return row == other.row && col == other.col && value == other.value;
    }
};

// Sparse rational matrix tagged with the ordered bases it connects.
// Entries are kept sorted by (row, col) with no explicit zeros.
struct LinearMap {
    int rows = 0;
    int cols = 0;
    std::vector<Entry> entries;
    std::string source_basis_tag;  // indexes the columns
    std::string target_basis_tag;  // indexes the rows

    void add(int r, int c, Rational v);  // accumulate, builder style
    void normalize();                    // sort, merge duplicates, drop zeros
    void check_well_formed() const;      // throws Error on bad shape

    std::vector<SparseVec> row_vectors() const;  // length rows
    std::vector<SparseVec> col_vectors() const;  // length cols (the transpose)
};

Vec apply_map(const LinearMap& m, const Vec& v);            // m * v
Vec apply_transpose(const LinearMap& m, const Vec& w);  // m^T * w

// Reduced row echelon form of a row span. Rows are sorted by pivot column,
// pivots are 1 and their columns are cleared elsewhere; this normal form is
// unique for a given row span, which is what makes every basis produced
// here reproducible byte for byte.
struct EchelonForm {
    int cols = 0;
    std::vector<SparseVec> rows;  // nonzero RREF rows
    std::vector<int> pivots;      // pivot column of each row, strictly ascending

    int rank() const { return static_cast<int>(rows.size()); }

    // Eliminates the pivot columns of `v` in place and returns the
    // coefficient taken from each row. After the call, v == 0 iff the
    // original vector lay in the row span.
    Vec reduce(Vec& v) const;
};

EchelonForm rref(std::vector<SparseVec> rows, int cols);

// Basis of ker(m) in reduced row echelon form (leading entries 1, pivot
// columns ascending). Empty kernel gives an empty list.
std::vector<Vec> kernel_basis(const LinearMap& m);

int rank(const LinearMap& m);

// Coordinates c with sum_j c_j basis_j = v. Requires the basis rows to be
// linearly independent; throws NotInSpan when v lies outside the span.
Vec coordinates_in_span(const Vec& v, const std::vector<Vec>& basis);

// Solves m * x = rhs_j for every column rhs_j of `rhs` (given as a list of
// sparse columns over the row index of m). Every system must be consistent;
// used for Delta*-preimages where consistency is a theorem. Returns dense
// solution vectors.
std::vector<Vec> solve_columns(const LinearMap& m, const std::vector<SparseVec>& rhs);

}  // namespace gravity

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvmod/rational.hpp"

namespace curvmod {

// Sparse vector keyed by index; zero values are never stored.
using SparseVec = std::map<int, Rational>;

// Immutable-by-convention exact rational sparse matrix, row major.
// Invariants: no stored zero entry, indices in bounds, entries within a row
// sorted by column.
class SparseMatrix {
public:
    using Entry = std::pair<int, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrix() : nrows_(0), ncols_(0) {}
    SparseMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

    static SparseMatrix identity(int n);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    std::int64_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    const Row& row(int i) const { return rows_[i]; }
    Rational at(int i, int j) const;

    // Structural mutation used by builders; callers keep the invariants.
    void set_row(int i, Row r) { rows_[i] = std::move(r); }

    bool operator==(const SparseMatrix& o) const {
        return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
    }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& c) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix vstack(const SparseMatrix& below) const;

    // Submatrix with the listed rows/columns reindexed to 0..k-1 in list order.
    SparseMatrix select_rows(const std::vector<int>& rows) const;
    SparseMatrix select_columns(const std::vector<int>& cols) const;

    SparseVec apply(const SparseVec& v) const;

    // Text export, bit exact: "nrows ncols nnz\n" then "i j num/den\n" per
    // entry, 1-based, row major then column, LF endings.
    std::string to_text() const;
    static SparseMatrix from_text(const std::string& text);

private:
    int nrows_, ncols_;
    std::vector<Row> rows_;
};

// Accumulating builder; duplicate (i,j) adds are summed, zeros dropped.
class SparseMatrixBuilder {
public:
    SparseMatrixBuilder(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}
    void add(int i, int j, const Rational& v);
    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    SparseMatrix build() const;

private:
    int nrows_, ncols_;
    std::vector<std::map<int, Rational>> rows_;
};

// Canonical basis of a subspace: rows of `vectors` are in reduced row echelon
// form with pivot columns strictly increasing.
struct SubspaceBasis {
    int ambient_dim = 0;
    SparseMatrix vectors;
    int size() const { return vectors.nrows(); }
    bool operator==(const SubspaceBasis& o) const {
        return ambient_dim == o.ambient_dim && vectors == o.vectors;
    }
};

struct RrefResult {
    int rank = 0;
    std::vector<int> pivot_cols; // increasing
    SparseMatrix rref;           // rank rows, sorted by pivot column
};

int rank(const SparseMatrix& m);
RrefResult rref(const SparseMatrix& m);
SubspaceBasis kernel_basis(const SparseMatrix& m);

// Canonical basis of the row space (rref rows). For a column space, pass the
// transpose.
SubspaceBasis row_space_basis(const SparseMatrix& m);

// Rank of m reduced mod p. A lower bound for the rational rank; throws
// BadPrime if p divides a stored denominator. p must be an odd prime < 2^31
// (not verified for primality).
int modular_rank(const SparseMatrix& m, std::uint64_t p);

} // namespace curvmod

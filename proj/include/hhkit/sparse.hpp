#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hhkit/scalar.hpp"

namespace hhkit {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, int n);
void vec_axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
bool vec_is_zero(const Vec& v);

// Sparse matrix over an exact field.  Rows are sorted (column, value) lists.
// Elimination walks columns left to right, picking within each head bucket
// the sparsest row, so echelon output is deterministic and kernel bases come
// out in reduced echelon form.
class SparseMatrix {
  public:
    SparseMatrix(Field f, int rows, int cols) : f_(f), rows_(rows), cols_(cols), data_(rows) {}

    Field field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void add(int i, int j, const Scalar& v);
    long long nonzeros() const;

    Vec apply(const Vec& x) const;           // M x
    Vec apply_transpose(const Vec& y) const; // M^T y
    // Per-column sorted (row, value) lists.
    std::vector<std::vector<std::pair<int, Scalar>>> col_lists() const;

    int rank() const;
    // Canonical kernel basis: one vector per free column, entry 1 at the free
    // column, pivot entries filled from the reduced echelon form.
    std::vector<Vec> kernel_basis() const;
    // One solution of M x = b, free variables set to zero; nullopt if none.
    std::optional<Vec> solve(const Vec& b) const;

  private:
    struct Elim;
    Field f_;
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, Scalar>>> data_;
    mutable bool normalized_ = true;
    void normalize() const;
};

// Incremental reduced-echelon accumulator.  Optionally tracks how each stored
// row combines the inserted vectors, so members of the span can be expressed
// in terms of the original generators.
class Echelon {
  public:
    Echelon(Field f, int n, bool track = false) : f_(f), n_(n), track_(track) {}

    // Returns true when the vector enlarged the span.
    bool add(const Vec& v);
    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const Vec& v) const;
    // Coefficients over the inserted vectors for a member of the span
    // (requires tracking); nullopt if v is outside the span.
    std::optional<Vec> coordinates(const Vec& v) const;
    // Canonical basis of the span (reduced echelon rows, pivot order).
    const std::vector<Vec>& basis() const { return rows_; }

  private:
    Vec reduce(Vec v, Vec* combo) const;
    Field f_;
    int n_;
    bool track_;
    int inserted_ = 0;
    std::vector<Vec> rows_;    // reduced rows, increasing pivot
    std::vector<int> pivots_;  // pivot column per row
    std::vector<Vec> combos_;  // row = sum combo[i] * inserted[i]
};

}  // namespace hhkit

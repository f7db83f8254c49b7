// Small exact dense linear algebra: rational Gaussian elimination, Bareiss
// fraction-free determinants, and mod-2 / mod-p matrices with kernel and
// image-membership queries.  Sizes here are tiny for the plumbing side and
// moderate (a few 10^4 rows) for the F2 solver paths, so everything is dense.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latroot/errors.hpp"
#include "latroot/numeric.hpp"

namespace latroot {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) determinant of a square integer matrix.
Int det_bareiss(IntMatrix a);

// Determinant via rational Gaussian elimination; independent of det_bareiss.
Rat det_gauss(RatMatrix a);

// Solve a*x = b exactly.  Throws InvariantViolation if a is singular.
std::vector<Rat> solve_rational(RatMatrix a, std::vector<Rat> b);

// Leading principal minors of a, computed fraction-free.
std::vector<Int> leading_principal_minors(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Dense F2 matrices with packed 64-bit rows.

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return nrows_; }
    std::size_t cols() const { return ncols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void xor_row(std::size_t dst, std::size_t src);

    // In-place row echelon; returns rank.  Column order is left-to-right, so
    // repeated runs of the same matrix produce identical pivot choices.
    std::size_t eliminate();

    std::size_t rank() const;  // on a copy

    // Basis of the right kernel (as column index sets).
    std::vector<std::vector<std::size_t>> kernel_basis() const;

private:
    std::size_t nrows_ = 0, ncols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

// Row-space membership tool: feed rows one by one, query whether a new row is
// spanned by what has been fed so far.
class F2RowSpace {
public:
    explicit F2RowSpace(std::size_t cols);
    // Reduces v against the basis; if nonzero remains, inserts it and returns
    // true (v enlarged the space).
    bool insert(std::vector<std::uint64_t> v);
    bool contains(std::vector<std::uint64_t> v) const;
    std::size_t dim() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

private:
    void reduce(std::vector<std::uint64_t>& v) const;
    std::size_t cols_, words_;
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> pivots_;  // (pivot col, row)
};

// ---------------------------------------------------------------------------
// Dense matrices over F_p for small odd p (and p = 2 when convenient).

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const { return nrows_; }
    std::size_t cols() const { return ncols_; }
    std::uint32_t p() const { return p_; }

    std::uint32_t get(std::size_t r, std::size_t c) const { return data_[r * ncols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * ncols_ + c] = v % p_; }
    void add_at(std::size_t r, std::size_t c, std::int64_t v);

    std::size_t rank() const;

    // Basis of the right kernel as dense rows.
    std::vector<std::vector<std::uint32_t>> kernel_basis() const;

private:
    std::size_t nrows_ = 0, ncols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

// Incremental row space over F_p (same contract as F2RowSpace, dense rows).
class FpRowSpace {
public:
    FpRowSpace(std::size_t cols, std::uint32_t p);
    bool insert(std::vector<std::uint32_t> v);
    bool contains(std::vector<std::uint32_t> v) const;
    std::size_t dim() const { return pivots_.size(); }

private:
    void reduce(std::vector<std::uint32_t>& v) const;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> pivots_;
};

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace latroot

#pragma once

#include <gmpxx.h>

#include <cassert>
#include <vector>

namespace gentle {

using Int = mpz_class;

/* Dense matrix with exact integer entries. All elimination is exact: ranks use
   fraction-free Bareiss elimination, kernels are returned as primitive integer
   column bases. Sizes in this project stay small (a few hundred at most). */
class IMat {
  public:
    IMat() : rows_(0), cols_(0) {}
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[size_t(r) * cols_ + c];
    }
    const Int& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[size_t(r) * cols_ + c];
    }

    static IMat identity(int n);

    bool is_zero() const;
    bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IMat transposed() const;

    /* columns [c0, c1) as a new matrix */
    IMat col_slice(int c0, int c1) const;

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

IMat matmul(const IMat& a, const IMat& b);

/* horizontal concatenation; all blocks must share the row count */
IMat hstack(const std::vector<IMat>& blocks, int rows_if_empty);

/* rank by fraction-free Bareiss elimination */
int rank(const IMat& m);

/* columns form a primitive integer basis of the right kernel {x : m x = 0} */
IMat kernel_basis(const IMat& m);

/* Incremental column span with exact arithmetic. add() reports whether the
   column enlarged the span. */
class SpanBuilder {
  public:
    explicit SpanBuilder(int dim) : dim_(dim) {}

    bool add(const std::vector<mpq_class>& col);
    bool add_int(const IMat& m, int col);

    int rank() const { return int(rows_.size()); }
    bool contains(const std::vector<mpq_class>& col) const;

  private:
    /* reduced rows of the span, each with a pivot position */
    int dim_;
    std::vector<std::vector<mpq_class>> rows_;
    std::vector<int> pivots_;

    std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;
};

}  // namespace gentle

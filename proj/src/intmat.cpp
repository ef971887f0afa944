#include "gentle/intmat.hpp"

#include <algorithm>
#include <numeric>

namespace gentle {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

IMat IMat::transposed() const {
    IMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IMat IMat::col_slice(int c0, int c1) const {
    assert(0 <= c0 && c0 <= c1 && c1 <= cols_);
    IMat s(rows_, c1 - c0);
    for (int r = 0; r < rows_; ++r)
        for (int c = c0; c < c1; ++c) s.at(r, c - c0) = at(r, c);
    return s;
}

IMat matmul(const IMat& a, const IMat& b) {
    assert(a.cols() == b.rows());
    IMat p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) p.at(i, j) += aik * b.at(k, j);
        }
    return p;
}

IMat hstack(const std::vector<IMat>& blocks, int rows_if_empty) {
    int rows = rows_if_empty;
    int cols = 0;
    for (const IMat& b : blocks) {
        if (b.cols() > 0 || b.rows() > 0) rows = b.rows();
        cols += b.cols();
    }
    IMat m(rows, cols);
    int off = 0;
    for (const IMat& b : blocks) {
        assert(b.cols() == 0 || b.rows() == rows);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) m.at(r, off + c) = b.at(r, c);
        off += b.cols();
    }
    return m;
}

namespace {

/* Fraction-free Bareiss echelon. Returns pivot columns; `m` is reduced in
   place to an upper echelon form with exact integer entries. */
std::vector<int> bareiss_echelon(IMat& m) {
    std::vector<int> pivot_cols;
    Int prev(1);
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            for (int j = c + 1; j < m.cols(); ++j) {
                Int v = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = v;
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int rank(const IMat& m) {
    IMat work = m;
    return int(bareiss_echelon(work).size());
}

IMat kernel_basis(const IMat& m) {
    IMat ech = m;
    std::vector<int> pivot_cols = bareiss_echelon(ech);
    int rk = int(pivot_cols.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivot_cols) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    IMat ker(m.cols(), int(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        std::vector<mpq_class> x(m.cols(), mpq_class(0));
        x[free_cols[k]] = 1;
        for (int r = rk - 1; r >= 0; --r) {
            int pc = pivot_cols[r];
            mpq_class s(0);
            for (int j = pc + 1; j < m.cols(); ++j)
                if (x[j] != 0 && ech.at(r, j) != 0) s += mpq_class(ech.at(r, j)) * x[j];
            x[pc] = -s / mpq_class(ech.at(r, pc));
        }
        Int den(1);
        for (int j = 0; j < m.cols(); ++j) den = lcm(den, x[j].get_den());
        Int g(0);
        std::vector<Int> v(m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            v[j] = x[j].get_num() * (den / x[j].get_den());
            g = gcd(g, v[j]);
        }
        if (g == 0) g = 1;
        for (int j = 0; j < m.cols(); ++j) ker.at(j, int(k)) = v[j] / g;
    }
    return ker;
}

std::vector<mpq_class> SpanBuilder::reduce(std::vector<mpq_class> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const mpq_class& coeff = v[pivots_[i]];
        if (coeff == 0) continue;
        mpq_class f = coeff;  /* rows are normalized to pivot 1 */
        for (int j = 0; j < dim_; ++j)
            if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool SpanBuilder::add(const std::vector<mpq_class>& col) {
    assert(int(col.size()) == dim_);
    std::vector<mpq_class> v = reduce(col);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    mpq_class inv = v[piv];
    for (int j = 0; j < dim_; ++j) v[j] /= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool SpanBuilder::add_int(const IMat& m, int col) {
    std::vector<mpq_class> v(dim_);
    assert(m.rows() == dim_);
    for (int r = 0; r < dim_; ++r) v[r] = mpq_class(m.at(r, col));
    return add(v);
}

bool SpanBuilder::contains(const std::vector<mpq_class>& col) const {
    std::vector<mpq_class> v = reduce(col);
    for (const mpq_class& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace gentle

#include "filtrep/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace filtrep {

Matrix::Matrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

Matrix::Matrix(FieldSpec field, int rows, int cols, std::vector<Rational> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw shape_error("entry count does not match matrix shape");
    for (auto& e : entries_) e = field_.normalize(e);
}

Matrix Matrix::identity(FieldSpec field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

Matrix Matrix::zero(FieldSpec field, int rows, int cols) {
    return Matrix(field, rows, cols);
}

Matrix Matrix::from_ints(FieldSpec field, int rows, int cols,
                         std::initializer_list<long long> vals) {
    std::vector<Rational> e;
    e.reserve(vals.size());
    for (long long v : vals) e.emplace_back(v);
    return Matrix(field, rows, cols, std::move(e));
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && entries_ == other.entries_;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& e) { return e == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::mul(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw shape_error("matrix product shape mismatch");
    if (!(field_ == rhs.field_)) throw shape_error("matrix product field mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (b == 0) continue;
                out.entries_[i * rhs.cols_ + j] += a * b;
            }
        }
    for (auto& e : out.entries_) e = field_.normalize(e);
    return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(field_ == rhs.field_))
        throw shape_error("matrix sum shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = field_.add(entries_[i], rhs.entries_[i]);
    return out;
}

Matrix Matrix::sub(const Matrix& rhs) const { return add(rhs.negated()); }

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = field_.mul(e, c);
    return out;
}

Matrix Matrix::negated() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = field_.neg(e);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::col(int j) const { return cols_selected({j}); }

Matrix Matrix::cols_selected(const std::vector<int>& idx) const {
    Matrix out(field_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            out.set(i, static_cast<int>(j), at(i, idx[j]));
    return out;
}

Matrix Matrix::submatrix(int r0, int c0, int nr, int nc) const {
    Matrix out(field_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out.set(i, j, at(r0 + i, c0 + j));
    return out;
}

bool Matrix::lex_less(const Matrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != other.entries_[i]) return entries_[i] < other.entries_[i];
    }
    return false;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || !(a.field() == b.field()))
        throw shape_error("hstack shape mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field()))
        throw shape_error("vstack shape mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

Matrix dsum(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            out.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return out;
}

Rref rref(const Matrix& m) {
    Rref out;
    out.reduced = m;
    Matrix& r = out.reduced;
    const FieldSpec& f = m.field();
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) {
                Rational tmp = r.at(row, j);
                r.set(row, j, r.at(piv, j));
                r.set(piv, j, tmp);
            }
        Rational inv = f.inv(r.at(row, col));
        for (int j = col; j < m.cols(); ++j) r.set(row, j, f.mul(r.at(row, j), inv));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Rational c = r.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < m.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(row, j))));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

RankKernelImage rank_kernel_image(const Matrix& m) {
    Rref r = rref(m);
    RankKernelImage out;
    out.rank = r.rank;
    out.image_basis = m.cols_selected(r.pivots);

    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (p < r.pivots.size() && r.pivots[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    Matrix kernel(m.field(), m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        kernel.set(fc, static_cast<int>(k), Rational(1));
        for (size_t p = 0; p < r.pivots.size(); ++p)
            kernel.set(r.pivots[p], static_cast<int>(k),
                       m.field().neg(r.reduced.at(static_cast<int>(p), fc)));
    }
    out.kernel_basis = kernel;
    return out;
}

int rank_of(const Matrix& m) { return rref(m).rank; }

namespace {

Rational det_prime_field(const Matrix& m) {
    const FieldSpec& f = m.field();
    Matrix a = m;
    Rational result(1);
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                Rational tmp = a.at(col, j);
                a.set(col, j, a.at(piv, j));
                a.set(piv, j, tmp);
            }
            result = f.neg(result);
        }
        result = f.mul(result, a.at(col, col));
        Rational inv = f.inv(a.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            Rational c = f.mul(a.at(i, col), inv);
            if (c == 0) continue;
            for (int j = col; j < n; ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(c, a.at(col, j))));
        }
    }
    return result;
}

Rational det_rational(const Matrix& m) {
    // Clear denominators per row, then Bareiss fraction-free elimination.
    int n = m.rows();
    std::vector<Integer> a(static_cast<size_t>(n) * n);
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, denominator(m.at(i, j)));
        scale *= Rational(1, l);
        for (int j = 0; j < n; ++j) {
            Rational e = m.at(i, j) * l;
            a[static_cast<size_t>(i) * n + j] = numerator(e);
        }
    }
    Integer prev = 1;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[static_cast<size_t>(i) * n + col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(col) * n + j],
                          a[static_cast<size_t>(piv) * n + j]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                Integer num = a[static_cast<size_t>(col) * n + col] *
                                  a[static_cast<size_t>(i) * n + j] -
                              a[static_cast<size_t>(i) * n + col] *
                                  a[static_cast<size_t>(col) * n + j];
                a[static_cast<size_t>(i) * n + j] = num / prev;  // exact division
            }
            a[static_cast<size_t>(i) * n + col] = 0;
        }
        prev = a[static_cast<size_t>(col) * n + col];
    }
    Rational d(a[static_cast<size_t>(n - 1) * n + (n - 1)]);
    if (sign < 0) d = -d;
    return d * scale;
}

}  // namespace

Rational det(const Matrix& m) {
    if (m.rows() != m.cols())
        throw shape_error("determinant of non-square matrix (" +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    if (m.rows() == 0) return Rational(1);
    if (m.field().is_prime_field()) return det_prime_field(m);
    return det_rational(m);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw shape_error("solve: row counts differ");
    Rref r = rref(hstack(m, b));
    // inconsistent iff a pivot lands in the b-part
    for (int p : r.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.field(), m.cols(), b.cols());
    for (size_t pr = 0; pr < r.pivots.size(); ++pr)
        for (int j = 0; j < b.cols(); ++j)
            x.set(r.pivots[pr], j, r.reduced.at(static_cast<int>(pr), m.cols() + j));
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw shape_error("inverse of non-square matrix");
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x) return std::nullopt;
    if (rank_of(m) != m.rows()) return std::nullopt;
    return x;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank_of(m) == m.rows();
}

bool is_full_column_rank(const Matrix& m) { return rank_of(m) == m.cols(); }

bool span_contains(const Matrix& basis, const Matrix& w) {
    if (w.cols() == 0) return true;
    return rank_of(basis) == rank_of(hstack(basis, w));
}

Matrix column_reduce(const Matrix& m) {
    Rref r = rref(m.transposed());
    // keep only the nonzero rows, transposed back to columns
    Matrix rows = r.reduced.submatrix(0, 0, r.rank, m.rows());
    return rows.transposed();
}

Matrix span_intersection(const Matrix& a, const Matrix& b) {
    // x in span(a) cap span(b): solve [a | -b] (u,v)^T = 0, read off a*u.
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.field(), a.rows(), 0);
    auto k = rank_kernel_image(hstack(a, b.negated())).kernel_basis;
    Matrix u = k.submatrix(0, 0, a.cols(), k.cols());
    return column_reduce(a.mul(u));
}

Matrix extend_to_full_basis(const Matrix& basis) {
    // columns of the identity completing span(basis) to the full space
    const int n = basis.rows();
    Matrix cur = basis;
    std::vector<int> added;
    for (int j = 0; j < n && rank_of(cur) < n; ++j) {
        Matrix e(basis.field(), n, 1);
        e.set(j, 0, Rational(1));
        if (!span_contains(cur, e)) {
            cur = hstack(cur, e);
            added.push_back(j);
        }
    }
    Matrix out(basis.field(), n, static_cast<int>(added.size()));
    for (size_t k = 0; k < added.size(); ++k) out.set(added[k], static_cast<int>(k), Rational(1));
    return out;
}

}  // namespace filtrep

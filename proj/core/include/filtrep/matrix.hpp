#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "filtrep/field.hpp"

namespace filtrep {

/// Exact dense matrix over Q or F_p, row-major. Values are immutable in
/// practice: every operation returns a fresh matrix.
class Matrix {
public:
    Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    Matrix(FieldSpec field, int rows, int cols);
    Matrix(FieldSpec field, int rows, int cols, std::vector<Rational> entries);

    static Matrix identity(FieldSpec field, int n);
    static Matrix zero(FieldSpec field, int rows, int cols);
    /// Row-major integer initializer, mostly for tests.
    static Matrix from_ints(FieldSpec field, int rows, int cols,
                            std::initializer_list<long long> vals);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Rational& at(int i, int j) const { return entries_[i * cols_ + j]; }
    void set(int i, int j, const Rational& v) {
        entries_[i * cols_ + j] = field_.normalize(v);
    }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const Matrix& other) const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix mul(const Matrix& rhs) const;
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix scaled(const Rational& c) const;
    Matrix negated() const;
    Matrix transposed() const;

    Matrix col(int j) const;
    Matrix cols_selected(const std::vector<int>& idx) const;
    Matrix submatrix(int r0, int c0, int nr, int nc) const;

    /// Strict total order on same-shape matrices (lexicographic on entries);
    /// used for canonical tie-breaking.
    bool lex_less(const Matrix& other) const;

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Rational> entries_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal stack.
Matrix dsum(const Matrix& a, const Matrix& b);

struct RankKernelImage {
    int rank = 0;
    Matrix kernel_basis;  // cols x nullity, exact: m * k = 0
    Matrix image_basis;   // rows x rank, the pivot columns of m
};

struct Rref {
    int rank = 0;
    std::vector<int> pivots;  // pivot column per pivot row
    Matrix reduced;           // reduced row echelon form
};

/// Exact Gauss-Jordan with exact pivoting (first nonzero pivot).
Rref rref(const Matrix& m);

RankKernelImage rank_kernel_image(const Matrix& m);
int rank_of(const Matrix& m);

/// Exact determinant. F_p: elimination mod p. Q: fraction-free Bareiss on the
/// denominator-cleared integer matrix. det of 0x0 is 1.
Rational det(const Matrix& m);

/// One exact solution of m x = b (free variables set to 0), or nullopt when
/// the system is inconsistent. b may have several columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
bool is_full_column_rank(const Matrix& m);

/// True when every column of w lies in the column span of basis.
bool span_contains(const Matrix& basis, const Matrix& w);

/// Canonical basis of the column space: reduced column echelon form. Two
/// matrices span the same subspace iff their canonical forms are equal.
Matrix column_reduce(const Matrix& m);

/// Basis of the intersection of two column spans.
Matrix span_intersection(const Matrix& a, const Matrix& b);

/// Columns of `ambient_complement` extending span(basis) to the full space.
Matrix extend_to_full_basis(const Matrix& basis);

}  // namespace filtrep

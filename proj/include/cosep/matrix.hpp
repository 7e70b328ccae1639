#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cosep/field.hpp"

namespace cosep {

using Vector = std::vector<Scalar>;

struct Entry {
    std::size_t col;
    Scalar value;
};

using SparseRow = std::vector<Entry>;

/// An exact matrix over a Field.
///
/// Storage is row-compressed (each row keeps its nonzero entries sorted by
/// column); the interface is that of a dense matrix. Maps act on column
/// vectors, so a map V -> W is a dim(W) x dim(V) matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
    static Matrix identity(Field field, std::size_t n);
    static Matrix from_dense(Field field, const std::vector<Vector>& rows);
    static Matrix from_strings(Field field, std::initializer_list<std::initializer_list<const char*>> rows);
    static Matrix column_vector(Field field, const Vector& v);
    /// Builds the matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept;

    Scalar at(std::size_t i, std::size_t j) const;
    const SparseRow& row(std::size_t i) const { return data_[i]; }
    Vector dense_row(std::size_t i) const;
    Vector column(std::size_t j) const;

    /// Overwrites entry (i, j); the value is normalized into the field.
    void set(std::size_t i, std::size_t j, const Scalar& v);
    /// Replaces a whole row; entries must be sorted, nonzero and in range.
    void set_row(std::size_t i, SparseRow row);

    bool is_zero() const noexcept;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix negated() const;
    Matrix scaled(const Scalar& c) const;
    /// Rows [r0, r0+nr) x columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
    /// Keeps the listed rows in the given order.
    Matrix select_rows(const std::vector<std::size_t>& rows) const;

    std::vector<Vector> to_dense() const;
    std::string to_string() const;

    Vector apply(const Vector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseRow> data_;
};

/// Tensor product of maps on left-factor-major coordinates.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);

/// Row-major vectorization of a map: index i * cols + j.
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Field& field, const Vector& v, std::size_t rows, std::size_t cols);

bool is_zero(const Vector& v);
Vector add(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, const Scalar& c, const Vector& a);
Scalar dot(const Field& f, const Vector& a, const Vector& b);

/// Checks that every operand lives over the same field.
void require_same_field(const Matrix& a, const Matrix& b, const char* where);
void require_shape(bool ok, const std::string& what);

}  // namespace cosep

#include "cosep/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cosep/error.hpp"

namespace cosep {

namespace {

// Dense scatter buffer reused while accumulating one output row.
class RowAccumulator {
public:
    RowAccumulator(const Field& field, std::size_t width)
        : field_(field), values_(width), touched_(width, 0) {}

    void add(std::size_t col, const Scalar& v) {
        if (!touched_[col]) {
            touched_[col] = 1;
            cols_.push_back(col);
            values_[col] = v;
        } else {
            values_[col] = field_.add(values_[col], v);
        }
    }

    SparseRow flush() {
        std::sort(cols_.begin(), cols_.end());
        SparseRow out;
        out.reserve(cols_.size());
        for (std::size_t c : cols_) {
            if (values_[c] != 0) out.push_back({c, values_[c]});
            touched_[c] = 0;
        }
        cols_.clear();
        return out;
    }

private:
    const Field& field_;
    std::vector<Scalar> values_;
    std::vector<char> touched_;
    std::vector<std::size_t> cols_;
};

}  // namespace

void require_same_field(const Matrix& a, const Matrix& b, const char* where) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::DomainMismatch, std::string(where) + ": operands over different fields");
    }
}

void require_shape(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
    return m;
}

Matrix Matrix::from_dense(Field field, const std::vector<Vector>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_shape(rows[i].size() == nc, "from_dense: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) {
            Scalar v = field.normalize(rows[i][j]);
            if (v != 0) m.data_[i].push_back({j, v});
        }
    }
    return m;
}

Matrix Matrix::from_strings(Field field, std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<Vector> dense;
    for (const auto& r : rows) {
        Vector v;
        for (const char* s : r) v.push_back(field.parse(s));
        dense.push_back(std::move(v));
    }
    return from_dense(field, dense);
}

Matrix Matrix::column_vector(Field field, const Vector& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) m.data_[i].push_back({0, field.normalize(v[i])});
    }
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require_shape(columns[j].size() == rows, "from_columns: column length");
        for (std::size_t i = 0; i < rows; ++i) {
            if (columns[j][i] != 0) m.data_[i].push_back({j, field.normalize(columns[j][i])});
        }
    }
    return m;
}

std::size_t Matrix::nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->value;
    return Scalar(0);
}

Vector Matrix::dense_row(std::size_t i) const {
    Vector v(cols_);
    for (const auto& e : data_.at(i)) v[e.col] = e.value;
    return v;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
    require_shape(i < rows_ && j < cols_, "Matrix::set out of range");
    Scalar v = field_.normalize(value);
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
        if (v == 0) {
            r.erase(it);
        } else {
            it->value = v;
        }
    } else if (v != 0) {
        r.insert(it, Entry{j, v});
    }
}

void Matrix::set_row(std::size_t i, SparseRow row) {
    require_shape(i < rows_, "Matrix::set_row out of range");
    data_[i] = std::move(row);
}

bool Matrix::is_zero() const noexcept {
    for (const auto& r : data_) {
        if (!r.empty()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (data_[i].size() != 1 || data_[i][0].col != i || data_[i][0].value != 1) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
    }
    return t;
}

Matrix Matrix::negated() const {
    Matrix m = *this;
    for (auto& r : m.data_) {
        for (auto& e : r) e.value = field_.neg(e.value);
    }
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Scalar cn = field_.normalize(c);
    if (cn == 0) return Matrix(field_, rows_, cols_);
    Matrix m = *this;
    for (auto& r : m.data_) {
        for (auto& e : r) e.value = field_.mul(e.value, cn);
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    require_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "Matrix::block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (const auto& e : data_[r0 + i]) {
            if (e.col >= c0 && e.col < c0 + nc) m.data_[i].push_back({e.col - c0, e.value});
        }
    }
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix m(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) m.data_[i] = data_.at(rows[i]);
    return m;
}

std::vector<Vector> Matrix::to_dense() const {
    std::vector<Vector> out(rows_, Vector(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : data_[i]) out[i][e.col] = e.value;
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.format(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

Vector Matrix::apply(const Vector& v) const {
    require_shape(v.size() == cols_, "Matrix::apply: vector length");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc(0);
        for (const auto& e : data_[i]) {
            if (v[e.col] != 0) acc = field_.add(acc, field_.mul(e.value, v[e.col]));
        }
        out[i] = acc;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "multiply");
    require_shape(a.cols_ == b.rows_, "multiply: inner dimensions " + std::to_string(a.cols_) + " vs " +
                                          std::to_string(b.rows_));
    Matrix out(a.field_, a.rows_, b.cols_);
    RowAccumulator acc(a.field_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto& ra = a.data_[i];
        if (ra.empty()) continue;
        for (const auto& ea : ra) {
            for (const auto& eb : b.data_[ea.col]) acc.add(eb.col, a.field_.mul(ea.value, eb.value));
        }
        out.data_[i] = acc.flush();
    }
    return out;
}

namespace {

SparseRow merge_rows(const Field& f, const SparseRow& x, const SparseRow& y, bool subtract) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].col < x[i].col) {
            out.push_back({y[j].col, subtract ? f.neg(y[j].value) : y[j].value});
            ++j;
        } else {
            Scalar v = subtract ? f.sub(x[i].value, y[j].value) : f.add(x[i].value, y[j].value);
            if (v != 0) out.push_back({x[i].col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "add");
    require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "add: shapes differ");
    Matrix out(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) out.data_[i] = merge_rows(a.field_, a.data_[i], b.data_[i], false);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "subtract");
    require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "subtract: shapes differ");
    Matrix out(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) out.data_[i] = merge_rows(a.field_, a.data_[i], b.data_[i], true);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto& x = a.data_[i];
        const auto& y = b.data_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k].col != y[k].col || x[k].value != y[k].value) return false;
        }
    }
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "kron");
    const Field& f = a.field();
    Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto& ra = a.row(i);
        if (ra.empty()) continue;
        for (std::size_t k = 0; k < b.rows(); ++k) {
            const auto& rb = b.row(k);
            if (rb.empty()) continue;
            SparseRow r;
            r.reserve(ra.size() * rb.size());
            for (const auto& ea : ra) {
                for (const auto& eb : rb) r.push_back({ea.col * b.cols() + eb.col, f.mul(ea.value, eb.value)});
            }
            out.set_row(i * b.rows() + k, std::move(r));
        }
    }
    return out;
}

Matrix kron(const std::vector<Matrix>& factors) {
    require_shape(!factors.empty(), "kron of an empty list");
    Matrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    require_shape(!blocks.empty(), "vstack of an empty list");
    std::size_t nc = blocks.front().cols();
    std::size_t nr = 0;
    for (const auto& b : blocks) {
        require_shape(b.cols() == nc, "vstack: column counts differ");
        require_same_field(blocks.front(), b, "vstack");
        nr += b.rows();
    }
    Matrix out(blocks.front().field(), nr, nc);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) out.set_row(r++, b.row(i));
    }
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    require_shape(!blocks.empty(), "hstack of an empty list");
    std::size_t nr = blocks.front().rows();
    std::size_t nc = 0;
    for (const auto& b : blocks) {
        require_shape(b.rows() == nr, "hstack: row counts differ");
        require_same_field(blocks.front(), b, "hstack");
        nc += b.cols();
    }
    Matrix out(blocks.front().field(), nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        SparseRow r;
        std::size_t offset = 0;
        for (const auto& b : blocks) {
            for (const auto& e : b.row(i)) r.push_back({e.col + offset, e.value});
            offset += b.cols();
        }
        out.set_row(i, std::move(r));
    }
    return out;
}

Vector vectorize(const Matrix& m) {
    Vector v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& e : m.row(i)) v[i * m.cols() + e.col] = e.value;
    }
    return v;
}

Matrix unvectorize(const Field& field, const Vector& v, std::size_t rows, std::size_t cols) {
    require_shape(v.size() == rows * cols, "unvectorize: length mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        SparseRow r;
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[i * cols + j] != 0) r.push_back({j, field.normalize(v[i * cols + j])});
        }
        m.set_row(i, std::move(r));
    }
    return m;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vector add(const Field& f, const Vector& a, const Vector& b) {
    require_shape(a.size() == b.size(), "vector add: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vector scale(const Field& f, const Scalar& c, const Vector& a) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

Scalar dot(const Field& f, const Vector& a, const Vector& b) {
    require_shape(a.size() == b.size(), "dot: length mismatch");
    Scalar acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
    }
    return acc;
}

}  // namespace cosep

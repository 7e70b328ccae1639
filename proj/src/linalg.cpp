#include "cosep/linalg.hpp"

#include <algorithm>
#include <map>

#include "cosep/error.hpp"

namespace cosep {

namespace {

// Incremental sparse Gauss-Jordan elimination.
class Eliminator {
public:
    Eliminator(Field field, std::size_t cols) : field_(std::move(field)), pivot_of_col_(cols, -1) {}

    SparseRow reduce(const SparseRow& row) const {
        std::map<std::size_t, Scalar> w;
        for (const auto& e : row) w.emplace(e.col, e.value);
        auto it = w.begin();
        while (it != w.end()) {
            long p = pivot_of_col_[it->first];
            if (p < 0) {
                ++it;
                continue;
            }
            std::size_t col = it->first;
            Scalar c = it->second;
            w.erase(it);
            const SparseRow& pr = rows_[static_cast<std::size_t>(p)];
            for (std::size_t k = 1; k < pr.size(); ++k) {
                auto [slot, inserted] = w.try_emplace(pr[k].col, Scalar(0));
                slot->second = field_.sub(slot->second, field_.mul(c, pr[k].value));
                if (slot->second == 0) w.erase(slot);
            }
            it = w.upper_bound(col);
        }
        SparseRow out;
        out.reserve(w.size());
        for (auto& [col, v] : w) out.push_back({col, v});
        return out;
    }

    /// Returns true when the row was independent of the current pivots.
    bool add(const SparseRow& row) {
        SparseRow r = reduce(row);
        if (r.empty()) return false;
        Scalar inv = field_.inv(r.front().value);
        for (auto& e : r) e.value = field_.mul(e.value, inv);
        pivot_of_col_[r.front().col] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    /// Fully reduced rows sorted by pivot column.
    std::vector<SparseRow> finalize() {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().col > rows_[b].front().col; });
        for (std::size_t idx : order) {
            SparseRow& r = rows_[idx];
            SparseRow tail(r.begin() + 1, r.end());
            SparseRow reduced = reduce(tail);
            SparseRow full;
            full.reserve(reduced.size() + 1);
            full.push_back(r.front());
            full.insert(full.end(), reduced.begin(), reduced.end());
            r = std::move(full);
        }
        std::vector<SparseRow> out(rows_.rbegin(), rows_.rend());
        std::sort(out.begin(), out.end(), [](const SparseRow& a, const SparseRow& b) { return a.front().col < b.front().col; });
        return out;
    }

private:
    Field field_;
    std::vector<long> pivot_of_col_;
    std::vector<SparseRow> rows_;
};

std::vector<SparseRow> reduced_rows(const Matrix& m) {
    Eliminator el(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m.row(i).empty()) el.add(m.row(i));
    }
    return el.finalize();
}

}  // namespace

RrefResult rref(const Matrix& m) {
    auto rows = reduced_rows(m);
    Matrix reduced(m.field(), m.rows(), m.cols());
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        pivots.push_back(rows[i].front().col);
        reduced.set_row(i, std::move(rows[i]));
    }
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    Eliminator el(m.field(), m.cols());
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m.row(i).empty() && el.add(m.row(i))) ++r;
    }
    return r;
}

Subspace::Subspace(Field field, std::size_t ambient) : ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::span(const Matrix& generators) {
    auto rows = reduced_rows(generators);
    Subspace s(generators.field(), generators.cols());
    s.basis_ = Matrix(generators.field(), rows.size(), generators.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        s.pivots_.push_back(rows[i].front().col);
        s.basis_.set_row(i, std::move(rows[i]));
    }
    return s;
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& generators) {
    Matrix g(field, generators.size(), ambient);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        require_shape(generators[i].size() == ambient, "Subspace::span: generator length");
        SparseRow r;
        for (std::size_t j = 0; j < ambient; ++j) {
            if (generators[i][j] != 0) r.push_back({j, field.normalize(generators[i][j])});
        }
        g.set_row(i, std::move(r));
    }
    return span(g);
}

Subspace Subspace::whole(const Field& field, std::size_t ambient) {
    return span(Matrix::identity(field, ambient));
}

Vector Subspace::residual(const Vector& v) const {
    require_shape(v.size() == ambient_, "Subspace: vector length");
    const Field& f = field();
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = r[pivots_[i]];
        if (c == 0) continue;
        for (const auto& e : basis_.row(i)) r[e.col] = f.sub(r[e.col], f.mul(c, e.value));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.vector(i))) return false;
    }
    return true;
}

Subspace nullspace(const Matrix& m) {
    auto rows = reduced_rows(m);
    const Field& f = m.field();
    std::vector<char> is_pivot(m.cols(), 0);
    for (const auto& r : rows) is_pivot[r.front().col] = 1;
    // column j of the reduced matrix, restricted to pivot rows
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col(m.cols());
    for (const auto& r : rows) {
        for (std::size_t k = 1; k < r.size(); ++k) by_col[r[k].col].push_back({r.front().col, r[k].value});
    }
    Matrix gens(f, m.cols() - rows.size(), m.cols());
    std::size_t g = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        SparseRow v;
        v.push_back({j, Scalar(1)});
        for (const auto& [pc, val] : by_col[j]) v.push_back({pc, f.neg(val)});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        gens.set_row(g++, std::move(v));
    }
    return Subspace::span(gens);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

AffineSolution solve_affine(const Matrix& a, const Vector& b) {
    require_shape(b.size() == a.rows(), "solve_affine: rhs length " + std::to_string(b.size()) + " vs rows " +
                                            std::to_string(a.rows()));
    const Field& f = a.field();
    Matrix aug = hstack({a, Matrix::column_vector(f, b)});
    auto rows = reduced_rows(aug);
    AffineSolution out;
    bool consistent = rows.empty() || rows.back().front().col < a.cols();
    if (consistent) {
        Vector x(a.cols());
        for (const auto& r : rows) {
            if (r.back().col == a.cols()) x[r.front().col] = r.back().value;
        }
        out.solution = std::move(x);
        return out;
    }
    Subspace left = nullspace(a.transpose());
    for (std::size_t i = 0; i < left.dim(); ++i) {
        Vector y = left.vector(i);
        if (dot(f, y, b) != 0) {
            out.certificate = std::move(y);
            return out;
        }
    }
    throw Error(ErrorCode::NotWellDefined, "solve_affine: inconsistent system without certificate");
}

bool verify_solution(const Matrix& a, const Vector& b, const Vector& x) {
    if (x.size() != a.cols() || b.size() != a.rows()) return false;
    return a.apply(x) == b;
}

bool verify_certificate(const Matrix& a, const Vector& b, const Vector& y) {
    if (y.size() != a.rows() || b.size() != a.rows()) return false;
    return is_zero(a.transpose().apply(y)) && dot(a.field(), y, b) != 0;
}

Quotient quotient(std::size_t ambient, const Subspace& relations) {
    require_shape(relations.ambient() == ambient, "quotient: relations live in a different ambient space");
    const Field& f = relations.field();
    std::vector<long> kept_index(ambient, -1);
    std::vector<char> is_pivot(ambient, 0);
    for (std::size_t p : relations.pivots()) is_pivot[p] = 1;
    Quotient q;
    for (std::size_t j = 0; j < ambient; ++j) {
        if (!is_pivot[j]) {
            kept_index[j] = static_cast<long>(q.kept.size());
            q.kept.push_back(j);
        }
    }
    // proj^T: row j of proj^T is the image of e_j
    Matrix proj_t(f, ambient, q.kept.size());
    for (std::size_t j = 0; j < ambient; ++j) {
        if (!is_pivot[j]) proj_t.set_row(j, SparseRow{{static_cast<std::size_t>(kept_index[j]), Scalar(1)}});
    }
    for (std::size_t i = 0; i < relations.dim(); ++i) {
        SparseRow r;
        for (const auto& e : relations.basis().row(i)) {
            if (!is_pivot[e.col]) r.push_back({static_cast<std::size_t>(kept_index[e.col]), f.neg(e.value)});
        }
        proj_t.set_row(relations.pivots()[i], std::move(r));
    }
    q.proj = proj_t.transpose();
    q.sect = Matrix(f, ambient, q.kept.size());
    for (std::size_t t = 0; t < q.kept.size(); ++t) q.sect.set_row(q.kept[t], SparseRow{{t, Scalar(1)}});
    return q;
}

}  // namespace cosep

#include "cosep/map_space.hpp"

#include <algorithm>

#include "cosep/error.hpp"

namespace cosep {

MapSpace::MapSpace(std::size_t rows, std::size_t cols, Subspace space)
    : rows_(rows), cols_(cols), space_(std::move(space)) {
    require_shape(space_.ambient() == rows * cols, "MapSpace: ambient does not match map shape");
}

MapSpace MapSpace::all(const Field& field, std::size_t rows, std::size_t cols) {
    return MapSpace(rows, cols, Subspace::whole(field, rows * cols));
}

Matrix MapSpace::basis_map(std::size_t i) const {
    Matrix m(field(), rows_, cols_);
    for (const auto& e : space_.basis().row(i)) m.set(e.col / cols_, e.col % cols_, e.value);
    return m;
}

std::vector<Matrix> MapSpace::basis_maps() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_map(i));
    return out;
}

Matrix MapSpace::combine(const Vector& coeffs) const {
    require_shape(coeffs.size() == dim(), "MapSpace::combine: coefficient count");
    Vector v(rows_ * cols_);
    const Field& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (coeffs[i] == 0) continue;
        for (const auto& e : space_.basis().row(i)) v[e.col] = f.add(v[e.col], f.mul(coeffs[i], e.value));
    }
    return unvectorize(f, v, rows_, cols_);
}

bool MapSpace::contains(const Matrix& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) return false;
    return space_.contains(vectorize(m));
}

std::optional<Vector> MapSpace::coordinates(const Matrix& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) return std::nullopt;
    return space_.coordinates(vectorize(m));
}

MapOperator::MapOperator(Field field, std::size_t f_rows, std::size_t f_cols, std::size_t out_rows,
                         std::size_t out_cols)
    : field_(std::move(field)), fr_(f_rows), fc_(f_cols), or_(out_rows), oc_(out_cols) {}

MapOperator& MapOperator::add(const Matrix& a, const Matrix& b, const Scalar& coef, Lift lift, std::size_t k) {
    std::size_t mid_r = fr_, mid_c = fc_;
    if (lift != Lift::None) {
        mid_r *= k;
        mid_c *= k;
    } else {
        k = 1;
    }
    require_shape(a.rows() == or_ && a.cols() == mid_r,
                  "MapOperator: left factor is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      ", expected " + std::to_string(or_) + "x" + std::to_string(mid_r));
    require_shape(b.rows() == mid_c && b.cols() == oc_,
                  "MapOperator: right factor is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                      ", expected " + std::to_string(mid_c) + "x" + std::to_string(oc_));
    Scalar c = field_.normalize(coef);
    if (c == 0) return *this;
    terms_.push_back({a.transpose(), a, b, c, lift, k});
    return *this;
}

Matrix MapOperator::matrix() const {
    const std::size_t nout = or_ * oc_;
    Matrix out_t(field_, fr_ * fc_, nout);
    Vector acc(nout);
    std::vector<char> used(nout, 0);
    std::vector<std::size_t> touched;
    auto outer = [&](const SparseRow& acol, const SparseRow& brow, const Scalar& coef) {
        for (const auto& ea : acol) {
            Scalar s = field_.mul(coef, ea.value);
            std::size_t base = ea.col * oc_;
            for (const auto& eb : brow) {
                std::size_t idx = base + eb.col;
                if (!used[idx]) {
                    used[idx] = 1;
                    touched.push_back(idx);
                }
                acc[idx] = field_.add(acc[idx], field_.mul(s, eb.value));
            }
        }
    };
    for (std::size_t x = 0; x < fr_; ++x) {
        for (std::size_t n = 0; n < fc_; ++n) {
            for (const auto& t : terms_) {
                switch (t.lift) {
                    case Lift::None:
                        outer(t.a_t.row(x), t.b.row(n), t.coef);
                        break;
                    case Lift::RightIdentity:
                        for (std::size_t c = 0; c < t.k; ++c) outer(t.a_t.row(x * t.k + c), t.b.row(n * t.k + c), t.coef);
                        break;
                    case Lift::LeftIdentity:
                        for (std::size_t c = 0; c < t.k; ++c) outer(t.a_t.row(c * fr_ + x), t.b.row(c * fc_ + n), t.coef);
                        break;
                }
            }
            std::sort(touched.begin(), touched.end());
            SparseRow row;
            for (std::size_t idx : touched) {
                if (acc[idx] != 0) row.push_back({idx, acc[idx]});
                acc[idx] = 0;
                used[idx] = 0;
            }
            touched.clear();
            out_t.set_row(x * fc_ + n, std::move(row));
        }
    }
    return out_t.transpose();
}

Matrix MapOperator::apply(const Matrix& f) const {
    require_shape(f.rows() == fr_ && f.cols() == fc_, "MapOperator::apply: map shape");
    Matrix out = Matrix::zero(field_, or_, oc_);
    for (const auto& t : terms_) {
        Matrix lifted = f;
        if (t.lift == Lift::RightIdentity) lifted = kron(f, Matrix::identity(field_, t.k));
        if (t.lift == Lift::LeftIdentity) lifted = kron(Matrix::identity(field_, t.k), f);
        out = out + (t.a * lifted * t.b).scaled(t.coef);
    }
    return out;
}

MapSpace solve_maps(const Field& field, std::size_t f_rows, std::size_t f_cols, const std::vector<MapOperator>& ops) {
    if (ops.empty()) return MapSpace::all(field, f_rows, f_cols);
    std::vector<Matrix> blocks;
    for (const auto& op : ops) {
        require_shape(op.f_rows() == f_rows && op.f_cols() == f_cols, "solve_maps: operator on another map shape");
        blocks.push_back(op.matrix());
    }
    return MapSpace(f_rows, f_cols, nullspace(vstack(blocks)));
}

std::pair<Matrix, Vector> stack_affine(const std::vector<MapOperator>& ops, const MapOperator& affine,
                                       const Matrix& rhs) {
    require_shape(rhs.rows() == affine.out_rows() && rhs.cols() == affine.out_cols(), "stack_affine: rhs shape");
    std::vector<Matrix> blocks;
    std::size_t zero_rows = 0;
    for (const auto& op : ops) {
        require_shape(op.f_rows() == affine.f_rows() && op.f_cols() == affine.f_cols(), "stack_affine: operator shape");
        blocks.push_back(op.matrix());
        zero_rows += blocks.back().rows();
    }
    blocks.push_back(affine.matrix());
    Vector b(zero_rows);
    Vector tail = vectorize(rhs);
    b.insert(b.end(), tail.begin(), tail.end());
    return {vstack(blocks), std::move(b)};
}

MapSolution solve_map_affine(const Field& field, std::size_t f_rows, std::size_t f_cols,
                             const std::vector<MapOperator>& ops, const MapOperator& affine, const Matrix& rhs) {
    require_shape(affine.f_rows() == f_rows && affine.f_cols() == f_cols, "solve_map_affine: operator shape");
    auto [a, b] = stack_affine(ops, affine, rhs);
    AffineSolution s = solve_affine(a, b);
    MapSolution out;
    if (s.solution) out.map = unvectorize(field, *s.solution, f_rows, f_cols);
    out.certificate = std::move(s.certificate);
    return out;
}

MapSpace image_of(const MapOperator& op, const MapSpace& params) {
    require_shape(op.f_rows() == params.rows() && op.f_cols() == params.cols(), "image_of: parameter shape");
    Matrix gens = params.subspace().basis() * op.matrix().transpose();
    return MapSpace(op.out_rows(), op.out_cols(), Subspace::span(gens));
}

std::vector<MapOperator> bilinear_constraints(const Bimodule& src, const Bimodule& dst) {
    require_same_algebra(src, dst, "bilinear_maps");
    std::vector<MapOperator> ops;
    const Algebra& r = *src.algebra();
    if (r.is_base_field()) return ops;
    const Field& f = r.field();
    Matrix is = Matrix::identity(f, src.dim()), id = Matrix::identity(f, dst.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) {
        MapOperator l(f, dst.dim(), src.dim(), dst.dim(), src.dim());
        l.add(dst.left(i), is).add(id, src.left(i), Scalar(-1));
        MapOperator rt(f, dst.dim(), src.dim(), dst.dim(), src.dim());
        rt.add(dst.right(i), is).add(id, src.right(i), Scalar(-1));
        ops.push_back(std::move(l));
        ops.push_back(std::move(rt));
    }
    return ops;
}

MapSpace bilinear_maps(const Bimodule& src, const Bimodule& dst) {
    return solve_maps(src.field(), dst.dim(), src.dim(), bilinear_constraints(src, dst));
}

}  // namespace cosep

#include "cosep/tensor.hpp"

#include "cosep/error.hpp"
#include "cosep/linalg.hpp"

namespace cosep {

TensorChain TensorChain::single(const Bimodule& b) {
    TensorChain t;
    t.module_ = b;
    t.flat_dim_ = b.dim();
    t.factor_dims_ = {b.dim()};
    t.flat_ = true;
    t.proj_ = Matrix::identity(b.field(), b.dim());
    t.sect_ = t.proj_;
    return t;
}

TensorChain TensorChain::of(const std::vector<const Bimodule*>& factors) {
    if (factors.empty()) throw Error(ErrorCode::DimensionMismatch, "empty tensor chain");
    TensorChain t = single(*factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) t = t.append(*factors[i]);
    return t;
}

TensorChain TensorChain::append(const Bimodule& b) const {
    require_same_algebra(module_, b, "tensor_over_R");
    const Algebra& r = *b.algebra();
    const Field& f = b.field();
    const std::size_t a = module_.dim(), d = b.dim();
    const Matrix ia = Matrix::identity(f, a), id = Matrix::identity(f, d);

    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < r.dim(); ++i) {
        left.push_back(kron(module_.left(i), id));
        right.push_back(kron(ia, b.right(i)));
    }

    TensorChain t;
    t.flat_dim_ = flat_dim_ * d;
    t.factor_dims_ = factor_dims_;
    t.factor_dims_.push_back(d);

    Subspace rel(f, a * d);
    if (!r.is_base_field()) {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < r.dim(); ++i) gens.push_back(kron(module_.right(i), id) - kron(ia, b.left(i)));
        rel = image(hstack(gens));
    }
    if (rel.dim() == 0) {
        t.module_ = Bimodule(module_.algebra(), a * d, std::move(left), std::move(right));
        t.flat_ = flat_;
        t.proj_ = flat_ ? Matrix::identity(f, t.flat_dim_) : kron(proj_, id);
        t.sect_ = flat_ ? t.proj_ : kron(sect_, id);
        return t;
    }
    Quotient q = quotient(a * d, rel);
    for (auto& m : left) m = q.proj * m * q.sect;
    for (auto& m : right) m = q.proj * m * q.sect;
    t.module_ = Bimodule(module_.algebra(), q.dim(), std::move(left), std::move(right));
    t.flat_ = false;
    t.proj_ = q.proj * kron(proj_, id);
    t.sect_ = kron(sect_, id) * q.sect;
    return t;
}

Matrix TensorChain::project(const Matrix& flat_map) const { return flat_ ? flat_map : proj_ * flat_map; }

Matrix TensorChain::lift(const Matrix& flat_map) const { return flat_ ? flat_map : flat_map * sect_; }

Matrix TensorChain::represent(const Matrix& m) const { return flat_ ? m : sect_ * m; }

Matrix transport(const TensorChain& dst, const Matrix& rep, const TensorChain& src) {
    return dst.project(src.lift(rep));
}

TensorProduct tensor_over_R(const Bimodule& b1, const Bimodule& b2) {
    TensorChain t = TensorChain::of({&b1, &b2});
    return {t.module(), t.proj(), t.sect()};
}

Matrix left_unitor(const Bimodule& m) {
    std::vector<Matrix> blocks(m.left_actions().begin(), m.left_actions().end());
    return hstack(blocks);
}

Matrix right_unitor(const Bimodule& m) {
    const Field& f = m.field();
    const std::size_t r = m.algebra()->dim(), d = m.dim();
    // column j*r + i is (right action of b_i) e_j
    Matrix out_t(f, d * r, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < r; ++i) {
            Vector e(d);
            e[j] = 1;
            Vector v = m.right(i).apply(e);
            SparseRow row;
            for (std::size_t k = 0; k < d; ++k)
                if (v[k] != 0) row.push_back({k, v[k]});
            out_t.set_row(j * r + i, std::move(row));
        }
    return out_t.transpose();
}

}  // namespace cosep

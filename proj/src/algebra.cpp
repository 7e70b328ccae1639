#include "cosep/algebra.hpp"

#include "cosep/error.hpp"

namespace cosep {

namespace {

Matrix combination(const Field& f, const std::vector<Matrix>& ms, const Vector& coeffs, std::size_t n) {
    Matrix out = Matrix::zero(f, n, n);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t] != 0) out = out + ms[t].scaled(coeffs[t]);
    }
    return out;
}

std::string triple(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + a.labels()[i] + "," + a.labels()[j] + "," + a.labels()[k] + ")";
}

}  // namespace

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& f : other.failures) failures.push_back({prefix + f.axiom, f.location});
    degenerate = degenerate || other.degenerate;
}

Algebra::Algebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vector>> mult, Vector unit)
    : field_(std::move(field)), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "algebra must have dimension at least 1");
    if (mult_.size() != n || unit_.size() != n) throw Error(ErrorCode::InvalidAlgebra, "structure constant shape");
    for (auto& row : mult_) {
        if (row.size() != n) throw Error(ErrorCode::InvalidAlgebra, "structure constant shape");
        for (auto& v : row) {
            if (v.size() != n) throw Error(ErrorCode::InvalidAlgebra, "structure constant shape");
            for (auto& x : v) x = field_.normalize(x);
        }
    }
    for (auto& x : unit_) x = field_.normalize(x);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vector> lcols, rcols;
        for (std::size_t j = 0; j < n; ++j) {
            lcols.push_back(mult_[i][j]);
            rcols.push_back(mult_[j][i]);
        }
        left_.push_back(Matrix::from_columns(field_, n, lcols));
        right_.push_back(Matrix::from_columns(field_, n, rcols));
    }
}

std::shared_ptr<const Algebra> Algebra::base(const Field& field) {
    return std::make_shared<const Algebra>(field, std::vector<std::string>{"1"},
                                           std::vector<std::vector<Vector>>{{Vector{Scalar(1)}}}, Vector{Scalar(1)});
}

Matrix Algebra::mult_map() const {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mult_[i][j]);
    return Matrix::from_columns(field_, dim(), cols);
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
}

bool same_algebra(const Algebra& a, const Algebra& b) { return &a == &b || a == b; }

CheckReport check_algebra(const Algebra& a) {
    CheckReport rep;
    const Field& f = a.field();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector& ij = a.product(i, j);
                Vector lhs(n), rhs = a.left_mult(i).apply(a.product(j, k));
                for (std::size_t t = 0; t < n; ++t) {
                    if (ij[t] != 0) lhs = add(f, lhs, scale(f, ij[t], a.product(t, k)));
                }
                if (lhs != rhs) rep.fail("associativity", triple(a, i, j, k));
            }
    std::vector<Matrix> lefts, rights;
    for (std::size_t t = 0; t < n; ++t) {
        lefts.push_back(a.left_mult(t));
        rights.push_back(a.right_mult(t));
    }
    Matrix lu = combination(f, lefts, a.unit(), n);
    Matrix ru = combination(f, rights, a.unit(), n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1;
        if (lu.apply(e) != e) rep.fail("left unit", a.labels()[i]);
        if (ru.apply(e) != e) rep.fail("right unit", a.labels()[i]);
    }
    return rep;
}

Bimodule::Bimodule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right)
    : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
    if (!algebra_) throw Error(ErrorCode::InvalidBimodule, "bimodule without algebra");
    if (left_.size() != algebra_->dim() || right_.size() != algebra_->dim()) {
        throw Error(ErrorCode::InvalidBimodule, "one action matrix per algebra basis element is required");
    }
    for (const auto* acts : {&left_, &right_}) {
        for (const auto& m : *acts) {
            if (m.rows() != dim_ || m.cols() != dim_) throw Error(ErrorCode::InvalidBimodule, "action matrix shape");
            if (!(m.field() == algebra_->field())) throw Error(ErrorCode::DomainMismatch, "action over another field");
        }
    }
}

Bimodule Bimodule::regular(AlgebraPtr algebra) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        l.push_back(algebra->left_mult(i));
        r.push_back(algebra->right_mult(i));
    }
    std::size_t n = algebra->dim();
    return Bimodule(std::move(algebra), n, std::move(l), std::move(r));
}

Bimodule Bimodule::zero(AlgebraPtr algebra) {
    std::vector<Matrix> l(algebra->dim(), Matrix::zero(algebra->field(), 0, 0));
    auto r = l;
    return Bimodule(std::move(algebra), 0, std::move(l), std::move(r));
}

Bimodule Bimodule::free_over_base(AlgebraPtr algebra, std::size_t n) {
    if (!algebra->is_base_field()) throw Error(ErrorCode::AlgebraMismatch, "free_over_base needs R = k");
    Matrix act = Matrix::identity(algebra->field(), n);
    return Bimodule(std::move(algebra), n, {act}, {act});
}

void require_same_algebra(const Bimodule& a, const Bimodule& b, const char* where) {
    if (!same_algebra(*a.algebra(), *b.algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, std::string(where) + ": bimodules over different algebras");
    }
}

CheckReport check_bimodule(const Algebra& a, const Bimodule& b) {
    CheckReport rep;
    if (!same_algebra(a, *b.algebra())) {
        rep.fail("algebra", "bimodule is over a different algebra");
        return rep;
    }
    const Field& f = a.field();
    const std::size_t n = a.dim(), d = b.dim();
    auto left_of = [&](const Vector& v) { return combination(f, b.left_actions(), v, d); };
    auto right_of = [&](const Vector& v) { return combination(f, b.right_actions(), v, d); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::string loc = "(" + a.labels()[i] + "," + a.labels()[j] + ")";
            if (!(b.left(i) * b.left(j) == left_of(a.product(i, j)))) rep.fail("left action", loc);
            if (!(b.right(j) * b.right(i) == right_of(a.product(i, j)))) rep.fail("right action", loc);
            if (!(b.left(i) * b.right(j) == b.right(j) * b.left(i))) rep.fail("actions commute", loc);
        }
    if (!left_of(a.unit()).is_identity()) rep.fail("left unit", "1");
    if (!right_of(a.unit()).is_identity()) rep.fail("right unit", "1");
    return rep;
}

}  // namespace cosep

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosep/algebra.hpp"
#include "cosep/linalg.hpp"

namespace cosep {

/// A solved linear space of maps k^cols -> k^rows, stored as a subspace of
/// row-major vectorized matrices with its canonical basis.
class MapSpace {
public:
    MapSpace() = default;
    MapSpace(std::size_t rows, std::size_t cols, Subspace space);
    static MapSpace all(const Field& field, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    const Field& field() const noexcept { return space_.field(); }
    const Subspace& subspace() const noexcept { return space_; }

    Matrix basis_map(std::size_t i) const;
    std::vector<Matrix> basis_maps() const;
    /// Sum of coeffs[i] * basis_map(i).
    Matrix combine(const Vector& coeffs) const;
    bool contains(const Matrix& m) const;
    std::optional<Vector> coordinates(const Matrix& m) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Subspace space_;
};

enum class Lift { None, RightIdentity, LeftIdentity };

/// A linear operator on an unknown map f: k^fc -> k^fr, as a sum of terms
/// coef * A * L(f) * B where L(f) is f, f (x) I_k or I_k (x) f.
class MapOperator {
public:
    MapOperator(Field field, std::size_t f_rows, std::size_t f_cols, std::size_t out_rows, std::size_t out_cols);

    MapOperator& add(const Matrix& a, const Matrix& b, const Scalar& coef = Scalar(1), Lift lift = Lift::None,
                     std::size_t k = 1);

    std::size_t f_rows() const noexcept { return fr_; }
    std::size_t f_cols() const noexcept { return fc_; }
    std::size_t out_rows() const noexcept { return or_; }
    std::size_t out_cols() const noexcept { return oc_; }

    /// (out_rows*out_cols) x (f_rows*f_cols) matrix on vectorized maps.
    Matrix matrix() const;
    /// Evaluates the operator on a concrete map.
    Matrix apply(const Matrix& f) const;

private:
    struct Term {
        Matrix a_t;  // transpose of A, for column access
        Matrix a;
        Matrix b;
        Scalar coef;
        Lift lift;
        std::size_t k;
    };
    Field field_;
    std::size_t fr_, fc_, or_, oc_;
    std::vector<Term> terms_;
};

/// Common solution space of homogeneous operator equations on f.
MapSpace solve_maps(const Field& field, std::size_t f_rows, std::size_t f_cols, const std::vector<MapOperator>& ops);

/// Outcome of an affine solve for a map: canonical solution, or a
/// certificate y on the stacked system with y^T A = 0 and y^T b != 0.
struct MapSolution {
    std::optional<Matrix> map;
    std::optional<Vector> certificate;

    bool found() const noexcept { return map.has_value(); }
};

/// The stacked linear system [ops; affine] x = [0; vec(rhs)].
std::pair<Matrix, Vector> stack_affine(const std::vector<MapOperator>& ops, const MapOperator& affine,
                                       const Matrix& rhs);

/// Solves op(f) = rhs subject to the homogeneous equations ops(f) = 0.
MapSolution solve_map_affine(const Field& field, std::size_t f_rows, std::size_t f_cols,
                             const std::vector<MapOperator>& ops, const MapOperator& affine, const Matrix& rhs);

/// Image of a parameter space under an operator, as a space of output maps.
MapSpace image_of(const MapOperator& op, const MapSpace& params);

/// Operators expressing R-bilinearity of f: src -> dst.
std::vector<MapOperator> bilinear_constraints(const Bimodule& src, const Bimodule& dst);

MapSpace bilinear_maps(const Bimodule& src, const Bimodule& dst);

}  // namespace cosep

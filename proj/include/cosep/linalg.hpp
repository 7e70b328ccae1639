#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cosep/matrix.hpp"

namespace cosep {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row-echelon form. `reduced` keeps the input row count, with the
/// zero rows at the bottom, so rref(rref(A)) == rref(A).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of k^ambient with its canonical (RREF) basis as rows.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field field, std::size_t ambient);  // the zero subspace
    /// Row space of `generators` (any row count).
    static Subspace span(const Matrix& generators);
    static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& generators);
    static Subspace whole(const Field& field, std::size_t ambient);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector vector(std::size_t i) const { return basis_.dense_row(i); }

    bool contains(const Vector& v) const;
    /// Coordinates in the canonical basis, or nullopt when v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;
    /// Residual of v after reduction by the basis (zero iff v is inside).
    Vector residual(const Vector& v) const;

    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace nullspace(const Matrix& m);
/// Column space of m as a subspace of k^rows.
Subspace image(const Matrix& m);

struct AffineSolution {
    /// Canonical particular solution (free variables zero), when consistent.
    std::optional<Vector> solution;
    /// When inconsistent: y with y^T A = 0 and y^T b != 0.
    std::optional<Vector> certificate;

    bool feasible() const noexcept { return solution.has_value(); }
};

AffineSolution solve_affine(const Matrix& a, const Vector& b);
bool verify_solution(const Matrix& a, const Vector& b, const Vector& x);
bool verify_certificate(const Matrix& a, const Vector& b, const Vector& y);

struct Quotient {
    Matrix proj;  // k^ambient -> k^q, kernel = relations
    Matrix sect;  // k^q -> k^ambient, proj * sect = id
    /// Ambient coordinates kept as quotient coordinates (non-pivots of the relations).
    std::vector<std::size_t> kept;

    std::size_t dim() const noexcept { return kept.size(); }
};

Quotient quotient(std::size_t ambient, const Subspace& relations);

}  // namespace cosep

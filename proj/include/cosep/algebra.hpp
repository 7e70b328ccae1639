#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cosep/matrix.hpp"

namespace cosep {

struct CheckFailure {
    std::string axiom;
    std::string location;
};

/// Outcome of an axiom checker: empty failure list means pass.
struct CheckReport {
    std::vector<CheckFailure> failures;
    bool degenerate = false;

    bool passed() const noexcept { return failures.empty(); }
    void fail(std::string axiom, std::string location) { failures.push_back({std::move(axiom), std::move(location)}); }
    void merge(const CheckReport& other, const std::string& prefix = {});
};

/// Finite-dimensional unital algebra given by structure constants.
class Algebra {
public:
    Algebra() = default;
    /// mult[i][j] holds the coordinates of b_i * b_j.
    Algebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vector>> mult, Vector unit);

    /// The base field itself: one basis element "1".
    static std::shared_ptr<const Algebra> base(const Field& field);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Vector& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
    const Vector& unit() const noexcept { return unit_; }
    /// Matrix of x -> b_i x.
    const Matrix& left_mult(std::size_t i) const { return left_[i]; }
    /// Matrix of x -> x b_i.
    const Matrix& right_mult(std::size_t i) const { return right_[i]; }
    /// Multiplication R (x) R -> R on tensor coordinates.
    Matrix mult_map() const;

    /// True for the one-dimensional algebra k.
    bool is_base_field() const noexcept { return dim() == 1; }

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> mult_;
    Vector unit_;
    std::vector<Matrix> left_, right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

CheckReport check_algebra(const Algebra& a);

/// An R-bimodule: per basis element of R, the matrices of the left action
/// m -> b_i m and the right action m -> m b_i.
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);

    /// R acting on itself by multiplication.
    static Bimodule regular(AlgebraPtr algebra);
    static Bimodule zero(AlgebraPtr algebra);
    /// k^n with R = k acting by scalars (R must be the base field).
    static Bimodule free_over_base(AlgebraPtr algebra, std::size_t n);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Matrix& right(std::size_t i) const { return right_[i]; }
    const std::vector<Matrix>& left_actions() const noexcept { return left_; }
    const std::vector<Matrix>& right_actions() const noexcept { return right_; }

private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> left_, right_;
};

/// Throws AlgebraMismatch unless both bimodules live over the same algebra.
void require_same_algebra(const Bimodule& a, const Bimodule& b, const char* where);
bool same_algebra(const Algebra& a, const Algebra& b);

CheckReport check_bimodule(const Algebra& a, const Bimodule& b);

}  // namespace cosep

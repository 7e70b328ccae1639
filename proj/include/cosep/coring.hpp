#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cosep/algebra.hpp"
#include "cosep/map_space.hpp"
#include "cosep/tensor.hpp"

namespace cosep {

/// An R-coring: R-bimodule C with comultiplication and counit.
///
/// Delta is supplied in k-tensor coordinates of C (x)_k C and stored projected
/// onto C (x)_R C. Iterated powers C^{(x)n} are left-associated chains.
class Coring {
public:
    Coring() = default;
    Coring(Bimodule c, Matrix delta_flat, Matrix eps);

    const AlgebraPtr& algebra() const noexcept { return c_.algebra(); }
    const Field& field() const noexcept { return c_.field(); }
    const Bimodule& bimodule() const noexcept { return c_; }
    std::size_t dim() const noexcept { return c_.dim(); }
    bool degenerate() const noexcept { return c_.dim() == 0; }

    /// C -> C (x)_R C in quotient coordinates.
    const Matrix& delta() const noexcept { return delta_; }
    /// A flat representative of delta: C -> C (x)_k C.
    Matrix delta_rep() const;
    /// Delta exactly as supplied.
    const Matrix& delta_input() const noexcept { return delta_in_; }
    /// C -> R.
    const Matrix& eps() const noexcept { return eps_; }

    /// C^{(x)n}, n >= 1, cached.
    const TensorChain& power(std::size_t n) const;
    /// [C^{(x)n}, M] for n >= 0.
    TensorChain chain(std::size_t n, const Bimodule& m) const;

    friend bool operator==(const Coring& a, const Coring& b);

private:
    Bimodule c_;
    Matrix delta_in_, delta_, eps_;
    struct Cache {
        std::mutex mutex;
        std::vector<std::unique_ptr<TensorChain>> powers;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// R-bimodule with a right C-coaction rho: M -> M (x)_R C.
struct RightComodule {
    std::string name;
    Bimodule module;
    Matrix rho;

    std::size_t dim() const noexcept { return module.dim(); }
};

/// R-bimodule with right coaction rho: M -> M (x)_R C and left coaction
/// lambda: M -> C (x)_R M, both in quotient coordinates.
struct Bicomodule {
    std::string name;
    Bimodule module;
    Matrix rho;
    Matrix lambda;

    std::size_t dim() const noexcept { return module.dim(); }
    RightComodule right() const { return {name, module, rho}; }
};

/// Builds a bicomodule from coactions given in k-tensor coordinates.
Bicomodule make_bicomodule(const Coring& c, std::string name, Bimodule m, const Matrix& rho_flat,
                           const Matrix& lambda_flat);

CheckReport check_coring(const Coring& c);
CheckReport check_comodule(const Coring& c, const RightComodule& m);
CheckReport check_bicomodule(const Coring& c, const Bicomodule& m);

/// (C, Delta, Delta).
Bicomodule regular_bicomodule(const Coring& c);
Bicomodule zero_bicomodule(const Coring& c);

/// [C^{(x)n}, N] with lambda = Delta on the first factor and rho acting on N.
struct CofreeTerm {
    TensorChain chain;
    Bicomodule bicomodule;
};
CofreeTerm cofree_term(const Coring& c, const RightComodule& n, std::size_t power);
/// C (x)_R N.
Bicomodule induced(const Coring& c, const RightComodule& n);

enum class HomKind { Bilinear, RightColinear, LeftColinear, Full };

/// rho_dst f = (f (x) C) rho_src, on f: src -> dst.
MapOperator right_colinear_op(const Coring& c, const Bimodule& src, const Matrix& src_rho, const Bimodule& dst,
                              const Matrix& dst_rho);
/// lambda_dst f = (C (x) f) lambda_src.
MapOperator left_colinear_op(const Coring& c, const Bimodule& src, const Matrix& src_lambda, const Bimodule& dst,
                             const Matrix& dst_lambda);
std::vector<MapOperator> hom_constraints(const Coring& c, const Bicomodule& src, const Bicomodule& dst, HomKind kind);

MapSpace hom_space(const Coring& c, const Bicomodule& src, const Bicomodule& dst, HomKind kind = HomKind::Full);
MapSpace hom_space(const Coring& c, const RightComodule& src, const RightComodule& dst);
bool is_morphism(const Coring& c, const Bicomodule& src, const Bicomodule& dst, const Matrix& f,
                 HomKind kind = HomKind::Full);

struct Cokernel {
    Bicomodule module;
    Matrix proj;
    Matrix sect;
};
/// Cokernel of a bicomodule morphism f: src -> dst. Throws NotAMorphism.
Cokernel cokernel(const Coring& c, const Bicomodule& src, const Bicomodule& dst, const Matrix& f);

/// lambda_M viewed as a morphism M -> induced(M).
Matrix theta(const Coring& c, const Bicomodule& m);

/// (eps (x) N): C (x)_R N -> N.
Matrix counit_left(const Coring& c, const Bimodule& n);
/// (N (x) eps): N (x)_R C -> N.
Matrix counit_right(const Coring& c, const Bimodule& n);
/// f: M -> induced(N)  |->  (eps (x) N) f.
Matrix adjunction_forward(const Coring& c, const Bicomodule& m, const RightComodule& n, const Matrix& f);
/// g: M -> N  |->  (C (x) g) lambda_M.
Matrix adjunction_backward(const Coring& c, const Bicomodule& m, const RightComodule& n, const Matrix& g);

}  // namespace cosep

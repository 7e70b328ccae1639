#pragma once

#include <vector>

#include "cosep/algebra.hpp"

namespace cosep {

/// Left-associated iterated tensor product F_1 (x)_R F_2 (x)_R ... (x)_R F_m.
///
/// "Flat" coordinates are those of F_1 (x)_k ... (x)_k F_m (left factor
/// slowest). proj() maps flat coordinates onto the quotient, sect() is a
/// linear section with proj * sect = id. Maps between chains are given by a
/// flat representative and transported as dst.proj() * rep * src.sect().
class TensorChain {
public:
    TensorChain() = default;
    static TensorChain single(const Bimodule& b);
    static TensorChain of(const std::vector<const Bimodule*>& factors);
    /// (this) (x)_R b.
    TensorChain append(const Bimodule& b) const;

    const Bimodule& module() const noexcept { return module_; }
    const Field& field() const noexcept { return module_.field(); }
    std::size_t dim() const noexcept { return module_.dim(); }
    std::size_t flat_dim() const noexcept { return flat_dim_; }
    std::size_t length() const noexcept { return factor_dims_.size(); }
    const std::vector<std::size_t>& factor_dims() const noexcept { return factor_dims_; }
    /// True when proj and sect are identities (always the case over R = k).
    bool is_flat() const noexcept { return flat_; }
    const Matrix& proj() const noexcept { return proj_; }
    const Matrix& sect() const noexcept { return sect_; }

    /// proj * m, skipping the product when the chain is flat.
    Matrix project(const Matrix& flat_map) const;
    /// m * sect.
    Matrix lift(const Matrix& flat_map) const;
    /// sect * m: flat representative of a map into the chain.
    Matrix represent(const Matrix& m) const;

private:
    Bimodule module_;
    std::size_t flat_dim_ = 0;
    std::vector<std::size_t> factor_dims_;
    bool flat_ = true;
    Matrix proj_, sect_;
};

/// dst.proj * rep * src.sect.
Matrix transport(const TensorChain& dst, const Matrix& rep, const TensorChain& src);

/// B1 (x)_R B2 with the projection from k-tensor coordinates.
struct TensorProduct {
    Bimodule module;
    Matrix proj;
    Matrix sect;
};
TensorProduct tensor_over_R(const Bimodule& b1, const Bimodule& b2);

/// R (x)_R M -> M on flat coordinates: r (x) m -> r m.
Matrix left_unitor(const Bimodule& m);
/// M (x)_R R -> M on flat coordinates: m (x) r -> m r.
Matrix right_unitor(const Bimodule& m);

}  // namespace cosep

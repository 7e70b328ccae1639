#pragma once

#include "cosep/coring.hpp"

// Hand-built splitting witnesses, independent of the solver.
namespace cosep::testing {

/// Sweedler coring R (x) R: Lambda((a (x) b) (x) (c (x) d)) = E(bc) a (x) d on
/// flat representatives, E the coefficient of the unit basis element. For
/// Q(i) this E is half the trace, the form dual to (1(x)1 - i(x)i)/2.
inline Matrix sweedler_flat(const Coring& c) {
    const auto& r = *c.algebra();
    const std::size_t k = r.dim();
    Matrix flat = Matrix::zero(c.field(), k * k, k * k * k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t x = 0; x < k; ++x)
                for (std::size_t d = 0; d < k; ++d) {
                    Scalar e = r.product(b, x)[0];
                    if (e != 0) flat.set(a * k + d, ((a * k + b) * k + x) * k + d, e);
                }
    return flat;
}

/// True when the flat map kills the balancing relations of C (x)_R C.
inline bool sweedler_witness_well_defined(const Coring& c) {
    Matrix flat = sweedler_flat(c);
    return flat * c.power(2).sect() * c.power(2).proj() == flat;
}

inline Matrix sweedler_witness(const Coring& c) { return c.power(2).lift(sweedler_flat(c)); }

/// Grouplike coalgebra: Lambda(e_i (x) e_j) = delta_ij e_i.
inline Matrix grouplike_witness(const Coring& c) {
    const std::size_t n = c.dim();
    Matrix w = Matrix::zero(c.field(), n, n * n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, i * n + i, Scalar(1));
    return w;
}

}  // namespace cosep::testing

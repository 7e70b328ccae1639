#pragma once

#include "cosep/coring.hpp"

namespace cosep {

/// A coalgebra morphism phi: A -> C over the base field. Both corings must
/// have R = k.
struct Coextension {
    Coring a;
    Coring c;
    Matrix phi;  // dim C x dim A
};

/// Coalgebra axioms of A and C plus the morphism laws of phi.
CheckReport check_coextension(const Coextension& e);

/// X box_C Y = ker(rho_X (x) Y - X (x) lambda_Y), with inclusion into X (x) Y
/// and a linear retraction reading the pivot coordinates.
struct Cotensor {
    Subspace space;
    Matrix incl;
    Matrix retr;

    std::size_t dim() const noexcept { return space.dim(); }
};
Cotensor cotensor(const Coring& c, std::size_t dim_x, const Matrix& rho_x, std::size_t dim_y, const Matrix& lambda_y);

/// (I (x) phi) rho and (phi (x) I) lambda: C-coactions of an A-comodule.
Matrix corestrict_right(const Coextension& e, std::size_t dim_m, const Matrix& rho);
Matrix corestrict_left(const Coextension& e, std::size_t dim_m, const Matrix& lambda);

/// D = A box_C A with Delta_bar: A -> D and D's A-bicomodule structure.
struct DeltaBar {
    Cotensor d;
    Matrix delta_bar;
    Bicomodule bicomodule;
};
/// Throws NotCorestrictable when Delta_A leaves the cotensor.
DeltaBar delta_bar(const Coextension& e);
/// Coassociativity of Delta_bar and the two phi-counit laws.
CheckReport delta_bar_residuals(const Coextension& e);

/// A left C-colinear retraction of lambda: M -> C (x) M, when one exists.
MapSolution coflat_check(const Coring& c, std::size_t dim_m, const Matrix& lambda);

/// Space of g: M -> A, C-bicolinear, with Delta_A g = (g (x) A) rho + (A (x) g) lambda.
MapSpace c_coder_space(const Coextension& e, const Bicomodule& m);
MapSpace c_inner_coder_space(const Coextension& e, const Bicomodule& m);
/// Space of f: N -> A box_C M (cotensor coordinates).
MapSpace c_coint_space(const Coextension& e, const Bicomodule& n, const Bicomodule& m);
MapSpace c_inner_coint_space(const Coextension& e, const Bicomodule& n, const Bicomodule& m);

/// A-bicolinear retraction r: A box_C A -> A of Delta_bar.
/// Throws HypothesisNotMet when A is not coflat as a left C-comodule.
MapSolution separable_coext(const Coextension& e);

}  // namespace cosep

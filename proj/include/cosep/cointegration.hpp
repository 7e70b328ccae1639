#pragma once

#include <vector>

#include "cosep/coring.hpp"

namespace cosep {

/// Equations on g: M -> C: bilinear and Delta g = (g (x) C) rho + (C (x) g) lambda.
std::vector<MapOperator> coder_constraints(const Coring& c, const Bicomodule& m);
/// gamma: M -> R  |->  (C (x) gamma) lambda - (gamma (x) C) rho.
MapOperator inner_coder_operator(const Coring& c, const Bicomodule& m);

MapSpace coder_space(const Coring& c, const Bicomodule& m);
MapSpace inner_coder_space(const Coring& c, const Bicomodule& m);

/// Equations on h: N -> C (x) M: bilinear, right colinear and
/// (Delta (x) M) h = (C (x) lambda_M) h + (C (x) h) lambda_N.
std::vector<MapOperator> coint_constraints(const Coring& c, const Bicomodule& n, const Bicomodule& m);
/// phi: N -> M  |->  (C (x) phi) lambda_N - lambda_M phi.
MapOperator inner_coint_operator(const Coring& c, const Bicomodule& n, const Bicomodule& m);

MapSpace coint_space(const Coring& c, const Bicomodule& n, const Bicomodule& m);
MapSpace inner_coint_space(const Coring& c, const Bicomodule& n, const Bicomodule& m);

/// h: M -> C (x) C  |->  (C (x) eps) h.
Matrix coint_to_coder(const Coring& c, const Bicomodule& m, const Matrix& h);
/// g: M -> C  |->  (g (x) C) rho_M.
Matrix coder_to_coint(const Coring& c, const Bicomodule& m, const Matrix& g);

struct UniversalCointegration {
    Cokernel k;  // K(M) = coker(lambda_M: M -> C (x) M)
    Matrix w;    // K -> C (x) M
};
UniversalCointegration universal_cointegration(const Coring& c, const Bicomodule& m);

struct UniversalCoderivation {
    Cokernel k;
    Matrix d;  // K -> C
};
UniversalCoderivation universal_coderivation(const Coring& c);

/// Witness phi with h = (C (x) phi) lambda_N - lambda_M phi, or a certificate.
/// Throws NotACointegration when h fails its equations.
MapSolution is_inner_coint(const Coring& c, const Bicomodule& n, const Bicomodule& m, const Matrix& h);
/// Witness gamma for g, or a certificate. Throws NotACoderivation.
MapSolution is_inner_coder(const Coring& c, const Bicomodule& m, const Matrix& g);

/// Bicomodule map Lambda: C (x) C -> C with Lambda Delta = id, or a certificate.
MapSolution cosep_witness(const Coring& c);
/// Checks the three splitting identities of a candidate Lambda.
bool is_splitting_witness(const Coring& c, const Matrix& lambda);

/// upsilon = (eps (x) M)(Lambda (x) M)(C (x) lambda_M): C (x) M -> M.
/// Throws InvalidWitness if Lambda fails its identities.
Matrix maschke_retraction(const Coring& c, const Matrix& lambda, const Bicomodule& m);

}  // namespace cosep

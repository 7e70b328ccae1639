#include "cosep/coextension.hpp"

#include <string>

#include "cosep/error.hpp"
#include "cosep/linalg.hpp"

namespace cosep {

namespace {

Matrix id(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

void require_base(const Coextension& e) {
    if (!e.a.algebra()->is_base_field() || !e.c.algebra()->is_base_field())
        throw Error(ErrorCode::CoalgebraMismatch, "coextensions need coalgebras over the base field");
    if (!(e.a.field() == e.c.field())) throw Error(ErrorCode::CoalgebraMismatch, "A and C live over different fields");
    require_shape(e.phi.rows() == e.c.dim() && e.phi.cols() == e.a.dim(), "phi must be dim C x dim A");
}

void require_valid(const Coextension& e, const Bicomodule& m) {
    if (!check_bicomodule(e.a, m).passed())
        throw Error(ErrorCode::InvalidBicomodule, "bicomodule " + m.name + " fails the A-bicomodule axioms");
}

// C-coactions of A itself.
Matrix a_rho_c(const Coextension& e) { return corestrict_right(e, e.a.dim(), e.a.delta()); }
Matrix a_lambda_c(const Coextension& e) { return corestrict_left(e, e.a.dim(), e.a.delta()); }

// A box_C M, after checking that lambda_M lands in it.
Cotensor left_cotensor(const Coextension& e, const Bicomodule& m) {
    Cotensor d = cotensor(e.c, e.a.dim(), a_rho_c(e), m.dim(), corestrict_left(e, m.dim(), m.lambda));
    for (std::size_t j = 0; j < m.dim(); ++j)
        if (!d.space.contains(m.lambda.column(j)))
            throw Error(ErrorCode::NoFactorization, "lambda of " + m.name + " leaves A box_C M");
    return d;
}

void require_right_factorization(const Coextension& e, const Bicomodule& m) {
    Cotensor d = cotensor(e.c, m.dim(), corestrict_right(e, m.dim(), m.rho), e.a.dim(), a_lambda_c(e));
    for (std::size_t j = 0; j < m.dim(); ++j)
        if (!d.space.contains(m.rho.column(j)))
            throw Error(ErrorCode::NoFactorization, "rho of " + m.name + " leaves M box_C A");
}

// f: src -> dst right C-colinear and left C-colinear for the given C-coactions.
std::vector<MapOperator> c_bicolinear(const Coextension& e, std::size_t ds, const Matrix& rho_s, const Matrix& lam_s,
                                      std::size_t dd, const Matrix& rho_d, const Matrix& lam_d) {
    const Field& f = e.c.field();
    const std::size_t k = e.c.dim();
    MapOperator right(f, dd, ds, dd * k, ds);
    right.add(rho_d, id(f, ds));
    right.add(id(f, dd * k), rho_s, Scalar(-1), Lift::RightIdentity, k);
    MapOperator left(f, dd, ds, k * dd, ds);
    left.add(lam_d, id(f, ds));
    left.add(id(f, k * dd), lam_s, Scalar(-1), Lift::LeftIdentity, k);
    return {std::move(right), std::move(left)};
}

std::vector<MapOperator> c_coder_constraints(const Coextension& e, const Bicomodule& m) {
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim(), d = m.dim();
    auto ops = c_bicolinear(e, d, corestrict_right(e, d, m.rho), corestrict_left(e, d, m.lambda), a, a_rho_c(e),
                            a_lambda_c(e));
    MapOperator leibniz(f, a, d, a * a, d);
    leibniz.add(e.a.delta(), id(f, d));
    leibniz.add(id(f, a * a), m.rho, Scalar(-1), Lift::RightIdentity, a);
    leibniz.add(id(f, a * a), m.lambda, Scalar(-1), Lift::LeftIdentity, a);
    ops.push_back(std::move(leibniz));
    return ops;
}

// gamma: M -> C  |->  (A (x) eps gamma) lambda - (eps gamma (x) A) rho.
MapOperator c_inner_coder_operator(const Coextension& e, const Bicomodule& m) {
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim(), d = m.dim();
    MapOperator op(f, e.c.dim(), d, a, d);
    op.add(kron(id(f, a), e.c.eps()), m.lambda, Scalar(1), Lift::LeftIdentity, a);
    op.add(kron(e.c.eps(), id(f, a)), m.rho, Scalar(-1), Lift::RightIdentity, a);
    return op;
}

std::vector<MapOperator> c_coint_constraints(const Coextension& e, const Bicomodule& n, const Bicomodule& m,
                                             const Cotensor& dm) {
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim(), k = e.c.dim(), dn = n.dim(), dd = dm.dim(), mm = m.dim();
    const Matrix& incl = dm.incl;
    std::vector<MapOperator> ops;

    MapOperator right(f, dd, dn, a * mm * a, dn);
    right.add(kron(id(f, a), m.rho) * incl, id(f, dn));
    right.add(kron(incl, id(f, a)), n.rho, Scalar(-1), Lift::RightIdentity, a);
    ops.push_back(std::move(right));

    MapOperator left(f, dd, dn, k * a * mm, dn);
    left.add(kron(a_lambda_c(e), id(f, mm)) * incl, id(f, dn));
    left.add(kron(id(f, k), incl), corestrict_left(e, dn, n.lambda), Scalar(-1), Lift::LeftIdentity, k);
    ops.push_back(std::move(left));

    MapOperator leibniz(f, dd, dn, a * a * mm, dn);
    leibniz.add(kron(e.a.delta(), id(f, mm)) * incl, id(f, dn));
    leibniz.add(kron(id(f, a), m.lambda) * incl, id(f, dn), Scalar(-1));
    leibniz.add(kron(id(f, a), incl), n.lambda, Scalar(-1), Lift::LeftIdentity, a);
    ops.push_back(std::move(leibniz));
    return ops;
}

// phi': N -> M, right A-colinear and left C-colinear.
std::vector<MapOperator> c_coint_params(const Coextension& e, const Bicomodule& n, const Bicomodule& m) {
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim(), k = e.c.dim(), dn = n.dim(), mm = m.dim();
    MapOperator right(f, mm, dn, mm * a, dn);
    right.add(m.rho, id(f, dn));
    right.add(id(f, mm * a), n.rho, Scalar(-1), Lift::RightIdentity, a);
    MapOperator left(f, mm, dn, k * mm, dn);
    left.add(corestrict_left(e, mm, m.lambda), id(f, dn));
    left.add(id(f, k * mm), corestrict_left(e, dn, n.lambda), Scalar(-1), Lift::LeftIdentity, k);
    return {std::move(right), std::move(left)};
}

}  // namespace

CheckReport check_coextension(const Coextension& e) {
    CheckReport rep;
    rep.merge(check_coring(e.a), "A");
    rep.merge(check_coring(e.c), "C");
    if (!e.a.algebra()->is_base_field() || !e.c.algebra()->is_base_field()) {
        rep.fail("base field", "coalgebras must have R = k");
        return rep;
    }
    if (e.phi.rows() != e.c.dim() || e.phi.cols() != e.a.dim()) {
        rep.fail("phi shape", std::to_string(e.phi.rows()) + "x" + std::to_string(e.phi.cols()));
        return rep;
    }
    Matrix lhs = kron(e.phi, e.phi) * e.a.delta();
    Matrix rhs = e.c.delta() * e.phi;
    for (std::size_t j = 0; j < e.a.dim(); ++j)
        if (lhs.column(j) != rhs.column(j)) rep.fail("phi comultiplicative", "a" + std::to_string(j));
    Matrix counit = e.c.eps() * e.phi;
    for (std::size_t j = 0; j < e.a.dim(); ++j)
        if (counit.column(j) != e.a.eps().column(j)) rep.fail("phi counital", "a" + std::to_string(j));
    return rep;
}

Cotensor cotensor(const Coring& c, std::size_t dim_x, const Matrix& rho_x, std::size_t dim_y, const Matrix& lambda_y) {
    const Field& f = c.field();
    const std::size_t k = c.dim();
    require_shape(rho_x.rows() == dim_x * k && rho_x.cols() == dim_x, "cotensor: rho_X shape");
    require_shape(lambda_y.rows() == k * dim_y && lambda_y.cols() == dim_y, "cotensor: lambda_Y shape");
    Matrix eq = kron(rho_x, id(f, dim_y)) - kron(id(f, dim_x), lambda_y);
    Cotensor out;
    out.space = nullspace(eq);
    out.incl = out.space.basis().transpose();
    out.retr = Matrix::zero(f, out.space.dim(), dim_x * dim_y);
    for (std::size_t i = 0; i < out.space.dim(); ++i) out.retr.set(i, out.space.pivots()[i], Scalar(1));
    return out;
}

Matrix corestrict_right(const Coextension& e, std::size_t dim_m, const Matrix& rho) {
    return kron(id(e.a.field(), dim_m), e.phi) * rho;
}

Matrix corestrict_left(const Coextension& e, std::size_t dim_m, const Matrix& lambda) {
    return kron(e.phi, id(e.a.field(), dim_m)) * lambda;
}

DeltaBar delta_bar(const Coextension& e) {
    require_base(e);
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim();
    DeltaBar out;
    out.d = cotensor(e.c, a, a_rho_c(e), a, a_lambda_c(e));
    const Matrix& incl = out.d.incl;
    const Matrix& retr = out.d.retr;
    out.delta_bar = retr * e.a.delta();
    if (!(incl * out.delta_bar == e.a.delta())) throw Error(ErrorCode::NotCorestrictable, "Delta_A leaves A box_C A");

    Matrix lam = kron(e.a.delta(), id(f, a)) * incl;   // D -> A (x) A (x) A
    Matrix rho = kron(id(f, a), e.a.delta()) * incl;
    Matrix lam_d = kron(id(f, a), retr) * lam;
    Matrix rho_d = kron(retr, id(f, a)) * rho;
    if (!(kron(id(f, a), incl) * lam_d == lam) || !(kron(incl, id(f, a)) * rho_d == rho))
        throw Error(ErrorCode::NotCorestrictable, "A-coactions leave A box_C A");
    out.bicomodule = make_bicomodule(e.a, "A box_C A", Bimodule::free_over_base(e.a.algebra(), out.d.dim()), rho_d,
                                     lam_d);
    return out;
}

CheckReport delta_bar_residuals(const Coextension& e) {
    CheckReport rep;
    DeltaBar db;
    try {
        db = delta_bar(e);
    } catch (const Error& err) {
        rep.fail("corestriction", err.what());
        return rep;
    }
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim();
    Matrix full = db.d.incl * db.delta_bar;
    Matrix left = kron(id(f, a), full) * full;
    Matrix right = kron(full, id(f, a)) * full;
    for (std::size_t j = 0; j < a; ++j)
        if (left.column(j) != right.column(j)) rep.fail("Delta_bar coassociativity", "a" + std::to_string(j));
    Matrix phi_eps = e.c.eps() * e.phi;
    Matrix l = kron(phi_eps, id(f, a)) * full;
    Matrix r = kron(id(f, a), phi_eps) * full;
    for (std::size_t j = 0; j < a; ++j) {
        if (l.column(j) != id(f, a).column(j)) rep.fail("(phi box A) Delta_bar = A", "a" + std::to_string(j));
        if (r.column(j) != id(f, a).column(j)) rep.fail("(A box phi) Delta_bar = A", "a" + std::to_string(j));
    }
    return rep;
}

MapSolution coflat_check(const Coring& c, std::size_t dim_m, const Matrix& lambda) {
    const Field& f = c.field();
    const std::size_t k = c.dim();
    if (!c.algebra()->is_base_field()) throw Error(ErrorCode::CoalgebraMismatch, "coflat_check needs R = k");
    require_shape(lambda.rows() == k * dim_m && lambda.cols() == dim_m, "coflat_check: lambda shape");
    bool coassoc = kron(c.delta(), id(f, dim_m)) * lambda == kron(id(f, k), lambda) * lambda;
    bool counital = (kron(c.eps(), id(f, dim_m)) * lambda).is_identity();
    if (!coassoc || !counital) throw Error(ErrorCode::InvalidComodule, "left C-coaction fails its axioms");

    MapOperator colinear(f, dim_m, k * dim_m, k * dim_m, k * dim_m);
    colinear.add(lambda, id(f, k * dim_m));
    colinear.add(id(f, k * dim_m), kron(c.delta(), id(f, dim_m)), Scalar(-1), Lift::LeftIdentity, k);
    MapOperator retract(f, dim_m, k * dim_m, dim_m, dim_m);
    retract.add(id(f, dim_m), lambda);
    return solve_map_affine(f, dim_m, k * dim_m, {colinear}, retract, id(f, dim_m));
}

MapSpace c_coder_space(const Coextension& e, const Bicomodule& m) {
    require_base(e);
    require_valid(e, m);
    left_cotensor(e, m);
    require_right_factorization(e, m);
    return solve_maps(e.a.field(), e.a.dim(), m.dim(), c_coder_constraints(e, m));
}

MapSpace c_inner_coder_space(const Coextension& e, const Bicomodule& m) {
    require_base(e);
    require_valid(e, m);
    left_cotensor(e, m);
    require_right_factorization(e, m);
    auto params = c_bicolinear(e, m.dim(), corestrict_right(e, m.dim(), m.rho), corestrict_left(e, m.dim(), m.lambda),
                               e.c.dim(), e.c.delta(), e.c.delta());
    MapSpace gammas = solve_maps(e.a.field(), e.c.dim(), m.dim(), params);
    return image_of(c_inner_coder_operator(e, m), gammas);
}

MapSpace c_coint_space(const Coextension& e, const Bicomodule& n, const Bicomodule& m) {
    require_base(e);
    require_valid(e, n);
    require_valid(e, m);
    Cotensor dm = left_cotensor(e, m);
    left_cotensor(e, n);
    return solve_maps(e.a.field(), dm.dim(), n.dim(), c_coint_constraints(e, n, m, dm));
}

MapSpace c_inner_coint_space(const Coextension& e, const Bicomodule& n, const Bicomodule& m) {
    require_base(e);
    require_valid(e, n);
    require_valid(e, m);
    Cotensor dm = left_cotensor(e, m);
    left_cotensor(e, n);
    const Field& f = e.a.field();
    MapSpace params = solve_maps(f, m.dim(), n.dim(), c_coint_params(e, n, m));
    MapOperator op(f, m.dim(), n.dim(), dm.dim(), n.dim());
    op.add(dm.retr, n.lambda, Scalar(1), Lift::LeftIdentity, e.a.dim());
    op.add(dm.retr * m.lambda, id(f, n.dim()), Scalar(-1));
    return image_of(op, params);
}

MapSolution separable_coext(const Coextension& e) {
    require_base(e);
    if (!coflat_check(e.c, e.a.dim(), a_lambda_c(e)).found())
        throw Error(ErrorCode::HypothesisNotMet, "A is not coflat (injective) as a left C-comodule");
    DeltaBar db = delta_bar(e);
    Bicomodule reg = regular_bicomodule(e.a);
    const Field& f = e.a.field();
    const std::size_t a = e.a.dim();
    MapOperator retract(f, a, db.d.dim(), a, a);
    retract.add(id(f, a), db.delta_bar);
    return solve_map_affine(f, a, db.d.dim(), hom_constraints(e.a, db.bicomodule, reg, HomKind::Full), retract,
                            id(f, a));
}

}  // namespace cosep

#include "cosep/cointegration.hpp"

#include "cosep/error.hpp"

namespace cosep {

namespace {

Matrix id(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

bool satisfies(const std::vector<MapOperator>& ops, const Matrix& f) {
    for (const auto& op : ops) {
        if (f.rows() != op.f_rows() || f.cols() != op.f_cols()) return false;
        if (!op.apply(f).is_zero()) return false;
    }
    return true;
}

}  // namespace

std::vector<MapOperator> coder_constraints(const Coring& c, const Bicomodule& m) {
    const Field& f = c.field();
    const std::size_t n = c.dim(), d = m.dim();
    auto ops = bilinear_constraints(m.module, c.bimodule());
    const TensorChain& cc = c.power(2);
    TensorChain mc = TensorChain::of({&m.module, &c.bimodule()});
    TensorChain cm = c.chain(1, m.module);
    MapOperator leibniz(f, n, d, cc.dim(), d);
    leibniz.add(c.delta(), id(f, d));
    leibniz.add(cc.proj(), mc.represent(m.rho), Scalar(-1), Lift::RightIdentity, n);
    leibniz.add(cc.proj(), cm.represent(m.lambda), Scalar(-1), Lift::LeftIdentity, n);
    ops.push_back(std::move(leibniz));
    return ops;
}

MapOperator inner_coder_operator(const Coring& c, const Bicomodule& m) {
    const Field& f = c.field();
    const std::size_t n = c.dim(), d = m.dim(), r = c.algebra()->dim();
    TensorChain mc = TensorChain::of({&m.module, &c.bimodule()});
    TensorChain cm = c.chain(1, m.module);
    MapOperator op(f, r, d, n, d);
    op.add(right_unitor(c.bimodule()), cm.represent(m.lambda), Scalar(1), Lift::LeftIdentity, n);
    op.add(left_unitor(c.bimodule()), mc.represent(m.rho), Scalar(-1), Lift::RightIdentity, n);
    return op;
}

MapSpace coder_space(const Coring& c, const Bicomodule& m) {
    return solve_maps(c.field(), c.dim(), m.dim(), coder_constraints(c, m));
}

MapSpace inner_coder_space(const Coring& c, const Bicomodule& m) {
    MapSpace params = bilinear_maps(m.module, Bimodule::regular(c.algebra()));
    return image_of(inner_coder_operator(c, m), params);
}

std::vector<MapOperator> coint_constraints(const Coring& c, const Bicomodule& n, const Bicomodule& m) {
    const Field& f = c.field();
    const std::size_t k = c.dim();
    CofreeTerm x = cofree_term(c, m.right(), 1);
    const Bicomodule& xb = x.bicomodule;
    auto ops = bilinear_constraints(n.module, xb.module);
    ops.push_back(right_colinear_op(c, n.module, n.rho, xb.module, xb.rho));

    TensorChain ccm = c.chain(2, m.module);
    TensorChain cn = c.chain(1, n.module);
    TensorChain cm = c.chain(1, m.module);
    MapOperator leibniz(f, xb.dim(), n.dim(), ccm.dim(), n.dim());
    leibniz.add(ccm.project(x.chain.lift(kron(c.delta_rep(), id(f, m.dim())))), id(f, n.dim()));
    leibniz.add(ccm.project(x.chain.lift(kron(id(f, k), cm.represent(m.lambda)))), id(f, n.dim()), Scalar(-1));
    Matrix regroup = ccm.project(kron(id(f, k), x.chain.sect()));
    leibniz.add(regroup, cn.represent(n.lambda), Scalar(-1), Lift::LeftIdentity, k);
    ops.push_back(std::move(leibniz));
    return ops;
}

MapOperator inner_coint_operator(const Coring& c, const Bicomodule& n, const Bicomodule& m) {
    const Field& f = c.field();
    TensorChain cm = c.chain(1, m.module);
    TensorChain cn = c.chain(1, n.module);
    MapOperator op(f, m.dim(), n.dim(), cm.dim(), n.dim());
    op.add(cm.proj(), cn.represent(n.lambda), Scalar(1), Lift::LeftIdentity, c.dim());
    op.add(m.lambda, id(f, n.dim()), Scalar(-1));
    return op;
}

MapSpace coint_space(const Coring& c, const Bicomodule& n, const Bicomodule& m) {
    return solve_maps(c.field(), c.chain(1, m.module).dim(), n.dim(), coint_constraints(c, n, m));
}

MapSpace inner_coint_space(const Coring& c, const Bicomodule& n, const Bicomodule& m) {
    MapSpace params = hom_space(c, n, m, HomKind::RightColinear);
    return image_of(inner_coint_operator(c, n, m), params);
}

Matrix coint_to_coder(const Coring& c, const Bicomodule&, const Matrix& h) {
    return counit_right(c, c.bimodule()) * h;
}

Matrix coder_to_coint(const Coring& c, const Bicomodule& m, const Matrix& g) {
    TensorChain mc = TensorChain::of({&m.module, &c.bimodule()});
    return c.power(2).project(kron(g, id(c.field(), c.dim())) * mc.represent(m.rho));
}

UniversalCointegration universal_cointegration(const Coring& c, const Bicomodule& m) {
    Bicomodule ind = induced(c, m.right());
    Cokernel k = cokernel(c, m, ind, m.lambda);
    Matrix e = id(c.field(), ind.dim()) - m.lambda * counit_left(c, m.module);
    Matrix w = e * k.sect;
    k.module.name = "K(" + m.name + ")";
    return {std::move(k), std::move(w)};
}

UniversalCoderivation universal_coderivation(const Coring& c) {
    Bicomodule reg = regular_bicomodule(c);
    UniversalCointegration u = universal_cointegration(c, reg);
    Matrix d = counit_left(c, c.bimodule()) * u.w - counit_right(c, c.bimodule()) * u.w;
    return {std::move(u.k), std::move(d)};
}

MapSolution is_inner_coint(const Coring& c, const Bicomodule& n, const Bicomodule& m, const Matrix& h) {
    if (!satisfies(coint_constraints(c, n, m), h)) {
        throw Error(ErrorCode::NotACointegration, "map " + n.name + " -> C(x)" + m.name + " is not a cointegration");
    }
    MapOperator op = inner_coint_operator(c, n, m);
    std::vector<MapOperator> ops = hom_constraints(c, n, m, HomKind::RightColinear);
    return solve_map_affine(c.field(), m.dim(), n.dim(), ops, op, h);
}

MapSolution is_inner_coder(const Coring& c, const Bicomodule& m, const Matrix& g) {
    if (!satisfies(coder_constraints(c, m), g)) {
        throw Error(ErrorCode::NotACoderivation, "map " + m.name + " -> C is not a coderivation");
    }
    Bimodule r = Bimodule::regular(c.algebra());
    return solve_map_affine(c.field(), r.dim(), m.dim(), bilinear_constraints(m.module, r),
                            inner_coder_operator(c, m), g);
}

MapSolution cosep_witness(const Coring& c) {
    Bicomodule reg = regular_bicomodule(c);
    Bicomodule ind = induced(c, reg.right());
    MapOperator split(c.field(), c.dim(), ind.dim(), c.dim(), c.dim());
    split.add(id(c.field(), c.dim()), c.delta());
    return solve_map_affine(c.field(), c.dim(), ind.dim(), hom_constraints(c, ind, reg, HomKind::Full), split,
                            id(c.field(), c.dim()));
}

bool is_splitting_witness(const Coring& c, const Matrix& lambda) {
    Bicomodule reg = regular_bicomodule(c);
    Bicomodule ind = induced(c, reg.right());
    if (lambda.rows() != c.dim() || lambda.cols() != ind.dim()) return false;
    return is_morphism(c, ind, reg, lambda) && (lambda * c.delta()).is_identity();
}

Matrix maschke_retraction(const Coring& c, const Matrix& lambda, const Bicomodule& m) {
    if (!is_splitting_witness(c, lambda)) throw Error(ErrorCode::InvalidWitness, "Lambda fails the splitting identities");
    const Field& f = c.field();
    const std::size_t n = c.dim(), d = m.dim();
    TensorChain cm = c.chain(1, m.module);
    Matrix step = kron(id(f, n), cm.represent(m.lambda));         // C (x) lambda_M
    step = kron(lambda * c.power(2).proj(), id(f, d)) * step;      // Lambda (x) M
    step = left_unitor(m.module) * kron(c.eps(), id(f, d)) * step;  // eps (x) M
    return cm.lift(step);
}

}  // namespace cosep

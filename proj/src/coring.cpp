#include "cosep/coring.hpp"

#include "cosep/error.hpp"
#include "cosep/linalg.hpp"

namespace cosep {

namespace {

Matrix id(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

// Lists the columns where two maps differ, e.g. "c0,c2".
std::string differing_columns(const Matrix& a, const Matrix& b, const char* prefix) {
    Matrix d = (a - b).transpose();
    std::string out;
    for (std::size_t j = 0; j < d.rows(); ++j) {
        if (d.row(j).empty()) continue;
        if (!out.empty()) out += ",";
        out += prefix + std::to_string(j);
    }
    return out;
}

void compare(CheckReport& rep, const char* axiom, const Matrix& lhs, const Matrix& rhs, const char* prefix) {
    if (!(lhs == rhs)) rep.fail(axiom, differing_columns(lhs, rhs, prefix));
}

void check_bilinear(CheckReport& rep, const char* what, const Bimodule& src, const Bimodule& dst, const Matrix& f,
                    const char* prefix) {
    const std::size_t r = src.algebra()->dim();
    for (std::size_t i = 0; i < r; ++i) {
        const std::string& lab = src.algebra()->labels()[i];
        if (!(f * src.left(i) == dst.left(i) * f)) rep.fail(std::string(what) + " left-linear", lab + " " + prefix);
        if (!(f * src.right(i) == dst.right(i) * f)) rep.fail(std::string(what) + " right-linear", lab + " " + prefix);
    }
}

bool shape_ok(CheckReport& rep, const char* what, const Matrix& m, std::size_t rows, std::size_t cols) {
    if (m.rows() == rows && m.cols() == cols) return true;
    rep.fail(std::string(what) + " shape", std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " expected " +
                                               std::to_string(rows) + "x" + std::to_string(cols));
    return false;
}

}  // namespace

Coring::Coring(Bimodule c, Matrix delta_flat, Matrix eps) : c_(std::move(c)), delta_in_(std::move(delta_flat)), eps_(std::move(eps)) {
    const std::size_t n = c_.dim(), r = c_.algebra()->dim();
    if (delta_in_.rows() != n * n || delta_in_.cols() != n) {
        throw Error(ErrorCode::InvalidCoring, "comultiplication must be a " + std::to_string(n * n) + "x" +
                                                  std::to_string(n) + " matrix");
    }
    if (eps_.rows() != r || eps_.cols() != n) {
        throw Error(ErrorCode::InvalidCoring, "counit must be a " + std::to_string(r) + "x" + std::to_string(n) + " matrix");
    }
    delta_ = power(2).project(delta_in_);
}

Matrix Coring::delta_rep() const { return power(2).represent(delta_); }

const TensorChain& Coring::power(std::size_t n) const {
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "power(0) is R, not a chain");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& p = cache_->powers;
    if (p.empty()) p.push_back(std::make_unique<TensorChain>(TensorChain::single(c_)));
    while (p.size() < n) p.push_back(std::make_unique<TensorChain>(p.back()->append(c_)));
    return *p[n - 1];
}

TensorChain Coring::chain(std::size_t n, const Bimodule& m) const {
    if (n == 0) return TensorChain::single(m);
    return power(n).append(m);
}

bool operator==(const Coring& a, const Coring& b) {
    return same_algebra(*a.algebra(), *b.algebra()) && a.dim() == b.dim() &&
           a.c_.left_actions() == b.c_.left_actions() && a.c_.right_actions() == b.c_.right_actions() &&
           a.delta_ == b.delta_ && a.eps_ == b.eps_;
}

Bicomodule make_bicomodule(const Coring& c, std::string name, Bimodule m, const Matrix& rho_flat,
                           const Matrix& lambda_flat) {
    require_same_algebra(c.bimodule(), m, "bicomodule");
    const std::size_t d = m.dim(), n = c.dim();
    if (rho_flat.rows() != d * n || rho_flat.cols() != d || lambda_flat.rows() != n * d || lambda_flat.cols() != d) {
        throw Error(ErrorCode::InvalidBicomodule, "coaction matrices of '" + name + "' must be " +
                                                      std::to_string(d * n) + "x" + std::to_string(d));
    }
    TensorChain mc = TensorChain::of({&m, &c.bimodule()});
    TensorChain cm = c.chain(1, m);
    Matrix rho = mc.project(rho_flat), lambda = cm.project(lambda_flat);
    return {std::move(name), std::move(m), std::move(rho), std::move(lambda)};
}

CheckReport check_coring(const Coring& c) {
    CheckReport rep;
    rep.degenerate = c.degenerate();
    const Algebra& r = *c.algebra();
    const Field& f = c.field();
    const std::size_t n = c.dim();
    rep.merge(check_algebra(r), "algebra ");
    rep.merge(check_bimodule(r, c.bimodule()), "bimodule ");
    if (!rep.passed()) return rep;

    const TensorChain& cc = c.power(2);
    const TensorChain& ccc = c.power(3);
    check_bilinear(rep, "comultiplication", c.bimodule(), cc.module(), c.delta(), "");
    check_bilinear(rep, "counit", c.bimodule(), Bimodule::regular(c.algebra()), c.eps(), "");

    Matrix drep = c.delta_rep();
    Matrix d_left = ccc.project(kron(drep, id(f, n))) * drep;   // (Delta (x) C) Delta
    Matrix d_right = ccc.project(kron(id(f, n), drep)) * drep;  // (C (x) Delta) Delta
    compare(rep, "coassociativity", d_left, d_right, "c");

    compare(rep, "left counit", left_unitor(c.bimodule()) * kron(c.eps(), id(f, n)) * drep, id(f, n), "c");
    compare(rep, "right counit", right_unitor(c.bimodule()) * kron(id(f, n), c.eps()) * drep, id(f, n), "c");
    return rep;
}

CheckReport check_comodule(const Coring& c, const RightComodule& m) {
    CheckReport rep;
    const Field& f = c.field();
    const std::size_t d = m.dim(), n = c.dim();
    if (!same_algebra(*c.algebra(), *m.module.algebra())) {
        rep.fail("algebra", "comodule '" + m.name + "' is over another algebra");
        return rep;
    }
    rep.merge(check_bimodule(*c.algebra(), m.module), "bimodule ");
    TensorChain mc = TensorChain::of({&m.module, &c.bimodule()});
    if (!shape_ok(rep, "rho", m.rho, mc.dim(), d) || !rep.passed()) return rep;
    check_bilinear(rep, "rho", m.module, mc.module(), m.rho, "");

    TensorChain mcc = mc.append(c.bimodule());
    Matrix rrep = mc.represent(m.rho);
    Matrix lhs = mcc.project(kron(rrep, id(f, n))) * rrep;      // (rho (x) C) rho
    Matrix rhs = mcc.project(kron(id(f, d), c.delta_rep())) * rrep;  // (M (x) Delta) rho
    compare(rep, "right coassociativity", lhs, rhs, "m");
    compare(rep, "right counit", right_unitor(m.module) * kron(id(f, d), c.eps()) * rrep, id(f, d), "m");
    return rep;
}

CheckReport check_bicomodule(const Coring& c, const Bicomodule& m) {
    CheckReport rep = check_comodule(c, m.right());
    if (!rep.passed()) return rep;
    const Field& f = c.field();
    const std::size_t d = m.dim(), n = c.dim();
    TensorChain cm = c.chain(1, m.module);
    if (!shape_ok(rep, "lambda", m.lambda, cm.dim(), d)) return rep;
    check_bilinear(rep, "lambda", m.module, cm.module(), m.lambda, "");

    TensorChain ccm = c.chain(2, m.module);
    Matrix lrep = cm.represent(m.lambda);
    Matrix lhs = ccm.project(kron(id(f, n), lrep)) * lrep;            // (C (x) lambda) lambda
    Matrix rhs = ccm.project(kron(c.delta_rep(), id(f, d))) * lrep;  // (Delta (x) M) lambda
    compare(rep, "left coassociativity", lhs, rhs, "m");
    compare(rep, "left counit", left_unitor(m.module) * kron(c.eps(), id(f, d)) * lrep, id(f, d), "m");

    TensorChain mc = TensorChain::of({&m.module, &c.bimodule()});
    TensorChain cmc = cm.append(c.bimodule());
    Matrix rrep = mc.represent(m.rho);
    Matrix a = cmc.project(kron(lrep, id(f, n))) * rrep;  // (lambda (x) C) rho
    Matrix b = cmc.project(kron(id(f, n), rrep)) * lrep;  // (C (x) rho) lambda
    compare(rep, "compatibility", a, b, "m");
    return rep;
}

Bicomodule regular_bicomodule(const Coring& c) { return {"regular", c.bimodule(), c.delta(), c.delta()}; }

Bicomodule zero_bicomodule(const Coring& c) {
    const Field& f = c.field();
    return {"zero", Bimodule::zero(c.algebra()), Matrix::zero(f, 0, 0), Matrix::zero(f, 0, 0)};
}

CofreeTerm cofree_term(const Coring& c, const RightComodule& nmod, std::size_t power) {
    if (power == 0) throw Error(ErrorCode::DimensionMismatch, "cofree_term needs power >= 1");
    const Field& f = c.field();
    const std::size_t n = c.dim();
    TensorChain x = c.chain(power, nmod.module);
    const std::size_t cn_flat = c.power(power).flat_dim();
    const std::size_t rest = (power == 1 ? 1 : c.power(power - 1).flat_dim()) * nmod.dim();

    TensorChain cx = TensorChain::of({&c.bimodule(), &x.module()});
    Matrix lam = x.lift(kron(c.delta_rep(), id(f, rest)));
    if (!x.is_flat()) lam = kron(id(f, n), x.proj()) * lam;
    lam = cx.project(lam);

    TensorChain xc = TensorChain::of({&x.module(), &c.bimodule()});
    TensorChain nc = TensorChain::of({&nmod.module, &c.bimodule()});
    Matrix rho = x.lift(kron(id(f, cn_flat), nc.represent(nmod.rho)));
    if (!x.is_flat()) rho = kron(x.proj(), id(f, n)) * rho;
    rho = xc.project(rho);

    std::string name = power == 1 ? "induced:" + nmod.name : "C^" + std::to_string(power) + ":" + nmod.name;
    Bicomodule b{std::move(name), x.module(), std::move(rho), std::move(lam)};
    return {std::move(x), std::move(b)};
}

Bicomodule induced(const Coring& c, const RightComodule& n) { return cofree_term(c, n, 1).bicomodule; }

MapOperator right_colinear_op(const Coring& c, const Bimodule& src, const Matrix& src_rho, const Bimodule& dst,
                              const Matrix& dst_rho) {
    const Field& f = c.field();
    TensorChain dc = TensorChain::of({&dst, &c.bimodule()});
    TensorChain sc = TensorChain::of({&src, &c.bimodule()});
    MapOperator op(f, dst.dim(), src.dim(), dc.dim(), src.dim());
    op.add(dst_rho, id(f, src.dim()));
    op.add(dc.proj(), sc.represent(src_rho), Scalar(-1), Lift::RightIdentity, c.dim());
    return op;
}

MapOperator left_colinear_op(const Coring& c, const Bimodule& src, const Matrix& src_lambda, const Bimodule& dst,
                             const Matrix& dst_lambda) {
    const Field& f = c.field();
    TensorChain cd = c.chain(1, dst);
    TensorChain cs = c.chain(1, src);
    MapOperator op(f, dst.dim(), src.dim(), cd.dim(), src.dim());
    op.add(dst_lambda, id(f, src.dim()));
    op.add(cd.proj(), cs.represent(src_lambda), Scalar(-1), Lift::LeftIdentity, c.dim());
    return op;
}

std::vector<MapOperator> hom_constraints(const Coring& c, const Bicomodule& src, const Bicomodule& dst, HomKind kind) {
    std::vector<MapOperator> ops = bilinear_constraints(src.module, dst.module);
    if (kind == HomKind::RightColinear || kind == HomKind::Full)
        ops.push_back(right_colinear_op(c, src.module, src.rho, dst.module, dst.rho));
    if (kind == HomKind::LeftColinear || kind == HomKind::Full)
        ops.push_back(left_colinear_op(c, src.module, src.lambda, dst.module, dst.lambda));
    return ops;
}

MapSpace hom_space(const Coring& c, const Bicomodule& src, const Bicomodule& dst, HomKind kind) {
    require_same_algebra(c.bimodule(), src.module, "hom_space");
    require_same_algebra(c.bimodule(), dst.module, "hom_space");
    return solve_maps(c.field(), dst.dim(), src.dim(), hom_constraints(c, src, dst, kind));
}

MapSpace hom_space(const Coring& c, const RightComodule& src, const RightComodule& dst) {
    auto ops = bilinear_constraints(src.module, dst.module);
    ops.push_back(right_colinear_op(c, src.module, src.rho, dst.module, dst.rho));
    return solve_maps(c.field(), dst.dim(), src.dim(), ops);
}

bool is_morphism(const Coring& c, const Bicomodule& src, const Bicomodule& dst, const Matrix& f, HomKind kind) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
    for (const auto& op : hom_constraints(c, src, dst, kind)) {
        if (!op.apply(f).is_zero()) return false;
    }
    return true;
}

Cokernel cokernel(const Coring& c, const Bicomodule& src, const Bicomodule& dst, const Matrix& f) {
    if (!is_morphism(c, src, dst, f)) {
        throw Error(ErrorCode::NotAMorphism, "cokernel: map " + src.name + " -> " + dst.name +
                                                 " is not a bicomodule morphism");
    }
    const Field& fld = c.field();
    const std::size_t n = c.dim();
    Quotient q = quotient(dst.dim(), image(f));
    std::vector<Matrix> l, r;
    for (const auto& a : dst.module.left_actions()) l.push_back(q.proj * a * q.sect);
    for (const auto& a : dst.module.right_actions()) r.push_back(q.proj * a * q.sect);
    Bimodule k(dst.module.algebra(), q.dim(), std::move(l), std::move(r));

    TensorChain nc = TensorChain::of({&dst.module, &c.bimodule()});
    TensorChain cn = c.chain(1, dst.module);
    TensorChain kc = TensorChain::of({&k, &c.bimodule()});
    TensorChain ck = c.chain(1, k);
    Matrix rho = kc.project(kron(q.proj, id(fld, n)) * nc.represent(dst.rho) * q.sect);
    Matrix lam = ck.project(kron(id(fld, n), q.proj) * cn.represent(dst.lambda) * q.sect);
    Bicomodule km{"coker", std::move(k), std::move(rho), std::move(lam)};
    return {std::move(km), std::move(q.proj), std::move(q.sect)};
}

Matrix theta(const Coring& c, const Bicomodule& m) {
    Bicomodule target = induced(c, m.right());
    if (!is_morphism(c, m, target, m.lambda)) {
        throw Error(ErrorCode::NotAMorphism, "left coaction of '" + m.name + "' is not a bicomodule morphism");
    }
    return m.lambda;
}

Matrix counit_left(const Coring& c, const Bimodule& n) {
    TensorChain cn = c.chain(1, n);
    return cn.lift(left_unitor(n) * kron(c.eps(), id(c.field(), n.dim())));
}

Matrix counit_right(const Coring& c, const Bimodule& n) {
    TensorChain nc = TensorChain::of({&n, &c.bimodule()});
    return nc.lift(right_unitor(n) * kron(id(c.field(), n.dim()), c.eps()));
}

Matrix adjunction_forward(const Coring& c, const Bicomodule&, const RightComodule& n, const Matrix& f) {
    return counit_left(c, n.module) * f;
}

Matrix adjunction_backward(const Coring& c, const Bicomodule& m, const RightComodule& n, const Matrix& g) {
    TensorChain cn = c.chain(1, n.module);
    TensorChain cm = c.chain(1, m.module);
    return cn.project(kron(id(c.field(), c.dim()), g) * cm.represent(m.lambda));
}

}  // namespace cosep

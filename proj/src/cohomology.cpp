#include "cosep/cohomology.hpp"

#include <string>

#include "cosep/cointegration.hpp"
#include "cosep/error.hpp"
#include "cosep/linalg.hpp"

namespace cosep {

namespace {

Matrix id(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

Scalar sign(std::size_t k) { return k % 2 == 0 ? Scalar(1) : Scalar(-1); }

void check_budget(std::size_t dim, std::size_t budget, const std::string& what) {
    if (dim > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    what + " has dimension " + std::to_string(dim) + ", budget is " + std::to_string(budget));
    }
}

// Flat dimension of C^n.
std::size_t power_flat(const Coring& c, std::size_t n) { return n == 0 ? 1 : c.power(n).flat_dim(); }

// Delta at C factor j of the flat C^n (x) M, n factors.
Matrix delta_at(const Coring& c, std::size_t n, std::size_t j, std::size_t dim_m) {
    const Field& f = c.field();
    std::size_t rest = power_flat(c, n - 1 - j) * dim_m;
    return kron({id(f, power_flat(c, j)), c.delta_rep(), id(f, rest)});
}

// lambda_M inserted after the n C factors of the flat C^n (x) M.
Matrix lambda_at(const Coring& c, std::size_t n, const Bicomodule& m) {
    return kron(id(c.field(), power_flat(c, n)), c.chain(1, m.module).represent(m.lambda));
}

// Chain for C^n (x) M; n = 0 is M itself.
TensorChain term_chain(const Coring& c, std::size_t n, const Bicomodule& m) { return c.chain(n, m.module); }

Bicomodule term_bicomodule(const Coring& c, std::size_t n, const Bicomodule& m) {
    return n == 0 ? m : cofree_term(c, m.right(), n).bicomodule;
}

}  // namespace

bool ResolutionSegment::composites_vanish() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!(maps[i + 1] * maps[i]).is_zero()) return false;
    return true;
}

bool ResolutionSegment::homotopy_holds() const {
    if (homotopy.empty()) return true;
    if (!(homotopy[0] * maps[0]).is_identity()) return false;
    for (std::size_t i = 1; i < maps.size() && i < homotopy.size(); ++i) {
        Matrix s = maps[i - 1] * homotopy[i - 1] + homotopy[i] * maps[i];
        if (!s.is_identity()) return false;
    }
    return true;
}

bool ResolutionSegment::forgotten_exact() const {
    if (maps.empty()) return true;
    if (rank(maps[0]) != terms[0].dim()) return false;
    for (std::size_t i = 1; i < maps.size(); ++i) {
        std::size_t ker = terms[i].dim() - rank(maps[i]);
        if (ker != rank(maps[i - 1])) return false;
    }
    return true;
}

ResolutionSegment resolution(const Coring& c, const Bicomodule& m, std::size_t n_max, std::size_t budget) {
    const Field& f = c.field();
    const std::size_t dm = m.dim(), dc = c.dim();
    for (std::size_t i = 0; i <= n_max + 1; ++i)
        check_budget(power_flat(c, i) * dm, budget, "resolution term " + std::to_string(i));

    ResolutionSegment seg;
    std::vector<TensorChain> chains;
    for (std::size_t i = 0; i <= n_max + 1; ++i) {
        chains.push_back(term_chain(c, i, m));
        seg.terms.push_back(term_bicomodule(c, i, m));
        seg.terms.back().name = i == 0 ? m.name : "C^" + std::to_string(i) + ":" + m.name;
    }
    seg.maps.push_back(m.lambda);

    // flat d^0 = Delta (x) M - C (x) lambda_M, then d^n = C (x) d^{n-1} + (-1)^n Delta at factor 0
    Matrix flat = delta_at(c, 1, 0, dm) - lambda_at(c, 1, m);
    for (std::size_t n = 0; n + 1 <= n_max; ++n) {
        if (n > 0) {
            Matrix next = kron(id(f, dc), flat);
            Matrix d0 = delta_at(c, n + 1, 0, dm);
            flat = n % 2 == 0 ? next + d0 : next - d0;
        }
        seg.maps.push_back(chains[n + 2].project(chains[n + 1].lift(flat)));
    }

    seg.homotopy.push_back(counit_left(c, m.module));
    for (std::size_t n = 1; n <= n_max; ++n) {
        // C (x)_R T_n in single-step coordinates, contracted by eps at the front
        const Bimodule& tn = seg.terms[n].module;
        TensorChain split = c.chain(1, tn);
        Matrix regroup = split.project(kron(id(f, dc), chains[n].proj())) * chains[n + 1].sect();
        Matrix u = counit_left(c, tn) * regroup;
        seg.homotopy.push_back(n % 2 == 1 ? u : u.negated());
    }
    return seg;
}

MapOperator coboundary_operator(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t degree) {
    const Field& f = c.field();
    const std::size_t dn = n.dim(), dm = m.dim();
    TensorChain src = term_chain(c, degree, m);
    TensorChain dst = term_chain(c, degree + 1, m);
    TensorChain cn = c.chain(1, n.module);
    MapOperator op(f, src.dim(), dn, dst.dim(), dn);

    for (std::size_t j = 0; j < degree; ++j)
        op.add(dst.project(src.lift(delta_at(c, degree, j, dm))), id(f, dn), sign(degree - 1 - j));

    Matrix regroup = dst.project(kron(id(f, c.dim()), src.sect()));
    op.add(regroup, cn.represent(n.lambda), sign(degree), Lift::LeftIdentity, c.dim());

    Matrix insert = degree == 0 ? m.lambda : dst.project(src.lift(lambda_at(c, degree, m)));
    op.add(insert, id(f, dn), Scalar(-1));
    return op;
}

std::size_t CochainComplex::cohomology_dim(std::size_t n) const {
    std::size_t ker = kernel_dim(n);
    return n == 0 ? ker : ker - image_dim(n - 1);
}

bool CochainComplex::squares_vanish() const {
    for (std::size_t n = 0; n + 1 < ops.size(); ++n)
        for (const auto& b : images[n].basis_maps())
            if (!ops[n + 1].apply(b).is_zero()) return false;
    return true;
}

CochainComplex cochain_complex(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t n_max,
                               std::size_t budget) {
    for (std::size_t i = 0; i <= n_max + 1; ++i)
        check_budget(term_chain(c, i, m).dim() * n.dim(), budget, "cochain term " + std::to_string(i));
    CochainComplex cx;
    for (std::size_t i = 0; i <= n_max; ++i) {
        Bicomodule x = term_bicomodule(c, i, m);
        cx.terms.push_back(hom_space(c, n, x, HomKind::RightColinear));
        cx.ops.push_back(coboundary_operator(c, n, m, i));
        cx.images.push_back(image_of(cx.ops.back(), cx.terms.back()));
    }
    return cx;
}

std::vector<std::size_t> ext_dims(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t n_max,
                                  std::size_t budget) {
    CochainComplex cx = cochain_complex(c, n, m, n_max, budget);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= n_max; ++i) out.push_back(cx.cohomology_dim(i));
    return out;
}

std::vector<std::size_t> h_dims(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t n_max,
                                std::size_t budget) {
    UniversalCointegration u = universal_cointegration(c, m);
    return ext_dims(c, n, u.k.module, n_max, budget);
}

bool shift_check(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t k, std::size_t budget) {
    auto lhs = ext_dims(c, n, m, k + 1, budget);
    auto rhs = h_dims(c, n, m, k, budget);
    return lhs[k + 1] == rhs[k];
}

MapSolution relative_injective(const Coring& c, const Bicomodule& m) {
    if (!check_bicomodule(c, m).passed()) throw Error(ErrorCode::InvalidBicomodule, "bicomodule " + m.name + " fails its axioms");
    Bicomodule ind = induced(c, m.right());
    MapOperator retract(c.field(), m.dim(), ind.dim(), m.dim(), m.dim());
    retract.add(id(c.field(), m.dim()), m.lambda);
    return solve_map_affine(c.field(), m.dim(), ind.dim(), hom_constraints(c, ind, m, HomKind::Full), retract,
                            id(c.field(), m.dim()));
}

}  // namespace cosep

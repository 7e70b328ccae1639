#include <doctest.h>

#include "cosep/coextension.hpp"
#include "cosep/cointegration.hpp"
#include "cosep/error.hpp"
#include "support/corpus.hpp"

using namespace cosep;
using namespace cosep::testing;

namespace {

std::vector<Bicomodule> coext_bicomodules(const CoextensionDefinition& d) {
    std::vector<Bicomodule> out = {regular_bicomodule(d.ext.a), zero_bicomodule(d.ext.a)};
    for (const auto& nb : d.bicomodules) out.push_back(nb.bicomodule);
    return out;
}

bool base_is_field(const Coextension& e) { return e.c.dim() == 1; }

Matrix column(const Field& f, std::initializer_list<const char*> v) {
    std::vector<Vector> rows;
    for (const char* s : v) rows.push_back({f.parse(s)});
    return Matrix::from_dense(f, rows);
}

}  // namespace

TEST_CASE("corpus coextensions validate") {
    for (const auto& name : coext_corpus()) {
        CAPTURE(name);
        auto d = load_coext(name);
        CHECK(check_coextension(d.ext).passed());
        CHECK(delta_bar_residuals(d.ext).passed());
        for (const auto& m : coext_bicomodules(d)) CHECK(check_bicomodule(d.ext.a, m).passed());
    }
    auto d = load_coext("coext_grouplike");
    Coextension bad = d.ext;
    bad.phi = bad.phi.scaled(Scalar(2));
    CHECK_FALSE(check_coextension(bad).passed());
}

TEST_CASE("cotensor examples") {
    auto g = load_coring("grouplike2");
    const Coring& c = g.coring;
    Cotensor t = cotensor(c, 2, c.delta(), 2, c.delta());
    CHECK(t.dim() == 2);
    // e1 (x) e1 and e2 (x) e2
    CHECK(t.space.contains(Vector{1, 0, 0, 0}));
    CHECK(t.space.contains(Vector{0, 0, 0, 1}));
    CHECK((t.retr * t.incl).is_identity());

    Cotensor empty = cotensor(c, 0, Matrix::zero(c.field(), 0, 0), 2, c.delta());
    CHECK(empty.dim() == 0);

    auto k = load_coring("trivial");
    const Field& f = k.coring.field();
    Cotensor full = cotensor(k.coring, 2, Matrix::identity(f, 2), 3, Matrix::identity(f, 3));
    CHECK(full.dim() == 6);
}

TEST_CASE("Delta_bar examples") {
    auto id = load_coext("coext_identity");
    DeltaBar di = delta_bar(id.ext);
    CHECK(di.d.dim() == id.ext.a.dim());

    for (const char* name : {"coext_grouplike", "coext_divpow_base"}) {
        CAPTURE(name);
        auto d = load_coext(name);
        DeltaBar db = delta_bar(d.ext);
        CHECK(db.d.dim() == d.ext.a.dim() * d.ext.a.dim());
        CHECK(db.delta_bar == d.ext.a.delta());
        CHECK(check_bicomodule(d.ext.a, db.bicomodule).passed());
    }

    // iterated cotensors agree in dimension
    for (const auto& name : coext_corpus()) {
        CAPTURE(name);
        auto d = load_coext(name);
        const Coextension& e = d.ext;
        const Field& f = e.a.field();
        const std::size_t a = e.a.dim();
        DeltaBar db = delta_bar(e);
        Matrix rho_c = corestrict_right(e, a, e.a.delta());
        Matrix lam_c = corestrict_left(e, a, e.a.delta());
        Matrix d_rho = kron(db.d.retr, Matrix::identity(f, e.c.dim())) * kron(Matrix::identity(f, a), rho_c) * db.d.incl;
        Matrix d_lam = kron(Matrix::identity(f, e.c.dim()), db.d.retr) * kron(lam_c, Matrix::identity(f, a)) * db.d.incl;
        std::size_t left = cotensor(e.c, db.d.dim(), d_rho, a, lam_c).dim();
        std::size_t right = cotensor(e.c, a, rho_c, db.d.dim(), d_lam).dim();
        CHECK(left == right);
    }
}

TEST_CASE("coflatness proxy") {
    auto g = load_coring("grouplike2");
    const Field& f = g.coring.field();
    CHECK(coflat_check(g.coring, 2, g.coring.delta()).found());
    CHECK(coflat_check(g.coring, 1, column(f, {"1", "0"})).found());

    auto dp = load_coring("divpow2");
    CHECK(coflat_check(dp.coring, 2, dp.coring.delta()).found());
    MapSolution socle = coflat_check(dp.coring, 1, column(f, {"1", "0"}));
    CHECK_FALSE(socle.found());
    CHECK(socle.certificate.has_value());

    CHECK_THROWS_AS(coflat_check(dp.coring, 1, column(f, {"2", "0"})), Error);
}

TEST_CASE("separable coextension verdicts") {
    auto id = load_coext("coext_identity");
    MapSolution si = separable_coext(id.ext);
    CHECK(si.found());

    auto g = load_coext("coext_grouplike");
    MapSolution sg = separable_coext(g.ext);
    REQUIRE(sg.found());
    DeltaBar db = delta_bar(g.ext);
    CHECK((*sg.map * db.delta_bar).is_identity());
    CHECK(is_morphism(g.ext.a, db.bicomodule, regular_bicomodule(g.ext.a), *sg.map));

    auto dp = load_coext("coext_divpow_base");
    MapSolution sd = separable_coext(dp.ext);
    CHECK_FALSE(sd.found());
    CHECK(sd.certificate.has_value());

    CHECK(separable_coext(load_coext("coext_grouplike3").ext).found());

    try {
        separable_coext(load_coext("coext_divpow_inclusion").ext);
        FAIL("expected HypothesisNotMet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisNotMet);
    }
}

TEST_CASE("C = k reduces to the coring computations") {
    for (const auto& name : coext_corpus()) {
        auto d = load_coext(name);
        if (!base_is_field(d.ext)) continue;
        CAPTURE(name);
        const Coring& a = d.ext.a;
        CHECK(separable_coext(d.ext).found() == cosep_witness(a).found());
        auto ms = coext_bicomodules(d);
        for (const auto& m : ms) {
            CAPTURE(m.name);
            CHECK(c_coder_space(d.ext, m).dim() == coder_space(a, m).dim());
            CHECK(c_inner_coder_space(d.ext, m).dim() == inner_coder_space(a, m).dim());
            for (const auto& n : ms) {
                CAPTURE(n.name);
                CHECK(c_coint_space(d.ext, n, m).dim() == coint_space(a, n, m).dim());
                CHECK(c_inner_coint_space(d.ext, n, m).dim() == inner_coint_space(a, n, m).dim());
            }
        }
    }
    auto dp = load_coext("coext_divpow_base");
    Bicomodule reg = regular_bicomodule(dp.ext.a);
    CHECK(c_coder_space(dp.ext, reg).dim() - c_inner_coder_space(dp.ext, reg).dim() == 1);
}

TEST_CASE("coderivation and cointegration dims correspond, inner inside full") {
    for (const auto& name : coext_corpus()) {
        if (name == "coext_divpow_inclusion") continue;
        CAPTURE(name);
        auto d = load_coext(name);
        Bicomodule reg = regular_bicomodule(d.ext.a);
        for (const auto& m : coext_bicomodules(d)) {
            CAPTURE(m.name);
            MapSpace g = c_coder_space(d.ext, m);
            CHECK(g.dim() == c_coint_space(d.ext, m, reg).dim());
            MapSpace ig = c_inner_coder_space(d.ext, m);
            CHECK(ig.dim() == c_inner_coint_space(d.ext, m, reg).dim());
            for (const auto& b : ig.basis_maps()) CHECK(g.contains(b));
            MapSpace h = c_coint_space(d.ext, m, m);
            for (const auto& b : c_inner_coint_space(d.ext, m, m).basis_maps()) CHECK(h.contains(b));
        }
    }
}

TEST_CASE("separability matches vanishing quotients") {
    for (const auto& name : coext_corpus()) {
        if (name == "coext_divpow_inclusion") continue;
        CAPTURE(name);
        auto d = load_coext(name);
        bool separable = separable_coext(d.ext).found();
        bool coder_zero = true, coint_zero = true;
        auto ms = coext_bicomodules(d);
        for (const auto& m : ms) {
            Matrix lam_c = corestrict_left(d.ext, m.dim(), m.lambda);
            if (!coflat_check(d.ext.c, m.dim(), lam_c).found()) continue;
            coder_zero &= c_coder_space(d.ext, m).dim() == c_inner_coder_space(d.ext, m).dim();
            for (const auto& n : ms)
                coint_zero &= c_coint_space(d.ext, n, m).dim() == c_inner_coint_space(d.ext, n, m).dim();
        }
        CHECK(separable == coder_zero);
        CHECK(separable == coint_zero);
    }
}

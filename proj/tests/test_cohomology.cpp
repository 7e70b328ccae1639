#include <doctest.h>

#include "cosep/cohomology.hpp"
#include "cosep/cointegration.hpp"
#include "cosep/error.hpp"
#include "support/corpus.hpp"

using namespace cosep;
using namespace cosep::testing;

namespace {

std::vector<std::size_t> term_dims(const ResolutionSegment& s) {
    std::vector<std::size_t> out;
    for (const auto& t : s.terms) out.push_back(t.dim());
    return out;
}

const std::vector<std::string> coseparable = {"trivial", "grouplike2", "comatrix2", "sweedler_gauss", "sweedler_x2",
                                              "grouplike2_f5", "comatrix2_f5"};

}  // namespace

TEST_CASE("resolution examples") {
    auto t = load_coring("trivial");
    auto st = resolution(t.coring, regular_bicomodule(t.coring), 2);
    CHECK(term_dims(st) == std::vector<std::size_t>{1, 1, 1, 1});
    // exactness of k -> k -> k -> k forces id, 0, -id
    CHECK(st.maps[0].is_identity());
    CHECK(st.maps[1].is_zero());
    CHECK(st.maps[2].negated().is_identity());

    auto d = load_coring("divpow2");
    auto sd = resolution(d.coring, regular_bicomodule(d.coring), 2);
    CHECK(term_dims(sd) == std::vector<std::size_t>{2, 4, 8, 16});
}

TEST_CASE("resolution identities on the corpus") {
    for (const auto& name : coring_corpus()) {
        CAPTURE(name);
        auto d = load_coring(name);
        for (const auto& m : corpus_bicomodules(d)) {
            CAPTURE(m.name);
            auto s = resolution(d.coring, m, 3);
            REQUIRE(s.maps.size() == 4);
            CHECK(s.composites_vanish());
            CHECK(s.homotopy_holds());
            CHECK(s.forgotten_exact());
            for (std::size_t i = 0; i < s.maps.size(); ++i) {
                CAPTURE(i);
                CHECK(is_morphism(d.coring, s.terms[i], s.terms[i + 1], s.maps[i]));
            }
        }
    }
}

TEST_CASE("cochain complex agrees with the cointegration solver") {
    for (const auto& name : coring_corpus()) {
        CAPTURE(name);
        auto d = load_coring(name);
        auto ms = corpus_bicomodules(d);
        for (const auto& n : ms)
            for (const auto& m : ms) {
                CAPTURE(n.name);
                CAPTURE(m.name);
                CochainComplex cx = cochain_complex(d.coring, n, m, 2);
                CHECK(cx.squares_vanish());
                for (std::size_t i = 0; i + 1 <= cx.max_degree(); ++i)
                    CHECK(cx.terms[i + 1].subspace().contains(cx.images[i].subspace()));
                CHECK(cx.cohomology_dim(0) == hom_space(d.coring, n, m).dim());
                MapSpace z1 = coint_space(d.coring, n, m);
                CHECK(cx.kernel_dim(1) == z1.dim());
                CHECK(cx.images[0].subspace() == inner_coint_space(d.coring, n, m).subspace());
                CHECK(cx.cohomology_dim(1) == z1.dim() - inner_coint_space(d.coring, n, m).dim());
            }
    }
}

TEST_CASE("Ext dimensions") {
    auto d = load_coring("divpow2");
    Bicomodule reg = regular_bicomodule(d.coring);
    auto e = ext_dims(d.coring, reg, reg, 2);
    CHECK(e[1] == 1);
    CHECK(h_dims(d.coring, reg, reg, 1)[1] > 0);

    for (const auto& name : coseparable) {
        CAPTURE(name);
        auto c = load_coring(name);
        for (const auto& n : corpus_bicomodules(c))
            for (const auto& m : corpus_bicomodules(c)) {
                auto x = ext_dims(c.coring, n, m, 2);
                CHECK(x[1] == 0);
                CHECK(x[2] == 0);
                CHECK(h_dims(c.coring, n, m, 1)[1] == 0);
            }
    }

    for (const auto& name : coring_corpus()) {
        auto c = load_coring(name);
        auto z = zero_bicomodule(c.coring);
        for (const auto& m : corpus_bicomodules(c)) CHECK(ext_dims(c.coring, z, m, 2) == std::vector<std::size_t>(3, 0));
    }
}

TEST_CASE("shift isomorphisms") {
    for (const auto& name : coring_corpus()) {
        CAPTURE(name);
        auto d = load_coring(name);
        auto ms = corpus_bicomodules(d);
        for (const auto& n : ms)
            for (const auto& m : ms) {
                CAPTURE(n.name);
                CAPTURE(m.name);
                auto ext = ext_dims(d.coring, n, m, 3);
                auto h = h_dims(d.coring, n, m, 2);
                CHECK(ext[2] == h[1]);
                CHECK(ext[3] == h[2]);
                CHECK(shift_check(d.coring, n, m, 1));
            }
    }
}

TEST_CASE("relative injectivity") {
    for (const auto& name : coring_corpus()) {
        CAPTURE(name);
        auto d = load_coring(name);
        for (const auto& n : corpus_bicomodules(d)) {
            CAPTURE(n.name);
            Bicomodule ind = induced(d.coring, n.right());
            MapSolution r = relative_injective(d.coring, ind);
            REQUIRE(r.found());
            CHECK((*r.map * ind.lambda).is_identity());
            CHECK(is_morphism(d.coring, induced(d.coring, ind.right()), ind, *r.map));
        }
    }
    auto dp = load_coring("divpow2");
    CHECK_FALSE(relative_injective(dp.coring, regular_bicomodule(dp.coring)).found());
    auto g = load_coring("grouplike2");
    CHECK(relative_injective(g.coring, regular_bicomodule(g.coring)).found());

    Bicomodule broken = regular_bicomodule(dp.coring);
    broken.lambda = broken.lambda.scaled(Scalar(2));
    CHECK_THROWS_AS(relative_injective(dp.coring, broken), Error);
}

TEST_CASE("budget") {
    auto d = load_coring("comatrix2");
    Bicomodule reg = regular_bicomodule(d.coring);
    try {
        ext_dims(d.coring, reg, reg, 3, 100);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK_THROWS_AS(resolution(d.coring, reg, 3, 100), Error);
    CHECK(ext_dims(d.coring, reg, reg, 3) == std::vector<std::size_t>{1, 0, 0, 0});
}

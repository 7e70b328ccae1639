#include <doctest.h>

#include <random>

#include "cosep/algebra.hpp"
#include "cosep/error.hpp"
#include "cosep/map_space.hpp"
#include "cosep/tensor.hpp"

using namespace cosep;

namespace {

Field Q = Field::rationals();

// Q[x]/(x^2) on basis 1, x.
AlgebraPtr dual_numbers() {
    std::vector<std::vector<Vector>> m = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    return std::make_shared<const Algebra>(Q, std::vector<std::string>{"1", "x"}, m, Vector{1, 0});
}

}  // namespace

TEST_CASE("algebra checks") {
    CHECK(check_algebra(*Algebra::base(Q)).passed());
    CHECK(check_algebra(*dual_numbers()).passed());

    std::vector<std::vector<Vector>> m = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    Algebra bad(Q, {"1", "x"}, m, Vector{0, 1});
    auto rep = check_algebra(bad);
    CHECK_FALSE(rep.passed());
    bool unit_failure = false;
    for (const auto& f : rep.failures) unit_failure = unit_failure || f.axiom.find("unit") != std::string::npos;
    CHECK(unit_failure);

    CHECK_THROWS_AS(Algebra(Q, {}, {}, {}), Error);
}

TEST_CASE("bimodule checks") {
    auto r = dual_numbers();
    CHECK(check_bimodule(*r, Bimodule::regular(r)).passed());
    CHECK(check_bimodule(*r, Bimodule::zero(r)).passed());
    Matrix a = Matrix::from_strings(Q, {{"0", "1"}, {"0", "0"}});
    Matrix b = Matrix::from_strings(Q, {{"0", "0"}, {"1", "0"}});
    Bimodule odd(r, 2, {Matrix::identity(Q, 2), a}, {Matrix::identity(Q, 2), b});
    CHECK_FALSE(check_bimodule(*r, odd).passed());
}

TEST_CASE("tensor over R") {
    auto k = Algebra::base(Q);
    auto b1 = Bimodule::free_over_base(k, 2), b2 = Bimodule::free_over_base(k, 3);
    auto t = tensor_over_R(b1, b2);
    CHECK(t.module.dim() == 6);
    CHECK(t.proj.is_identity());

    auto r = dual_numbers();
    auto reg = Bimodule::regular(r);
    auto rr = tensor_over_R(reg, reg);
    CHECK(rr.module.dim() == 2);
    CHECK((rr.proj * rr.sect).is_identity());
    CHECK(check_bimodule(*r, rr.module).passed());

    // bracketing agrees in dimension
    auto left = TensorChain::of({&reg, &reg, &reg});
    auto inner = tensor_over_R(reg, reg).module;
    auto right = TensorChain::of({&reg, &inner});
    CHECK(left.dim() == right.dim());

    CHECK_THROWS_AS(tensor_over_R(b1, reg), Error);
}

TEST_CASE("bilinear maps") {
    auto k = Algebra::base(Q);
    CHECK(bilinear_maps(Bimodule::free_over_base(k, 2), Bimodule::free_over_base(k, 2)).dim() == 4);
    auto r = dual_numbers();
    auto reg = Bimodule::regular(r);
    auto s = bilinear_maps(reg, reg);
    CHECK(s.dim() == 2);
    for (const auto& g : s.basis_maps()) {
        CHECK(g * reg.left(1) == reg.left(1) * g);
        CHECK(g * reg.right(1) == reg.right(1) * g);
    }
    CHECK(bilinear_maps(reg, Bimodule::zero(r)).dim() == 0);
}

TEST_CASE("operator matrix agrees with direct evaluation") {
    std::mt19937 rng(3);
    auto rnd = [&](std::size_t r, std::size_t c) {
        Matrix m(Q, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 2) m.set(i, j, Scalar(static_cast<int>(rng() % 5) - 2));
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t fr = 1 + rng() % 3, fc = 1 + rng() % 3, k = 1 + rng() % 3, orr = 1 + rng() % 3, oc = 1 + rng() % 3;
        MapOperator op(Q, fr, fc, orr, oc);
        op.add(rnd(orr, fr), rnd(fc, oc), Scalar(2));
        op.add(rnd(orr, fr * k), rnd(fc * k, oc), Scalar(-1), Lift::RightIdentity, k);
        op.add(rnd(orr, k * fr), rnd(k * fc, oc), Scalar(1, 2), Lift::LeftIdentity, k);
        Matrix f = rnd(fr, fc);
        CHECK(op.matrix().apply(vectorize(f)) == vectorize(op.apply(f)));
    }
}

#include <doctest.h>

#include <random>

#include "cosep/error.hpp"
#include "cosep/linalg.hpp"

using namespace cosep;

namespace {

Field Q = Field::rationals();
Field F5 = Field::prime(5);

Matrix random_matrix(const Field& f, std::mt19937& rng, std::size_t r, std::size_t c, int density = 2) {
    std::uniform_int_distribution<int> val(-3, 3), keep(0, density);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng) == 0) m.set(i, j, Scalar(val(rng)));
    return m;
}

// Plain dense Gaussian elimination rank, written separately from the library.
std::size_t dense_rank(const Field& f, std::vector<Vector> a) {
    std::size_t r = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Scalar k = f.mul(a[i][c], f.inv(a[r][c]));
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(k, a[r][j]));
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("field arithmetic") {
    CHECK(F5.parse("2") * 1 == 2);
    CHECK(F5.inv(Scalar(2)) == 3);
    CHECK(F5.parse("-1") == 4);
    CHECK(F5.parse("1/2") == 3);
    CHECK(Q.parse("-2/4") == Scalar(-1, 2));
    CHECK(Q.format(Q.parse("6/3")) == "2");
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Q.parse("1/0"), Error);
    CHECK_THROWS_AS(Q.parse("x"), Error);
    CHECK_THROWS_AS(F5.parse("1/5"), Error);
    CHECK(is_prime_u64(1000000007ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL));
}

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(Q, 2));
    CHECK(id.reduced == Matrix::identity(Q, 2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto r = rref(Matrix::from_strings(Q, {{"1", "2"}, {"2", "4"}}));
    CHECK(r.reduced == Matrix::from_strings(Q, {{"1", "2"}, {"0", "0"}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});

    auto f = rref(Matrix::from_strings(F5, {{"2"}}));
    CHECK(f.reduced == Matrix::from_strings(F5, {{"1"}}));
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(Q, 3)).dim() == 0);
    auto n = nullspace(Matrix::from_strings(Q, {{"1", "2"}}));
    REQUIRE(n.dim() == 1);
    // canonical basis is normalized, so compare spans
    CHECK(n == Subspace::span(Q, 2, {{Scalar(-2), Scalar(1)}}));
    CHECK(nullspace(Matrix::zero(Q, 2, 3)).dim() == 3);
}

TEST_CASE("solve_affine examples") {
    auto s = solve_affine(Matrix::identity(Q, 3), {Scalar(1), Scalar(-2), Scalar(1, 3)});
    REQUIRE(s.feasible());
    CHECK(*s.solution == Vector{Scalar(1), Scalar(-2), Scalar(1, 3)});

    auto t = solve_affine(Matrix::from_strings(Q, {{"1", "1"}}), {Scalar(3)});
    REQUIRE(t.feasible());
    CHECK(*t.solution == Vector{Scalar(3), Scalar(0)});

    auto u = solve_affine(Matrix::from_strings(Q, {{"1"}, {"1"}}), {Scalar(0), Scalar(1)});
    CHECK_FALSE(u.feasible());
    REQUIRE(u.certificate);
    CHECK(*u.certificate == Vector{Scalar(1), Scalar(-1)});

    CHECK_THROWS_AS(solve_affine(Matrix::identity(Q, 2), {Scalar(1)}), Error);
}

TEST_CASE("quotient examples") {
    auto q0 = quotient(3, Subspace(Q, 3));
    CHECK(q0.proj == Matrix::identity(Q, 3));
    CHECK(q0.sect == Matrix::identity(Q, 3));

    auto rel = Subspace::span(Q, 2, {{Scalar(1), Scalar(1)}});
    auto q1 = quotient(2, rel);
    CHECK(q1.dim() == 1);
    CHECK((q1.proj * q1.sect).is_identity());
    CHECK(is_zero(q1.proj.apply({Scalar(1), Scalar(1)})));

    auto qf = quotient(2, Subspace::whole(Q, 2));
    CHECK(qf.dim() == 0);
    CHECK(qf.proj.rows() == 0);
    CHECK(qf.proj.cols() == 2);
}

TEST_CASE("kronecker examples") {
    CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
    CHECK(kron(Matrix::from_strings(Q, {{"2"}}), Matrix::from_strings(Q, {{"3"}})) == Matrix::from_strings(Q, {{"6"}}));
    auto outer = kron(Matrix::from_strings(Q, {{"1"}, {"2"}}), Matrix::from_strings(Q, {{"3", "4"}}));
    CHECK(outer == Matrix::from_strings(Q, {{"3", "4"}, {"6", "8"}}));
    CHECK_THROWS_AS(kron(Matrix::identity(Q, 1), Matrix::identity(F5, 1)), Error);
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(F5, 2), Error);
    CHECK_THROWS_AS(Matrix::identity(Q, 2) + Matrix::identity(F5, 2), Error);
}

TEST_CASE("random properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Field& f = (trial % 2) ? F5 : Q;
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix a = random_matrix(f, rng, r, c);
        auto rr = rref(a);
        CHECK(rr.rank() == dense_rank(f, a.to_dense()));
        CHECK(rref(rr.reduced).reduced == rr.reduced);
        Subspace n = nullspace(a);
        CHECK(rr.rank() + n.dim() == c);
        for (std::size_t i = 0; i < n.dim(); ++i) CHECK(is_zero(a.apply(n.vector(i))));

        Vector b(r);
        for (auto& x : b) x = f.normalize(Scalar(static_cast<int>(rng() % 7) - 3));
        auto s = solve_affine(a, b);
        if (s.feasible()) {
            CHECK(verify_solution(a, b, *s.solution));
        } else {
            REQUIRE(s.certificate);
            CHECK(verify_certificate(a, b, *s.certificate));
        }

        Subspace rel = Subspace::span(random_matrix(f, rng, 1 + rng() % 3, c));
        auto q = quotient(c, rel);
        CHECK(q.dim() == c - rel.dim());
        CHECK((q.proj * q.sect).is_identity());
        CHECK((q.proj * rel.basis().transpose()).is_zero());

        Matrix b1 = random_matrix(f, rng, 2, 3), b2 = random_matrix(f, rng, 3, 2);
        Matrix k = kron(b1, b2);
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = 0; v < 2; ++v) {
                Vector eu(3), ev(2), euv(6);
                eu[u] = 1;
                ev[v] = 1;
                euv[u * 2 + v] = 1;
                CHECK(k.apply(euv) == vectorize(Matrix::column_vector(f, b1.apply(eu)) *
                                                Matrix::column_vector(f, b2.apply(ev)).transpose()));
            }
    }
}

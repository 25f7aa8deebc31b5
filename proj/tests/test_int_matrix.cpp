#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbk/int_matrix.hpp"
#include "orbk/smith.hpp"

using orbk::Int;
using orbk::IntMatrix;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound,
                        bool allow_empty = false) {
    std::uniform_int_distribution<std::size_t> dim(allow_empty ? 0 : 1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    return m;
}

bool is_divisibility_diagonal(const IntMatrix& d) {
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (r != c && d.at(r, c) != 0) return false;
    std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < k; ++t) {
        if (d.at(t, t) < 0) return false;
        if (t + 1 < k) {
            if (d.at(t, t) == 0 && d.at(t + 1, t + 1) != 0) return false;
            if (d.at(t, t) != 0 && d.at(t + 1, t + 1) % d.at(t, t) != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("matrix basics") {
    IntMatrix a{{1, 2}, {3, 4}};
    CHECK(a.rows() == 2);
    CHECK(a.at(1, 0) == 3);
    CHECK(a.transposed().at(0, 1) == 3);

    IntMatrix id = IntMatrix::identity(2);
    CHECK(a * id == a);
    CHECK(id * a == a);

    IntMatrix empty(0, 2);
    CHECK(IntMatrix::vstack(empty, a) == a);
    CHECK((a * IntMatrix(2, 0)).cols() == 0);
    CHECK(empty.is_zero());
}

TEST_CASE("determinants") {
    CHECK(IntMatrix{{1, 2}, {3, 4}}.determinant() == -2);
    CHECK(IntMatrix{{2, 0}, {0, 3}}.determinant() == 6);
    CHECK(IntMatrix{{1, 2}, {2, 4}}.determinant() == 0);
    CHECK(IntMatrix::identity(5).determinant() == 1);
    CHECK(IntMatrix(0, 0).determinant() == 1);
    // needs a row swap to find the first pivot
    CHECK(IntMatrix{{0, 1}, {1, 0}}.determinant() == -1);
}

TEST_CASE("floor division") {
    CHECK(orbk::floor_div(7, 2) == 3);
    CHECK(orbk::floor_div(-7, 2) == -4);
    CHECK(orbk::floor_div(7, -2) == -4);
    CHECK(orbk::floor_div(-7, -2) == 3);
    CHECK(orbk::floor_div(6, 3) == 2);
}

TEST_CASE("smith normal form on fixed inputs") {
    SECTION("diag(2,3) has invariant factors 1, 6") {
        IntMatrix m{{2, 0}, {0, 3}};
        auto s = orbk::smith_normal_form(m);
        CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
        CHECK(s.u * m * s.v == s.d);
    }
    SECTION("zero matrix stays zero") {
        IntMatrix m(2, 2);
        auto s = orbk::smith_normal_form(m);
        CHECK(s.d == m);
        CHECK(s.u * m * s.v == s.d);
        CHECK((s.u.determinant() == 1 || s.u.determinant() == -1));
    }
    SECTION("identity is its own form") {
        IntMatrix m = IntMatrix::identity(3);
        CHECK(orbk::smith_normal_form(m).d == m);
    }
    SECTION("divisibility sweep combines non-dividing diagonal entries") {
        auto s = orbk::smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
        CHECK(s.d == IntMatrix{{2, 0}, {0, 12}});  // gcd and lcm
        CHECK(s.u * IntMatrix{{4, 0}, {0, 6}} * s.v == s.d);
    }
    SECTION("empty shapes") {
        auto s = orbk::smith_normal_form(IntMatrix(0, 3));
        CHECK(s.d == IntMatrix(0, 3));
        CHECK(orbk::invariant_factors(IntMatrix(3, 0)).empty());
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(20240521);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m = random_matrix(rng, 5, 9, true);
        auto s = orbk::smith_normal_form(m);
        REQUIRE(s.u * m * s.v == s.d);
        Int du = s.u.determinant(), dv = s.v.determinant();
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
        REQUIRE(is_divisibility_diagonal(s.d));
    }
}

TEST_CASE("hermite basis is invariant under row mixing") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int i = 0; i < 100; ++i) {
        IntMatrix m = random_matrix(rng, 4, 6);
        IntMatrix mixed = m;
        std::uniform_int_distribution<std::size_t> row(0, mixed.rows() - 1);
        for (int k = 0; k < 8; ++k) {
            std::size_t a = row(rng), b = row(rng);
            switch (k % 3) {
                case 0:
                    if (a != b) mixed.row_addmul(a, b, coeff(rng));
                    break;
                case 1: mixed.swap_rows(a, b); break;
                case 2: mixed.negate_row(a); break;
            }
        }
        REQUIRE(orbk::hermite_row_basis(m) == orbk::hermite_row_basis(mixed));
        REQUIRE(orbk::lattice_equal(m, mixed));
    }
}

TEST_CASE("lattice inclusion") {
    IntMatrix all{{1, 0}, {0, 1}};
    IntMatrix doubled{{2, 0}, {0, 2}};
    CHECK(orbk::lattice_subset(doubled, all));
    CHECK_FALSE(orbk::lattice_subset(all, doubled));
    CHECK(orbk::lattice_equal(IntMatrix{{2, 0}, {0, 3}, {2, 3}}, IntMatrix{{2, 0}, {0, 3}}));
}

TEST_CASE("integer kernel") {
    IntMatrix m{{1, 1, 1}};
    IntMatrix k = orbk::integer_kernel_rows(m);
    REQUIRE(k.rows() == 2);
    for (std::size_t r = 0; r < k.rows(); ++r) {
        Int s = 0;
        for (std::size_t c = 0; c < 3; ++c) s += k.at(r, c);
        REQUIRE(s == 0);
    }
    // saturated: (1,-1,0) and (0,1,-1) must lie in the span
    CHECK(orbk::lattice_subset(IntMatrix{{1, -1, 0}, {0, 1, -1}}, k));

    CHECK(orbk::integer_kernel_rows(IntMatrix::identity(3)).rows() == 0);
    CHECK(orbk::integer_kernel_rows(IntMatrix(0, 2)).rows() == 2);
}

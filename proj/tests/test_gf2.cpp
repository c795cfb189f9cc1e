#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stringhom/gf2.hpp"

using namespace stringhom::gf2;

namespace {

BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.set(i, j++, v != 0);
        ++i;
    }
    return m;
}

BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVector vec(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

} // namespace

TEST_CASE("rank") {
    CHECK(rank(identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 7)) == 0);
    CHECK(rank(from_rows({{1, 1}, {0, 1}, {1, 0}})) == 2);
}

TEST_CASE("solve") {
    CHECK(*solve(identity(2), vec({1, 0})) == vec({1, 0}));
    CHECK(*solve(from_rows({{1, 1}, {0, 1}}), vec({1, 0})) == vec({1, 0}));
    CHECK(!solve(BitMatrix(2, 2), vec({1, 0})));
    CHECK_THROWS_AS(solve(BitMatrix(2, 2), BitVector(3)), std::invalid_argument);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(identity(3)).empty());
    CHECK(kernel_basis(BitMatrix(2, 3)).size() == 3);
    CHECK(kernel_basis(from_rows({{1, 1, 0}})).size() == 2);
}

TEST_CASE("rank-nullity, solutions and permutation invariance") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        BitMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3 == 0) a.set(i, j, true);
        CHECK(rank(a) + kernel_basis(a).size() == c);
        for (auto& k : kernel_basis(a)) CHECK(!a.apply(k).any());

        // b built as a*x is always solvable, and the solution reproduces b.
        BitVector x(c);
        for (std::size_t j = 0; j < c; ++j)
            if (rng() % 2) x.set(j, true);
        BitVector b = a.apply(x);
        auto sol = solve(a, b);
        REQUIRE(sol);
        CHECK(a.apply(*sol) == b);

        // Shuffling rows leaves the rank alone.
        BitMatrix shuffled(r, c);
        std::vector<std::size_t> perm(r);
        for (std::size_t i = 0; i < r; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) shuffled.set(perm[i], j, a.get(i, j));
        CHECK(rank(shuffled) == rank(a));
    }
}

TEST_CASE("span") {
    Span s;
    CHECK(s.insert(vec({1, 1, 0})));
    CHECK(s.insert(vec({0, 1, 1})));
    CHECK(!s.insert(vec({1, 0, 1}))); // the sum of the first two
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec({1, 0, 1})));
    CHECK(!s.contains(vec({1, 0, 0})));
}

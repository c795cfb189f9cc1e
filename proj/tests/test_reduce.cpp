#include <doctest.h>

#include <random>

#include "stringhom/complex_open.hpp"
#include "stringhom/parse.hpp"
#include "stringhom/reduce.hpp"
#include "stringhom/verify.hpp"

using namespace stringhom;

namespace {

Element el(const char* s, Cx cx) { return parse_element(s, cx); }

} // namespace

TEST_CASE("arc standard forms") {
    auto r1 = reduce_f02_plus(el("a(1/2)*x(3)", Cx::F02), half(7));
    CHECK(r1.clean == el("x(3)", Cx::F00));
    CHECK(r1.witness.is_zero());

    auto r2 = reduce_f02_plus(el("a(3/2)*x(1) + a(1/2)*x(2)", Cx::F02), half(5));
    CHECK(r2.clean.is_zero());
    CHECK(r2.witness == el("a(5/2)", Cx::F02));

    auto r3 = reduce_f02_plus(el("a(1/2)*x(1)*x(-1)", Cx::F02), half(5));
    CHECK(r3.clean.is_zero());
    CHECK(r3.witness == el("a(3/2)*x(-1)", Cx::F02));

    CHECK_THROWS_AS(reduce_f02_plus(el("a(3/2)", Cx::F02), half(3)), std::invalid_argument);
    CHECK_THROWS_AS(reduce_f02_plus(el("a(-1/2)", Cx::F02), half(3)), std::invalid_argument);
}

TEST_CASE("a+b+ standard forms") {
    Element s2 = insular_diagonal(2);
    auto r1 = reduce_pp(s2, half(15), HalfInt::whole(8));
    REQUIRE(r1.q.size() == 1);
    CHECK(r1.q.at(2) == el("1", Cx::F00));
    CHECK(diff(r1.witness).is_zero()); // f is already in standard form

    Element f = mul_var(insular_diagonal(3), 1) + mul_var(insular_diagonal(1), 3);
    auto r2 = reduce_pp(f, half(15), HalfInt::whole(8));
    CHECK(r2.q.empty());
    CHECK(diff(r2.witness) == f);
    // The explicit witness from the alternating half-diagonal.
    CHECK(diff(el("a(1/2)*b(7/2) + a(5/2)*b(3/2)", Cx::F22)) == f);

    Element g = mul_var(insular_diagonal(1), -1);
    auto r3 = reduce_pp(g, half(15), HalfInt::whole(8));
    REQUIRE(r3.q.size() == 1);
    CHECK(r3.q.at(1) == el("x(-1)", Cx::F00));

    CHECK_THROWS_AS(reduce_pp(el("a(1/2)*b(-1/2)", Cx::F22), half(15), HalfInt::whole(8)),
                    std::invalid_argument);
}

TEST_CASE("a+b- standard forms") {
    auto r1 = reduce_pm(el("a(1/2)*b(-1/2)*x(3)", Cx::F22), HalfInt::whole(8));
    CHECK(r1.totally_clean == el("x(3)", Cx::F00));
    CHECK(r1.witness.is_zero());

    auto r2 = reduce_pm(el("a(1/2)*b(-1/2)*x(1)*x(-1)", Cx::F22), HalfInt::whole(8));
    CHECK(r2.totally_clean.is_zero());
    CHECK(diff(r2.witness) == el("a(1/2)*b(-1/2)*x(1)*x(-1)", Cx::F22));

    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        Generator g = random_generator(Cx::F22, 7, rng);
        if (auto* tag = std::get_if<TagInsular>(&g.tag))
            g.tag = TagInsular{tag->i.abs(), -tag->j.abs()};
        else
            g.tag = TagInsular{half(1), half(-1)};
        Element boundary = diff(Element::single(g));
        if (boundary.is_zero()) continue;
        auto r = reduce_pm(boundary, HalfInt::whole(8));
        CHECK(r.totally_clean.is_zero());
        CHECK(diff(r.witness) == boundary);
    }

    CHECK_THROWS_AS(reduce_pm(el("a(1/2)*b(1/2)", Cx::F22), HalfInt::whole(8)),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_pm(el("a(3/2)*b(-1/2)", Cx::F22), HalfInt::whole(8)),
                    std::invalid_argument); // not a cycle
}

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stringhom/diagrams.hpp"
#include "stringhom/verify.hpp"

using namespace stringhom;

namespace {

ClosedMonomial xv(int k, int e = 1) { return ClosedMonomial::var(k, e); }

} // namespace

TEST_CASE("winding") {
    CHECK(winding({TagEmpty{}, xv(2).times(xv(-2))}) == HalfInt::whole(0));
    CHECK(winding({TagTraversing{1, -1}, {}}) == HalfInt::whole(0));
    CHECK(winding({TagArcA{half(3)}, xv(-1)}) == half(1));
}

TEST_CASE("weight") {
    CHECK(weight({TagEmpty{}, xv(2).times(xv(-2))}) == HalfInt::whole(4));
    CHECK(weight({TagInsular{half(1), half(1)}, xv(-1)}) == HalfInt::whole(2));
    CHECK(weight({TagEmpty{}, {}}) == HalfInt::whole(0));
}

TEST_CASE("element addition is symmetric difference") {
    Element e = Element::single({TagArcC{0}, xv(1)});
    CHECK((e + e).is_zero());
    CHECK(e + Element::zero(Cx::F11) == e);

    Element a = Element::single({TagTraversing{0, 0}, {}});
    Element b = a;
    b.toggle({TagTraversing{1, -1}, {}});
    CHECK(a + b == Element::single({TagTraversing{1, -1}, {}}));

    CHECK_THROWS_AS(e + Element::zero(Cx::F00), std::invalid_argument);
}

TEST_CASE("module action and the contractible loop") {
    Element arc = Element::single({TagArcA{half(1)}, {}});
    CHECK(mul_var(arc, 1) == Element::single({TagArcA{half(1)}, xv(1)}));
    CHECK(mul_var(Element::single({TagArcC{0}, {}}), 0).is_zero());
    Element x1 = Element::single({TagEmpty{}, xv(1)});
    CHECK(mul_var(x1, 1) == Element::single({TagEmpty{}, xv(1, 2)}));
}

TEST_CASE("gradings are additive under the module action") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        Cx cx = static_cast<Cx>(t % 4);
        Generator g = random_generator(cx, 8, rng);
        int k = 1 + static_cast<int>(rng() % 5);
        if (rng() % 2) k = -k;
        Element m = mul_var(Element::single(g), k);
        REQUIRE(m.term_count() == 1);
        const Generator& gk = *m.terms().begin();
        CHECK(winding(gk) == winding(g) + HalfInt::whole(k));
        CHECK(weight(gk) == weight(g) + HalfInt::whole(k < 0 ? -k : k));
        CHECK(weight(g) >= winding(g).abs());
        CHECK(weight(g) >= HalfInt::whole(0));
    }
}

TEST_CASE("canonical text form") {
    Generator g{TagInsular{half(1), half(-3)}, xv(-1, 2).times(xv(3))};
    CHECK(to_string(g) == "a(1/2)*b(-3/2)*x(-1)^2*x(3)");
    CHECK(to_string(Generator{TagEmpty{}, {}}) == "1");
    CHECK(to_string(Element::zero(Cx::F00)) == "0");
}

TEST_CASE("half integers") {
    CHECK(half(3).str() == "3/2");
    CHECK(HalfInt::whole(-2).str() == "-2");
    CHECK(half(-1) + half(1) == HalfInt::whole(0));
    CHECK(half(-5).abs() == half(5));
    CHECK(half(1) < half(3));
}

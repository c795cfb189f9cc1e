#include <doctest.h>

#include <random>

#include "stringhom/complex_open.hpp"
#include "stringhom/parse.hpp"
#include "stringhom/verify.hpp"

using namespace stringhom;

namespace {

Element el(const char* s, Cx cx) { return parse_element(s, cx); }

} // namespace

TEST_CASE("differentials by complex") {
    CHECK(diff(el("a(5/2)", Cx::F02)) == el("a(3/2)*x(1) + a(1/2)*x(2)", Cx::F02));
    CHECK(diff(el("a(-5/2)", Cx::F02)) == el("a(-3/2)*x(-1) + a(-1/2)*x(-2)", Cx::F02));
    CHECK(diff(el("c(1)*d(0)*x(-1)", Cx::F22)) ==
          el("c(0)*d(0) + c(1)*d(-1) + a(1/2)*b(1/2)*x(-1)", Cx::F22));
    CHECK(diff(el("c(0)*x(1)", Cx::F11)) == el("c(1)", Cx::F11));
    CHECK(diff(el("c(2)*d(-2)", Cx::F22)).is_zero());
    CHECK(diff(el("a(1/2)*b(1/2)", Cx::F22)).is_zero());
    CHECK(diff(el("a(3/2)*b(1/2)", Cx::F22)) == el("a(1/2)*b(1/2)*x(1)", Cx::F22));
}

TEST_CASE("bracket of traversing strings with closed curves") {
    CHECK(bracket_c_closed(0, 1) == el("c(1)", Cx::F11));
    CHECK(bracket_c_closed(0, 2).is_zero());
    auto d = bracket_open_closed({TravSide::D, 1}, -3);
    REQUIRE(d);
    CHECK(*d == TravString{TravSide::D, -2});
    CHECK(!bracket_open_closed({TravSide::D, 1}, 4));
    CHECK_THROWS_AS(bracket_open_closed({TravSide::C, 0}, 0), std::invalid_argument);
}

TEST_CASE("diagonal elements") {
    CHECK(insular_diagonal(1) == el("a(1/2)*b(1/2)", Cx::F22));
    CHECK(insular_diagonal(0).is_zero());
    CHECK(insular_diagonal(-2) == el("a(-1/2)*b(-3/2) + a(-3/2)*b(-1/2)", Cx::F22));
    for (int n = -8; n <= 8; ++n) {
        CHECK(insular_diagonal(n).term_count() == static_cast<std::size_t>(n < 0 ? -n : n));
        // Each diagonal element bounds through the bare traversing pair.
        CHECK(diff(Element::single({TagTraversing{0, n}, {}})) == insular_diagonal(n));
    }
}

TEST_CASE("source operators") {
    CHECK(source_alpha_star(1, el("c(0)", Cx::F11)) == el("c(-1)*x(1)", Cx::F11));
    CHECK(source_alpha(1, el("c(0)*x(1)*x(2)", Cx::F11)) == el("c(1)*x(2)", Cx::F11));
    CHECK(source_alpha(3, el("c(0)*x(1)", Cx::F11)).is_zero());
    CHECK(source_alpha(1, el("c(0)*x(1)^2", Cx::F11)).is_zero()); // even exponent
}

TEST_CASE("iota") {
    CHECK(iota(el("a(1/2)*b(3/2)*x(-2)", Cx::F22)) == el("a(-1/2)*b(-3/2)*x(2)", Cx::F22));
    Element e = el("c(1)*d(0)*x(-1) + a(1/2)*b(1/2)", Cx::F22);
    CHECK(iota(iota(e)) == e);
    CHECK(iota(insular_diagonal(2)) == insular_diagonal(-2));
    CHECK(iota(el("c(3)*x(-1)", Cx::F11)) == el("c(-3)*x(1)", Cx::F11));
}

TEST_CASE("diagonal sums") {
    CHECK(diagonal_sum(0, el("c(2)*d(-2)", Cx::F22)) == el("1", Cx::F00));
    CHECK(diagonal_sum(3, el("c(1)*d(2)*x(1) + c(0)*d(3)*x(1)", Cx::F22)).is_zero());
    CHECK(diagonal_sum(1, el("c(0)*d(1)*x(-1)", Cx::F22)) == el("x(-1)", Cx::F00));
    CHECK(diagonal_sum(0, el("a(1/2)*b(-1/2)", Cx::F22)).is_zero()); // insular ignored
}

TEST_CASE("closing off positive arcs") {
    CHECK(closeoff_plus(el("a(1/2)", Cx::F02)) == el("x(1)", Cx::F00));
    CHECK(closeoff_plus(el("a(5/2)*x(-1)", Cx::F02)) == el("x(3)*x(-1)", Cx::F00));
    CHECK(closeoff_plus(diff(el("a(5/2)", Cx::F02))).is_zero()); // = d(x3) = 0
    CHECK_THROWS_AS(closeoff_plus(el("a(-1/2)", Cx::F02)), std::invalid_argument);
}

TEST_CASE("gluing both boundaries") {
    CHECK(glue_both(el("a(1/2)*b(-1/2)", Cx::F22)) == el("x(1)*x(-1)", Cx::F00));
    CHECK(glue_both(el("a(3/2)*b(-1/2)*x(5)", Cx::F22)) == el("x(2)*x(5)*x(-1)", Cx::F00));
    CHECK_THROWS_AS(glue_both(el("a(1/2)*b(1/2)", Cx::F22)), std::invalid_argument);
}

TEST_CASE("disc complex") {
    CHECK(diff_e(EElement::single(EGen::U)) ==
          EElement::single(EGen::B) + EElement::single(EGen::T0) + EElement::single(EGen::T1));
    CHECK(diff_e(EElement::single(EGen::B)).is_zero());

    CHECK(disc_proj(el("c(0)*d(0)", Cx::F22)) == EElement::single(EGen::T0));
    CHECK(disc_proj(el("c(4)*d(-4)", Cx::F22)) == EElement::single(EGen::T0));
    CHECK(disc_proj(el("c(3)*d(-3)", Cx::F22)) == EElement::single(EGen::T1));
    CHECK(disc_proj(el("a(3/2)*b(1/2)*x(-2)", Cx::F22)) == EElement::single(EGen::B));
    CHECK(disc_proj(el("a(-1/2)*b(-1/2)*x(1)", Cx::F22)) == EElement::single(EGen::B));
    CHECK(disc_proj(el("c(0)*d(0)*x(1)", Cx::F22)).is_zero());
    CHECK(disc_proj(el("c(0)*d(1)*x(-1)", Cx::F22)) == EElement::single(EGen::U));
    CHECK(disc_proj(el("a(1/2)*b(-1/2)", Cx::F22)) == EElement::single(EGen::APlus));
    CHECK(disc_proj(el("a(-1/2)*b(1/2)", Cx::F22)) == EElement::single(EGen::AMinus));
    CHECK(disc_proj(el("a(1/2)*b(-1/2)*x(3)", Cx::F22)).is_zero());

    CHECK(disc_incl(EElement::single(EGen::U)) == el("c(0)*d(1)*x(-1)", Cx::F22));
    for (std::uint8_t b = 0; b < 64; ++b) {
        EElement e = EElement::from_bits(b);
        CHECK(disc_proj(disc_incl(e)) == e);
    }
}

TEST_CASE("summand classification") {
    auto cls = [](const char* s) {
        return summand_classify(*el(s, Cx::F22).terms().begin());
    };
    CHECK(cls("a(1/2)*b(-3/2)") == SummandId::APBM);
    CHECK(cls("c(5)*d(-1)*x(2)") == SummandId::CD);
    CHECK(cls("a(-1/2)*b(-1/2)*x(3)") == SummandId::AMBM);
    CHECK(cls("a(-5/2)*b(7/2)") == SummandId::AMBP);
    CHECK(cls("a(1/2)*b(1/2)") == SummandId::APBP);
}

TEST_CASE("differential preserves winding, never raises weight") {
    std::mt19937 rng(99);
    for (int t = 0; t < 400; ++t) {
        Cx cx = static_cast<Cx>(t % 4);
        Generator g = random_generator(cx, 9, rng);
        Element d = diff(g);
        bool weight_preserving =
            cx == Cx::F00 || cx == Cx::F02 ||
            (cx == Cx::F22 && std::holds_alternative<TagInsular>(g.tag));
        for (const auto& term : d.terms()) {
            CHECK(winding(term) == winding(g));
            CHECK(weight(term) <= weight(g));
            if (weight_preserving) CHECK(weight(term) == weight(g));
        }
    }
}

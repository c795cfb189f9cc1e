#include <doctest.h>

#include "stringhom/homology.hpp"
#include "stringhom/parse.hpp"

using namespace stringhom;

namespace {

Element el(const char* s, Cx cx) { return parse_element(s, cx); }

TruncationSpec spec(Cx cx, HalfInt w, HalfInt m,
                    std::optional<SummandFilter> f = std::nullopt,
                    std::optional<HalfInt> cap = std::nullopt) {
    return {cx, w, m, f, cap};
}

} // namespace

TEST_CASE("basis enumeration") {
    auto b1 = enumerate_basis(spec(Cx::F00, HalfInt::whole(0), HalfInt::whole(2)));
    REQUIRE(b1.size() == 2);
    CHECK(to_string(b1[0]) == "1");
    CHECK(to_string(b1[1]) == "x(-1)*x(1)");

    auto b2 = enumerate_basis(spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(2)));
    REQUIRE(b2.size() == 4);
    CHECK(to_string(b2[0]) == "c(0)");
    CHECK(to_string(b2[1]) == "c(1)*x(-1)");
    CHECK(to_string(b2[2]) == "c(-1)*x(1)");
    CHECK(to_string(b2[3]) == "c(0)*x(-1)*x(1)");

    CHECK(enumerate_basis(spec(Cx::F00, HalfInt::whole(5), HalfInt::whole(3))).empty());

    // Enumeration is deterministic and sorted in the canonical order.
    auto again = enumerate_basis(spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(2)));
    CHECK(again == b2);
    CHECK(std::is_sorted(b2.begin(), b2.end()));
}

TEST_CASE("filters") {
    auto pos = enumerate_basis(spec(Cx::F02, half(1), half(5), SummandFilter::ArcPos));
    for (const auto& g : pos) CHECK(std::get<TagArcA>(g.tag).h.sign() > 0);
    CHECK_THROWS_AS(enumerate_basis(spec(Cx::F22, HalfInt::whole(0), HalfInt::whole(2),
                                         SummandFilter::CD)),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis(spec(Cx::F00, HalfInt::whole(0), HalfInt::whole(2),
                                         SummandFilter::APBP)),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis(spec(Cx::F22, HalfInt::whole(0), HalfInt::whole(2),
                                         SummandFilter::AMBM, half(3))),
                    std::invalid_argument);
    // a-degree caps on positive-arc supported summands are fine.
    auto capped = enumerate_basis(spec(Cx::F22, HalfInt::whole(2), HalfInt::whole(4),
                                       SummandFilter::APBP, half(1)));
    for (const auto& g : capped) CHECK(std::get<TagInsular>(g.tag).i == half(1));
}

TEST_CASE("windows span subcomplexes") {
    std::vector<TruncationSpec> windows = {
        spec(Cx::F00, HalfInt::whole(1), HalfInt::whole(7)),
        spec(Cx::F11, HalfInt::whole(-2), HalfInt::whole(6)),
        spec(Cx::F02, half(3), half(13), SummandFilter::ArcNeg),
        spec(Cx::F22, HalfInt::whole(0), HalfInt::whole(6)),
        spec(Cx::F22, HalfInt::whole(2), HalfInt::whole(6), SummandFilter::APBP, half(3)),
        spec(Cx::F22, HalfInt::whole(-1), HalfInt::whole(5), SummandFilter::APBM),
    };
    for (const auto& s : windows) {
        auto basis = enumerate_basis(s);
        for (const auto& g : basis) {
            Element d = diff(g);
            for (const auto& t : d.terms())
                CHECK(std::binary_search(basis.begin(), basis.end(), t));
        }
    }
}

TEST_CASE("boundary matrices") {
    auto s = spec(Cx::F00, HalfInt::whole(2), HalfInt::whole(2));
    auto basis = enumerate_basis(s);
    REQUIRE(basis.size() == 2);
    CHECK(to_string(basis[0]) == "x(2)");
    CHECK(to_string(basis[1]) == "x(1)^2");
    auto b = boundary_matrix(s);
    CHECK(b.get(1, 0)); // x(2) -> x(1)^2
    CHECK(!b.get(0, 0));
    CHECK(!b.get(0, 1));
    CHECK(!b.get(1, 1));

    CHECK(boundary_matrix(spec(Cx::F00, HalfInt::whole(5), HalfInt::whole(3))).rows() == 0);

    // B*B = 0 on a spread of windows.
    for (Cx cx : {Cx::F00, Cx::F11, Cx::F02, Cx::F22}) {
        HalfInt w = cx == Cx::F02 ? half(1) : HalfInt::whole(0);
        auto m = boundary_matrix(spec(cx, w, HalfInt::whole(5)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            gf2::BitVector col(m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (m.get(i, j)) col.set(i, true);
            CHECK(!m.apply(col).any());
        }
    }
}

TEST_CASE("homology dimensions") {
    auto r1 = homology_dim(spec(Cx::F00, HalfInt::whole(0), HalfInt::whole(2)));
    CHECK(r1.dim_homology == 2);
    CHECK(r1.predicted == 2);
    CHECK(r1.dim_kernel - r1.dim_image == r1.dim_homology);

    CHECK(homology_dim(spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(2))).dim_homology == 0);

    auto r3 = homology_dim(spec(Cx::F02, half(1), half(5), SummandFilter::ArcPos));
    CHECK(r3.dim_space == 3);
    CHECK(r3.dim_homology == 1);
    CHECK(r3.predicted == 1);

    // Representatives are cycles and independent modulo boundaries.
    auto r4 = homology_dim(spec(Cx::F00, HalfInt::whole(0), HalfInt::whole(4)), true);
    CHECK(r4.basis_reps.size() == r4.dim_homology);
    for (const auto& rep : r4.basis_reps) CHECK(is_cycle(rep));
}

TEST_CASE("cycles and boundaries") {
    CHECK(is_cycle(el("c(2)*d(-2)", Cx::F22)));
    CHECK(!is_cycle(el("c(1)*d(0)*x(-1)", Cx::F22)));

    Element s3 = el("a(1/2)*b(5/2) + a(3/2)*b(3/2) + a(5/2)*b(1/2)", Cx::F22);
    auto w = is_boundary(s3, HalfInt::whole(6));
    REQUIRE(w);
    CHECK(diff(*w) == s3);

    for (long m = 2; m <= 10; m += 2)
        CHECK(!is_boundary(el("x(1)*x(-1)", Cx::F00), HalfInt::whole(m)));

    // Monotone: a witness found at M remains one at any larger window.
    auto w8 = is_boundary(s3, HalfInt::whole(8));
    REQUIRE(w8);
    CHECK(diff(*w8) == s3);

    CHECK_THROWS_AS(is_boundary(el("x(1) + x(3)", Cx::F00), HalfInt::whole(6)),
                    std::invalid_argument);
}

TEST_CASE("predicted dimensions") {
    CHECK(predicted_dim(spec(Cx::F00, HalfInt::whole(0), HalfInt::whole(2))) == 2);
    CHECK(predicted_dim(spec(Cx::F00, HalfInt::whole(4), HalfInt::whole(4))) == 1);
    CHECK(predicted_dim(spec(Cx::F22, HalfInt::whole(0), HalfInt::whole(1),
                             SummandFilter::APBM)) == 1);
    CHECK(!predicted_dim(spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(4))));
    CHECK(!predicted_dim(spec(Cx::F22, HalfInt::whole(0), HalfInt::whole(4))));
    CHECK(predicted_dim("f11", spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(4))) == 0);
    CHECK(!predicted_dim("hx", spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(4))));
    CHECK(predicted_dim("f22pm", spec(Cx::F22, HalfInt::whole(0), HalfInt::whole(1),
                                      SummandFilter::APBM)) == 1);
}

TEST_CASE("stabilization scans") {
    std::vector<HalfInt> ws;
    for (long m = 0; m <= 3; ++m) ws.push_back(HalfInt::whole(m));
    auto rows = stabilization_scan(spec(Cx::F11, HalfInt::whole(0), HalfInt::whole(0)), ws);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].report.dim_homology == 1);
    CHECK(rows[1].report.dim_homology == 1);
    CHECK(rows[2].report.dim_homology == 0);
    CHECK(rows[3].report.dim_homology == 0);
    CHECK(!rows[0].stable);
    CHECK(!rows[1].stable);
    CHECK(rows[2].stable);
    CHECK(rows[3].stable);

    std::vector<HalfInt> evens = {HalfInt::whole(0), HalfInt::whole(2), HalfInt::whole(4),
                                  HalfInt::whole(6)};
    auto f00 = stabilization_scan(spec(Cx::F00, HalfInt::whole(0), HalfInt::whole(0)), evens);
    std::vector<std::size_t> dims;
    for (auto& r : f00) {
        dims.push_back(r.report.dim_homology);
        CHECK(r.report.predicted == r.report.dim_homology);
        CHECK(r.stable);
    }
    CHECK(dims == std::vector<std::size_t>{1, 2, 2, 3});

    CHECK(homology_dim(spec(Cx::F00, HalfInt::whole(7), HalfInt::whole(3))).dim_homology == 0);
}

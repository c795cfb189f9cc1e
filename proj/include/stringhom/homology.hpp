#pragma once

// Finite bigraded truncation of each complex and exact homology over GF(2).
//
// A window fixes the winding and bounds the weight. The differential
// preserves winding and never increases weight, and every supported filter
// is differential-stable, so each window spans a finite subcomplex and its
// boundary matrix is square in the canonical basis order.
//
// Windowed truth vs. limit truth: boundary witnesses found in a window are
// conclusive; a "not a boundary" verdict only certifies the window.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stringhom/complex_open.hpp"
#include "stringhom/diagrams.hpp"
#include "stringhom/gf2.hpp"

namespace stringhom {

// Restriction to a differential-stable summand. The four insular F22 values
// and the two F02 arc signs are valid; the traversing part of F22 does not
// form a subcomplex (its differential leaks into the insular summands), so
// "cd" is accepted by the parser but rejected by validation.
enum class SummandFilter { APBP, APBM, AMBP, AMBM, CD, ArcPos, ArcNeg };
const char* name(SummandFilter f);
std::optional<SummandFilter> summand_filter_from(std::string_view s);

struct TruncationSpec {
    Cx complex = Cx::F00;
    HalfInt winding;
    HalfInt max_weight;
    std::optional<SummandFilter> summand;  // F22 insular values; F02 arc signs
    std::optional<HalfInt> max_a_degree;   // cap on positive a-subscripts
};

// Throws std::invalid_argument on filter combinations that do not span a
// subcomplex.
void validate(const TruncationSpec& spec);

// All generators of the window in canonical order.
std::vector<Generator> enumerate_basis(const TruncationSpec& spec);

// Square matrix of the differential in the enumerate_basis ordering
// (columns map to rows).
gf2::BitMatrix boundary_matrix(const TruncationSpec& spec);

struct HomologyReport {
    TruncationSpec spec;
    std::size_t dim_space = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image = 0;
    std::size_t dim_homology = 0;
    std::optional<std::size_t> predicted;
    std::vector<Element> basis_reps; // filled only on request
};

HomologyReport homology_dim(const TruncationSpec& spec, bool want_reps = false);

bool is_cycle(const Element& e);

// Witness u with diff(u) = e inside the weight window, or nothing. The input
// must be homogeneous in winding. A null result certifies non-boundedness
// only within the window.
std::optional<Element> is_boundary(const Element& e, HalfInt max_weight);

// Counting oracles realizing the homology theorems. The auto overload picks
// the theorem matching the spec's complex and filter (none for F11, full F22
// and the traversing summand); the named overload returns nothing on a
// theorem/spec mismatch. Theorems: "hx", "f02", "f22pp", "f22pm", "f22mp",
// "f22mm", "f11".
std::optional<std::size_t> predicted_dim(const TruncationSpec& spec);
std::optional<std::size_t> predicted_dim(std::string_view theorem, const TruncationSpec& spec);

struct ScanRow {
    HalfInt max_weight;
    HomologyReport report;
    bool stable = false; // in the agreeing tail suffix of the scan
};

// homology_dim over a sequence of weight windows (all other fields of the
// template spec fixed). Rows in the largest suffix whose dims agree with
// predictions are flagged stable; for F11 the prediction is the stabilized
// limit 0.
std::vector<ScanRow> stabilization_scan(const TruncationSpec& templ,
                                        const std::vector<HalfInt>& weights);

// Counts used by predicted_dim; exposed for the verification suites.
std::size_t count_fermionic(HalfInt winding, HalfInt max_weight);
std::size_t count_clean_pos(HalfInt winding, HalfInt max_weight);
std::size_t count_clean_neg(HalfInt winding, HalfInt max_weight);
std::size_t count_clean_total(HalfInt winding, HalfInt max_weight);

// Closed monomials with the given winding and weight <= max_weight.
std::vector<ClosedMonomial> closed_monomials(int winding, int max_weight);

// Element <-> coordinate vector helpers for a fixed basis.
gf2::BitVector coordinates(const Element& e, const std::vector<Generator>& basis);
Element element_of(const gf2::BitVector& v, const std::vector<Generator>& basis, Cx cx);

} // namespace stringhom

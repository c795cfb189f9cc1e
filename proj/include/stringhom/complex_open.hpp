#pragma once

// Differentials, brackets, operators and chain maps for the open-string
// complexes F11, F02, F22 and the six-generator disc complex E.
//
// Crossing resolutions are symbolic: the differential of a traversing
// generator c_i d_j x^e is
//   c_i d_j (dx^e) + s_{i+j} x^e + sum_k k e_k (c_{i+k} d_j + c_i d_{j+k}) x_k^{-1} x^e
// and insular/arc generators obey the Leibniz rule with
//   da_n = sum_{i+j=n, ij>0} a_i x_j   (same for b, c).

#include <array>
#include <cstdint>
#include <optional>

#include "stringhom/complex_x.hpp"
#include "stringhom/diagrams.hpp"

namespace stringhom {

// Differential, dispatching on the complex (F00 delegates to diff_x).
// Preserves winding of every term and never increases weight.
Element diff(const Generator& g);
Element diff(const Element& e);

// ---------------------------------------------------------------------------
// Goldman bracket of one traversing string with one closed curve:
// [c_i, x_k] = k c_{i+k} and [d_j, x_k] = k d_{j+k} (mod 2).

enum class TravSide { C, D };

struct TravString {
    TravSide side;
    int subscript;
    friend bool operator==(const TravString&, const TravString&) = default;
};

// Empty result when k is even (the |k| crossings cancel mod 2).
std::optional<TravString> bracket_open_closed(TravString s, int k);

// Same bracket for a c-string, returned inside F11 where c_n is a generator.
Element bracket_c_closed(int i, int k);

// ---------------------------------------------------------------------------
// F22 structure.

// The diagonal element sum of a_k b_l over k+l = n, k*l > 0 (|n| terms);
// equals the bracket [c_i, d_j] for every i+j = n.
Element insular_diagonal(int n);

enum class SummandId { APBP, APBM, AMBP, AMBM, CD };
const char* name(SummandId s);
SummandId summand_classify(const Generator& g); // F22 generators only

// Subscript negation a_i -> a_{-i}, b_j -> b_{-j}, c/d/x likewise.
// An involution and a chain map on every complex.
Element iota(const Element& e);

// Sum of the closed coefficients of traversing terms on the diagonal
// i + j = n; a chain map F22 -> F00 that ignores insular terms.
Element diagonal_sum(int n, const Element& e);

// ---------------------------------------------------------------------------
// Source operators on F11 (j odd):
//   source_alpha(j):      c_n x^e -> e_j c_{n+j} x_j^{-1} x^e
//   source_alpha_star(j): c_n x^e -> c_{n-j} x_j x^e
// The star operator is a chain homotopy from 1 to 0: [diff, star] = 1.
Element source_alpha(int j, const Element& e);
Element source_alpha_star(int j, const Element& e);

// ---------------------------------------------------------------------------
// Closing-off chain maps into F00.

// F02 supported on positive arcs: a_{n-1/2} p -> x_n p.
Element closeoff_plus(const Element& e);
// F22 supported on the a+/b- summand: a_{i-1/2} b_{-j+1/2} p -> x_i p x_{-j}.
Element glue_both(const Element& e);

// ---------------------------------------------------------------------------
// The disc complex E with dU = B + T0 + T1 and chain maps to/from F22.

enum class EGen : std::uint8_t { APlus = 0, AMinus, B, T0, T1, U };

class EElement {
public:
    EElement() = default;
    static EElement single(EGen g);

    bool contains(EGen g) const { return bits_ & bit(g); }
    void toggle(EGen g) { bits_ ^= bit(g); }
    bool is_zero() const { return bits_ == 0; }
    std::uint8_t bits() const { return bits_; }
    static EElement from_bits(std::uint8_t b);

    EElement& operator+=(EElement o) {
        bits_ ^= o.bits_;
        return *this;
    }
    friend EElement operator+(EElement a, EElement b) { return a += b; }
    friend bool operator==(EElement, EElement) = default;

private:
    static std::uint8_t bit(EGen g) { return std::uint8_t(1) << static_cast<int>(g); }
    std::uint8_t bits_ = 0;
};

std::string to_string(const EElement& e);

EElement diff_e(const EElement& e);
Element disc_incl(const EElement& e);     // chain map E -> F22
EElement disc_proj(const Element& e);     // chain map F22 -> E; proj o incl = 1
bool e_is_cycle(const EElement& e);       // no U component
bool e_is_boundary(const EElement& e);    // 0 or B + T0 + T1
// Nonzero class in H(E) = Z2^4 (basis classes A+, A-, T0, T1).
bool e_nonzero_in_homology(const EElement& e);

} // namespace stringhom

#pragma once

// The closed-string algebra X = Z2[..., x_{-1}, x_1, ...] with differential
// x_{2k} -> x_k^2, x_{2k+1} -> 0 extended by the Leibniz rule; its decay and
// fusion operators; and the one-variable-family model algebra
// Y = Z2[y_0, y_1, ...] with y_i -> y_{i-1}^2, carrying the level hierarchy
// used for the chain-homotopy arguments. Y is kept as a separate variable
// family so the isomorphism x_{j*2^k} -> y_k can be tested explicitly.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stringhom/diagrams.hpp"

namespace stringhom {

// Differential on F00 (the X algebra). Preserves winding and weight.
Element diff_x(const Element& e);

struct OddDecomposition {
    int odd;      // j
    int exponent; // k, so n = j * 2^k with j odd
    friend bool operator==(const OddDecomposition&, const OddDecomposition&) = default;
};
OddDecomposition odd_decompose(int n); // n != 0

// Decay x_{j*2^k} -> x_{j*2^{k-1}}^2 (Leibniz), all other variables to 0.
// j odd, k >= 1. Acts on the closed part of any complex, tags untouched.
Element decay(int j, int k, const Element& e);
// Fusion: multiplication by x_{j*2^{k-1}}^{-2} x_{j*2^k} when the exponent of
// x_{j*2^{k-1}} is at least 2, zero otherwise. j odd, k >= 1. Acts on the
// closed part of any complex.
Element fusion(int j, int k, const Element& e);

// ---------------------------------------------------------------------------
// The model algebra Y.

class YMonomial {
public:
    YMonomial() = default;
    static YMonomial var(int index, int exponent = 1); // index >= 0

    bool empty() const { return factors_.empty(); }
    int exponent_of(int index) const;
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    YMonomial times_var(int index, int delta) const;
    long grade() const; // sum e_i * 2^i

    friend bool operator==(const YMonomial&, const YMonomial&) = default;
    friend auto operator<=>(const YMonomial&, const YMonomial&) = default;

private:
    std::vector<std::pair<int, int>> factors_; // sorted by index, exponents >= 1
};

class YElement {
public:
    YElement() = default;
    static YElement single(YMonomial m);

    const std::set<YMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void toggle(YMonomial m);
    YElement& operator+=(const YElement& o);
    friend YElement operator+(YElement a, const YElement& b) {
        a += b;
        return a;
    }
    friend bool operator==(const YElement&, const YElement&) = default;

private:
    std::set<YMonomial> terms_;
};

YElement diff_y(const YElement& e);
YElement alpha_y(int k, const YElement& e);      // decay; alpha_0 = 0
YElement alpha_y_star(int k, const YElement& e); // fusion; alpha_0^* = 0

// Level in the Weyl hierarchy: a nonnegative integer or infinity.
struct Level {
    bool infinite = false;
    int value = 0;

    static Level at(int v) { return {false, v}; }
    static Level inf() { return {true, 0}; }
    friend bool operator==(const Level&, const Level&) = default;
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

Level level_of(const YMonomial& m);

// ---------------------------------------------------------------------------
// Monomial classes whose spans give the homology bases.

// All subscripts odd and all exponents 1.
bool is_fermionic(const ClosedMonomial& m);
// Fermionic and avoiding x_1 / x_{-1} / both.
bool is_clean_pos(const ClosedMonomial& m);
bool is_clean_neg(const ClosedMonomial& m);
bool is_clean_total(const ClosedMonomial& m);

// All fermionic monomials with the given winding and weight <= max_weight,
// optionally excluding x_1 and/or x_{-1}; canonical order. This enumeration
// is the counting oracle the homology dimensions are checked against.
std::vector<ClosedMonomial> fermionic_monomials(HalfInt winding, HalfInt max_weight,
                                                bool exclude_pos1 = false,
                                                bool exclude_neg1 = false);

// All Y monomials of grade exactly `grade`.
std::vector<YMonomial> y_monomials_of_grade(long grade);
// All Y monomials of grade <= max_grade.
std::vector<YMonomial> y_monomials_up_to(long max_grade);

} // namespace stringhom

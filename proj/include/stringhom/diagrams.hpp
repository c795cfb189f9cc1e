#pragma once

// Canonical domain types for string diagrams on marked annuli: closed-curve
// monomials, open-string tags, basis generators and Z2 elements.
//
// Z2 coefficients are presence sets: adding a generator twice removes it.
// The contractible loop x_0 is handled at the module-action boundary
// (multiplying by it yields zero) and is never stored as a key.

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stringhom/halfint.hpp"

namespace stringhom {

enum class Cx { F00, F11, F02, F22 };

const char* name(Cx cx);

// ---------------------------------------------------------------------------
// Closed part: a product of closed curves x_k^{e_k}, k a nonzero integer.

class ClosedMonomial {
public:
    ClosedMonomial() = default;

    // x_subscript^exponent; subscript must be nonzero, exponent positive.
    static ClosedMonomial var(int subscript, int exponent = 1);

    bool empty() const { return factors_.empty(); }
    int exponent_of(int subscript) const;
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    ClosedMonomial times(const ClosedMonomial& o) const;
    // Multiply by x_subscript^delta. delta may be negative; the resulting
    // exponent must stay nonnegative.
    ClosedMonomial times_var(int subscript, int delta) const;

    int winding() const;      // sum k * e_k
    int weight() const;       // sum |k| * e_k
    int string_count() const; // sum e_k

    friend bool operator==(const ClosedMonomial&, const ClosedMonomial&) = default;
    friend auto operator<=>(const ClosedMonomial&, const ClosedMonomial&) = default;

private:
    // Sorted by subscript; exponents >= 1.
    std::vector<std::pair<int, int>> factors_;
};

// ---------------------------------------------------------------------------
// Open part: one tag per complex.

struct TagEmpty { // F00
    friend bool operator==(const TagEmpty&, const TagEmpty&) = default;
    friend auto operator<=>(const TagEmpty&, const TagEmpty&) = default;
};
struct TagArcC { // F11: the traversing string c_n
    int n;
    friend bool operator==(const TagArcC&, const TagArcC&) = default;
    friend auto operator<=>(const TagArcC&, const TagArcC&) = default;
};
struct TagArcA { // F02: the boundary-parallel string a_h, h half-odd
    HalfInt h;
    friend bool operator==(const TagArcA&, const TagArcA&) = default;
    friend auto operator<=>(const TagArcA&, const TagArcA&) = default;
};
struct TagInsular { // F22: the pair a_i b_j, i and j half-odd
    HalfInt i, j;
    friend bool operator==(const TagInsular&, const TagInsular&) = default;
    friend auto operator<=>(const TagInsular&, const TagInsular&) = default;
};
struct TagTraversing { // F22: the pair c_m d_n
    int m, n;
    friend bool operator==(const TagTraversing&, const TagTraversing&) = default;
    friend auto operator<=>(const TagTraversing&, const TagTraversing&) = default;
};

using OpenTag = std::variant<TagEmpty, TagArcC, TagArcA, TagInsular, TagTraversing>;

Cx complex_of(const OpenTag& tag);
HalfInt tag_winding(const OpenTag& tag);
HalfInt tag_weight(const OpenTag& tag);
// a/b subscripts must be half-odd; throws std::invalid_argument otherwise.
void validate_tag(const OpenTag& tag);

// ---------------------------------------------------------------------------
// Generator: one canonical basis string diagram.

struct Generator {
    OpenTag tag;
    ClosedMonomial closed;

    Cx complex() const { return complex_of(tag); }
};

HalfInt winding(const Generator& g);
HalfInt weight(const Generator& g);

bool operator==(const Generator& a, const Generator& b);
// Canonical basis order: weight, then number of closed strings, then the
// closed monomial lexicographically, then the tag. Used for term ordering,
// serialization and basis enumeration.
std::strong_ordering operator<=>(const Generator& a, const Generator& b);

// ---------------------------------------------------------------------------
// Element: a finite Z2-linear combination of generators of one complex.

class Element {
public:
    explicit Element(Cx cx) : cx_(cx) {}

    static Element zero(Cx cx) { return Element(cx); }
    static Element single(Generator g);

    Cx complex() const { return cx_; }
    const std::set<Generator>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Z2 addition of a single generator; throws on complex mismatch.
    void toggle(Generator g);

    Element& operator+=(const Element& o);
    friend Element operator+(Element a, const Element& b) {
        a += b;
        return a;
    }
    friend bool operator==(const Element&, const Element&) = default;

private:
    Cx cx_;
    std::set<Generator> terms_;
};

// Module action of the closed-string algebra. Multiplying by a factor with
// subscript 0 gives the zero element (the contractible-loop quotient);
// mul_var accepts subscript 0 for exactly that purpose.
Element mul_closed(const Element& e, const ClosedMonomial& m);
Element mul_var(const Element& e, int subscript, int exponent = 1);

// Canonical text form: open atoms first, closed subscripts ascending,
// e.g. "a(1/2)*b(-3/2)*x(-1)^2*x(3)"; terms joined by " + "; zero is "0".
std::string to_string(const Generator& g);
std::string to_string(const Element& e);

} // namespace stringhom

#pragma once

// Dense bit-packed linear algebra over GF(2): rank, solving, kernel bases.
// Deterministic pivoting (first nonzero entry, columns left to right) so the
// homology engine produces reproducible representatives and witnesses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace stringhom::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : n_(length), w_((length + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void flip(std::size_t i);
    bool any() const;
    std::size_t popcount() const;

    BitVector& operator^=(const BitVector& o);
    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
    friend class BitMatrix;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool v);
    void flip(std::size_t i, std::size_t j);

    // dst ^= src, as rows.
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    // Matrix-vector product over GF(2); x.size() must equal cols().
    BitVector apply(const BitVector& x) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::size_t wpr_ = 0; // words per row
    std::vector<std::uint64_t> data_;
};

std::size_t rank(BitMatrix m);

// Some x with a*x = b, if one exists. Reduced echelon with free variables
// set to zero, so the returned solution is deterministic.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

// Basis of {x : a*x = 0}, ordered by free-column index.
std::vector<BitVector> kernel_basis(const BitMatrix& a);

// Incremental GF(2) row space. insert() reduces the vector against the rows
// held so far and keeps it when independent.
class Span {
public:
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    std::size_t dim() const { return rows_.size(); }

private:
    std::vector<BitVector> rows_;
    std::vector<std::size_t> lead_;
};

} // namespace stringhom::gf2

#include "stringhom/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace stringhom::gf2 {

bool BitVector::get(std::size_t i) const {
    assert(i < n_);
    return (w_[i / 64] >> (i % 64)) & 1u;
}

void BitVector::set(std::size_t i, bool v) {
    assert(i < n_);
    std::uint64_t mask = std::uint64_t(1) << (i % 64);
    if (v)
        w_[i / 64] |= mask;
    else
        w_[i / 64] &= ~mask;
}

void BitVector::flip(std::size_t i) {
    assert(i < n_);
    w_[i / 64] ^= std::uint64_t(1) << (i % 64);
}

bool BitVector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return (data_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
    assert(i < rows_ && j < cols_);
    std::uint64_t mask = std::uint64_t(1) << (j % 64);
    if (v)
        data_[i * wpr_ + j / 64] |= mask;
    else
        data_[i * wpr_ + j / 64] &= ~mask;
}

void BitMatrix::flip(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    data_[i * wpr_ + j / 64] ^= std::uint64_t(1) << (j % 64);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    assert(dst < rows_ && src < rows_);
    std::uint64_t* d = data_.data() + dst * wpr_;
    const std::uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * wpr_, data_.begin() + (a + 1) * wpr_,
                     data_.begin() + b * wpr_);
}

BitVector BitMatrix::apply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("gf2: dimension mismatch in apply");
    BitVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = data_.data() + i * wpr_;
        for (std::size_t k = 0; k < wpr_ && k < x.w_.size(); ++k) acc ^= row[k] & x.w_[k];
        if (std::popcount(acc) & 1) r.set(i, true);
    }
    return r;
}

namespace {

// Reduced row echelon form over the first `ncols` columns of m (m may carry
// extra augmented columns that are swept along but never pivoted on).
struct Echelon {
    BitMatrix m;
    std::vector<std::ptrdiff_t> pivot_row_of_col; // -1 if free
    std::vector<std::size_t> pivot_cols;
};

Echelon reduced_echelon(BitMatrix m, std::size_t ncols) {
    Echelon e{std::move(m), std::vector<std::ptrdiff_t>(ncols, -1), {}};
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < e.m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < e.m.rows() && !e.m.get(pivot, c)) ++pivot;
        if (pivot == e.m.rows()) continue;
        e.m.swap_rows(pivot, r);
        for (std::size_t i = 0; i < e.m.rows(); ++i)
            if (i != r && e.m.get(i, c)) e.m.xor_row(i, r);
        e.pivot_row_of_col[c] = static_cast<std::ptrdiff_t>(r);
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

std::size_t rank(BitMatrix m) {
    std::size_t ncols = m.cols();
    return reduced_echelon(std::move(m), ncols).pivot_cols.size();
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("gf2: dimension mismatch in solve");
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) aug.set(i, j, true);
        if (b.get(i)) aug.set(i, a.cols(), true);
    }
    Echelon e = reduced_echelon(std::move(aug), a.cols());
    // A row with empty coefficient part but a 1 in the augmented column is a
    // contradiction.
    for (std::size_t i = e.pivot_cols.size(); i < e.m.rows(); ++i)
        if (e.m.get(i, a.cols())) return std::nullopt;
    BitVector x(a.cols());
    for (std::size_t c : e.pivot_cols) {
        auto r = static_cast<std::size_t>(e.pivot_row_of_col[c]);
        if (e.m.get(r, a.cols())) x.set(c, true);
    }
    return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    std::size_t ncols = a.cols();
    Echelon e = reduced_echelon(a, ncols);
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (e.pivot_row_of_col[f] >= 0) continue;
        BitVector v(ncols);
        v.set(f, true);
        for (std::size_t c : e.pivot_cols) {
            auto r = static_cast<std::size_t>(e.pivot_row_of_col[c]);
            if (e.m.get(r, f)) v.set(c, true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Span::insert(BitVector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(lead_[i])) v ^= rows_[i];
    if (!v.any()) return false;
    std::size_t lead = 0;
    while (!v.get(lead)) ++lead;
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    // Keep earlier rows reduced against the new one.
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
        if (rows_[i].get(lead)) rows_[i] ^= rows_.back();
    return true;
}

bool Span::contains(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(lead_[i])) v ^= rows_[i];
    return !v.any();
}

} // namespace stringhom::gf2

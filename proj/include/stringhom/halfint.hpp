#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>

namespace stringhom {

// Exact half-integer. The represented value is doubled()/2; all arithmetic
// stays on the doubled integer, so there is no rounding anywhere.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(std::int64_t doubled) { return HalfInt(doubled); }

    constexpr std::int64_t doubled() const { return d_; }
    constexpr bool is_whole() const { return d_ % 2 == 0; }
    constexpr std::int64_t whole_value() const {
        assert(is_whole());
        return d_ / 2;
    }
    // Sign of the value: -1, 0 or +1.
    constexpr int sign() const { return d_ < 0 ? -1 : (d_ > 0 ? 1 : 0); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.d_ + b.d_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.d_ - b.d_); }
    constexpr HalfInt operator-() const { return HalfInt(-d_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        d_ += o.d_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        d_ -= o.d_;
        return *this;
    }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return HalfInt(d_ < 0 ? -d_ : d_); }

    // "p" for whole values, "p/2" otherwise; matches the CLI subscript syntax.
    std::string str() const {
        if (is_whole())
            return std::to_string(d_ / 2);
        return std::to_string(d_) + "/2";
    }

private:
    explicit constexpr HalfInt(std::int64_t d) : d_(d) {}
    std::int64_t d_ = 0;
};

inline HalfInt abs(HalfInt h) { return h.abs(); }

inline constexpr HalfInt half(std::int64_t doubled) { return HalfInt::halves(doubled); }

} // namespace stringhom

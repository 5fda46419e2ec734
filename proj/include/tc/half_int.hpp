#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace tc {

// Half-integer quantum numbers (Dicke index r, magnetic index m) stored as
// twice their value, so parity logic like N/2 - r stays exact.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice(2 * n) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice = t;
        return h;
    }

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool is_nonneg() const { return twice >= 0; }

    constexpr HalfInt operator-() const { return from_twice(-twice); }
    constexpr HalfInt& operator+=(HalfInt o) {
        twice += o.twice;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        twice -= o.twice;
        return *this;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline constexpr HalfInt half(int t) { return HalfInt::from_twice(t); }

inline constexpr HalfInt min(HalfInt a, HalfInt b) { return a <= b ? a : b; }
inline constexpr HalfInt max(HalfInt a, HalfInt b) { return a >= b ? a : b; }

}  // namespace tc

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace normcalc {

// Thrown for invalid inputs and violated preconditions. The CLI maps these to
// exit code 2.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in addition");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in multiplication");
    return r;
}

// Half-integer stored as its double. Printing renders exact fractions.
struct HalfInt {
    int64_t doubled = 0;

    HalfInt() = default;
    explicit HalfInt(int64_t d) : doubled(d) {}
    static HalfInt from_int(int64_t n) { return HalfInt(2 * n); }

    bool is_integer() const { return doubled % 2 == 0; }
    int64_t as_integer() const {
        if (!is_integer()) throw error("half-integer is not an integer: " + str());
        return doubled / 2;
    }
    HalfInt operator+(HalfInt o) const { return HalfInt(checked_add(doubled, o.doubled)); }
    HalfInt operator-(HalfInt o) const { return HalfInt(checked_add(doubled, -o.doubled)); }
    HalfInt operator-() const { return HalfInt(-doubled); }
    bool operator==(const HalfInt&) const = default;
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (doubled % 2 == 0) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }
};

}  // namespace normcalc

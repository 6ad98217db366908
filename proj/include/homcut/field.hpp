#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace homcut {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator).
using Rat = mpq_class;

// GF(2) scalar.
struct F2 {
    uint8_t v = 0;
    F2() = default;
    F2(int x) : v(static_cast<uint8_t>(x & 1)) {}
    friend F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator-(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
    F2& operator+=(F2 b) { v ^= b.v; return *this; }
    F2& operator-=(F2 b) { v ^= b.v; return *this; }
    F2 operator-() const { return *this; }
    friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
    friend bool operator!=(F2 a, F2 b) { return a.v != b.v; }
};

enum class FieldTag { GF2, Rational };

template <class K> struct field_traits;

template <> struct field_traits<F2> {
    static F2 zero() { return F2(0); }
    static F2 one() { return F2(1); }
    static bool is_zero(F2 a) { return a.v == 0; }
    static F2 inv(F2 a) {
        if (a.v == 0) throw std::domain_error("division by zero in GF(2)");
        return a;
    }
    static F2 neg(F2 a) { return a; }
    static constexpr FieldTag tag = FieldTag::GF2;
};

template <> struct field_traits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat inv(const Rat& a) {
        if (sgn(a) == 0) throw std::domain_error("division by zero");
        return Rat(1) / a;
    }
    static Rat neg(const Rat& a) { return -a; }
    static constexpr FieldTag tag = FieldTag::Rational;
};

// Parse a rational from "a/b", "a", or a plain decimal like "-1.25".
Rat parse_rational(const std::string& s);

// Canonical text form: "num" or "num/den".
std::string rational_to_string(const Rat& q);

} // namespace homcut

#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace gridrig {

using Rational = mpq_class;
using Integer = mpz_class;

/// A point or direction in the plane with exact coordinates.
using Vec2 = std::array<Rational, 2>;

/// Parses "n" or "n/d" (optional leading minus). The result is canonical.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }

inline Rational dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator-(const Vec2& a) { return {-a[0], -a[1]}; }
inline Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a[0], s * a[1]}; }

inline Vec2 make_vec(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace gridrig

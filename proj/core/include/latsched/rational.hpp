// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latsched {

/// Exact rational arithmetic on int64 numerator/denominator.
///
/// Analysis left-hand sides and slacks are computed with this type so
/// verdicts never depend on floating-point rounding.  Intermediate
/// products go through __int128; anything that would leave the int64
/// range throws std::overflow_error (the tool's quantities are tiny,
/// overflow means a caller bug).
class Rational {
public:
	constexpr Rational() = default;
	constexpr Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit on purpose
	Rational(std::int64_t num, std::int64_t den);

	/// Accepts "7", "-3", "7/2" and decimal literals like "0.25".
	static std::optional<Rational> parse(std::string_view text);

	/// Best rational approximation with bounded denominator (continued
	/// fractions).  Recovers e.g. 0.1 -> 1/10 from its double image.
	static Rational from_double(double v, std::int64_t max_den = 1'000'000);

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }
	bool is_integer() const { return den_ == 1; }
	bool is_zero() const { return num_ == 0; }
	bool is_negative() const { return num_ < 0; }

	double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
	std::string to_string() const;

	Rational operator-() const;
	Rational operator+(const Rational& o) const;
	Rational operator-(const Rational& o) const;
	Rational operator*(const Rational& o) const;
	Rational operator/(const Rational& o) const;  // throws on division by zero
	Rational& operator+=(const Rational& o) { return *this = *this + o; }
	Rational& operator-=(const Rational& o) { return *this = *this - o; }

	std::strong_ordering operator<=>(const Rational& o) const;
	bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
	std::int64_t num_ = 0;
	std::int64_t den_ = 1;  // always > 0, gcd(|num|, den) == 1
};

}  // namespace latsched

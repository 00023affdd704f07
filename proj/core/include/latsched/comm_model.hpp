// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "latsched/rational.hpp"

namespace latsched {

/// Inter-processor communication overhead added to a latency condition
/// when the allocation spans m processors:
///   linear:      q * (m - 1)
///   logarithmic: q * log_base(m)     (base 2 unless configured otherwise)
/// Both are zero at m == 1.
struct CommModel {
	enum class Kind { linear, logarithmic };
	Kind kind = Kind::linear;
	Rational q = 0;
	std::uint32_t log_base = 2;  // logarithmic model only; must be >= 2
};

/// Exact value of the form  base + coeff * log_b(arg).
///
/// Linear-model arithmetic stays purely rational; the logarithmic model
/// keeps its irrational part symbolic so comparisons against integer
/// latency bounds can still be decided exactly (via integer power
/// comparisons) instead of through floating point.  Exact powers of the
/// log base are folded into the rational part on construction.
class Cost {
public:
	Cost() = default;
	Cost(Rational rational_value) : base_(rational_value) {}  // NOLINT: implicit
	Cost(Rational base, Rational coeff, std::uint32_t arg, std::uint32_t log_base);

	const Rational& rational_part() const { return base_; }
	bool is_rational() const { return coeff_.is_zero(); }
	double to_double() const;
	std::string to_string() const;

	Cost operator+(const Rational& r) const;
	friend Cost operator+(const Rational& r, const Cost& c) { return c + r; }
	/// r - *this (slacks may be negative).
	Cost subtract_from(const Rational& r) const;

	/// Exact three-way comparison with a rational.  Decides
	/// coeff*log_b(arg) <=> r - base by comparing arg^den with b^num in
	/// arbitrary-precision integers.
	std::strong_ordering compare(const Rational& r) const;
	bool operator<=(const Rational& r) const { return compare(r) <= 0; }

	/// Exact comparison of two costs sharing one log base (their
	/// coefficients may differ).  Used for max() in the bound formulas.
	std::strong_ordering compare(const Cost& other) const;
	static const Cost& max(const Cost& a, const Cost& b) {
		return a.compare(b) >= 0 ? a : b;
	}

private:
	Rational base_ = 0;
	Rational coeff_ = 0;       // zero for purely rational values
	std::uint32_t arg_ = 1;    // log argument; 1 when coeff is zero
	std::uint32_t log_base_ = 2;
};

Cost comm_overhead(const CommModel& model, int m);

const char* to_string(CommModel::Kind kind);

}  // namespace latsched

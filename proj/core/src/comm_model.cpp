// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/comm_model.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <utility>
#include <vector>

#include "latsched/errors.hpp"

namespace latsched {

namespace {

using boost::multiprecision::cpp_int;
using i128 = __int128;

// Exact sign of  sum_i coeff_i * log_b(arg_i)  -  r.
//
// Clearing denominators turns the question into  prod arg_i^P_i <=> b^M,
// which cpp_int settles without rounding.  Exponent magnitudes are tiny in
// practice (args are processor counts); the bit guard only protects
// against absurd inputs.
std::strong_ordering cmp_log_sum(std::uint32_t base,
                                 std::vector<std::pair<Rational, std::uint32_t>> terms,
                                 const Rational& r) {
	std::erase_if(terms, [](const auto& t) { return t.first.is_zero() || t.second <= 1; });
	if (terms.empty()) {
		auto c = Rational(0) <=> r;
		return c;
	}

	auto gcd128 = [](i128 a, i128 b) {
		while (b != 0) {
			i128 t = a % b;
			a = b;
			b = t;
		}
		return a;
	};
	i128 lcm = r.den();
	for (const auto& [c, a] : terms) {
		lcm = lcm / gcd128(lcm, c.den()) * c.den();
		if (lcm > (i128(1) << 62)) throw std::overflow_error("log comparison denominators");
	}

	i128 m = i128(r.num()) * (lcm / r.den());
	cpp_int lhs = 1, rhs = 1;
	double bits = 0;
	auto mul_pow = [&bits](cpp_int& acc, std::uint64_t x, i128 e) {
		if (e == 0) return;
		if (e < 0 || e > (1 << 22)) throw std::overflow_error("log comparison exponent");
		bits += static_cast<double>(e) * std::log2(static_cast<double>(x));
		if (bits > double(1 << 22)) throw std::overflow_error("log comparison magnitude");
		acc *= boost::multiprecision::pow(cpp_int(x), static_cast<unsigned>(e));
	};
	for (const auto& [c, a] : terms) {
		i128 p = i128(c.num()) * (lcm / c.den());
		if (p >= 0)
			mul_pow(lhs, a, p);
		else
			mul_pow(rhs, a, -p);
	}
	if (m >= 0)
		mul_pow(rhs, base, m);
	else
		mul_pow(lhs, base, -m);

	if (lhs < rhs) return std::strong_ordering::less;
	if (lhs > rhs) return std::strong_ordering::greater;
	return std::strong_ordering::equal;
}

}  // namespace

Cost::Cost(Rational base, Rational coeff, std::uint32_t arg, std::uint32_t log_base)
    : base_(base), coeff_(coeff), arg_(arg), log_base_(log_base) {
	if (log_base_ < 2) throw InvalidArgumentError("log base must be >= 2");
	if (arg_ < 1) throw InvalidArgumentError("log argument must be >= 1");
	if (coeff_.is_zero() || arg_ == 1) {
		coeff_ = 0;
		arg_ = 1;
		return;
	}
	// fold exact powers of the base into the rational part
	std::uint64_t v = arg_;
	int exp = 0;
	while (v % log_base_ == 0) {
		v /= log_base_;
		++exp;
	}
	if (v == 1) {
		base_ += coeff_ * Rational(exp);
		coeff_ = 0;
		arg_ = 1;
	}
}

double Cost::to_double() const {
	double v = base_.to_double();
	if (!coeff_.is_zero())
		v += coeff_.to_double() * std::log2(static_cast<double>(arg_)) /
		     std::log2(static_cast<double>(log_base_));
	return v;
}

std::string Cost::to_string() const {
	if (is_rational()) return base_.to_string();
	std::string s = base_.to_string();
	s += " + " + coeff_.to_string() + "*log" + std::to_string(log_base_) + "(" +
	     std::to_string(arg_) + ")";
	return s;
}

Cost Cost::operator+(const Rational& r) const {
	Cost c = *this;
	c.base_ += r;
	return c;
}

Cost Cost::subtract_from(const Rational& r) const {
	if (is_rational()) return Cost(r - base_);
	return Cost(r - base_, -coeff_, arg_, log_base_);
}

std::strong_ordering Cost::compare(const Rational& r) const {
	if (is_rational()) return base_ <=> r;
	return cmp_log_sum(log_base_, {{coeff_, arg_}}, r - base_);
}

std::strong_ordering Cost::compare(const Cost& other) const {
	if (other.is_rational()) return compare(other.base_);
	if (is_rational()) {
		auto flipped = other.compare(base_);
		if (flipped == std::strong_ordering::less) return std::strong_ordering::greater;
		if (flipped == std::strong_ordering::greater) return std::strong_ordering::less;
		return std::strong_ordering::equal;
	}
	if (log_base_ != other.log_base_)
		throw InvalidArgumentError("comparing costs with different log bases");
	return cmp_log_sum(log_base_, {{coeff_, arg_}, {-other.coeff_, other.arg_}},
	                   other.base_ - base_);
}

Cost comm_overhead(const CommModel& model, int m) {
	if (m < 1) throw InvalidArgumentError("overhead needs m >= 1");
	if (model.kind == CommModel::Kind::linear)
		return Cost(model.q * Rational(m - 1));
	return Cost(Rational(0), model.q, static_cast<std::uint32_t>(m), model.log_base);
}

const char* to_string(CommModel::Kind kind) {
	return kind == CommModel::Kind::linear ? "linear" : "log";
}

}  // namespace latsched

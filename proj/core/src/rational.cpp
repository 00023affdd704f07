// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace latsched {

namespace {

using i128 = __int128;

std::int64_t checked_cast(i128 v, const char* what) {
	if (v > INT64_MAX || v < INT64_MIN)
		throw std::overflow_error(std::string("rational overflow in ") + what);
	return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
	if (a < 0) a = -a;
	if (b < 0) b = -b;
	while (b != 0) {
		i128 t = a % b;
		a = b;
		b = t;
	}
	return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
	if (den == 0) throw std::domain_error("rational with zero denominator");
	i128 n = num, d = den;
	if (d < 0) {
		n = -n;
		d = -d;
	}
	i128 g = gcd128(n, d);
	if (g > 1) {
		n /= g;
		d /= g;
	}
	num_ = checked_cast(n, "construction");
	den_ = checked_cast(d, "construction");
}

std::optional<Rational> Rational::parse(std::string_view text) {
	if (text.empty()) return std::nullopt;
	std::string s(text);
	if (auto slash = s.find('/'); slash != std::string::npos) {
		char* end = nullptr;
		long long n = std::strtoll(s.c_str(), &end, 10);
		if (end != s.c_str() + slash) return std::nullopt;
		long long d = std::strtoll(s.c_str() + slash + 1, &end, 10);
		if (*end != '\0' || d == 0) return std::nullopt;
		return Rational(n, d);
	}
	if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
	    s.find('E') != std::string::npos) {
		char* end = nullptr;
		double v = std::strtod(s.c_str(), &end);
		if (*end != '\0' || !std::isfinite(v)) return std::nullopt;
		return from_double(v);
	}
	char* end = nullptr;
	long long n = std::strtoll(s.c_str(), &end, 10);
	if (*end != '\0') return std::nullopt;
	return Rational(n);
}

Rational Rational::from_double(double v, std::int64_t max_den) {
	if (!std::isfinite(v)) throw std::domain_error("non-finite rational");
	bool neg = v < 0;
	double x = neg ? -v : v;
	// continued-fraction convergents p/q until q would exceed max_den
	std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
	double frac = x;
	for (int it = 0; it < 64; ++it) {
		double fl = std::floor(frac);
		if (fl > static_cast<double>(INT64_MAX) / 2) break;
		auto a = static_cast<std::int64_t>(fl);
		i128 p2 = i128(a) * p1 + p0;
		i128 q2 = i128(a) * q1 + q0;
		if (q2 > max_den || p2 > INT64_MAX) break;
		p0 = p1;
		q0 = q1;
		p1 = static_cast<std::int64_t>(p2);
		q1 = static_cast<std::int64_t>(q2);
		double rem = frac - fl;
		if (rem < 1e-15) break;
		frac = 1.0 / rem;
	}
	if (q1 == 0) throw std::domain_error("rational approximation failed");
	return Rational(neg ? -p1 : p1, q1);
}

std::string Rational::to_string() const {
	if (den_ == 1) return std::to_string(num_);
	return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
	Rational r;
	r.num_ = -num_;
	r.den_ = den_;
	return r;
}

Rational Rational::operator+(const Rational& o) const {
	i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
	i128 d = i128(den_) * o.den_;
	i128 g = gcd128(n, d);
	if (g > 1) {
		n /= g;
		d /= g;
	}
	Rational r;
	r.num_ = checked_cast(n, "addition");
	r.den_ = checked_cast(d, "addition");
	return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
	i128 n = i128(num_) * o.num_;
	i128 d = i128(den_) * o.den_;
	i128 g = gcd128(n, d);
	if (g > 1) {
		n /= g;
		d /= g;
	}
	Rational r;
	r.num_ = checked_cast(n, "multiplication");
	r.den_ = checked_cast(d, "multiplication");
	return r;
}

Rational Rational::operator/(const Rational& o) const {
	if (o.num_ == 0) throw std::domain_error("rational division by zero");
	i128 n = i128(num_) * o.den_;
	i128 d = i128(den_) * o.num_;
	if (d < 0) {
		n = -n;
		d = -d;
	}
	i128 g = gcd128(n, d);
	if (g > 1) {
		n /= g;
		d /= g;
	}
	Rational r;
	r.num_ = checked_cast(n, "division");
	r.den_ = checked_cast(d, "division");
	return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
	i128 lhs = i128(num_) * o.den_;
	i128 rhs = i128(o.num_) * den_;
	if (lhs < rhs) return std::strong_ordering::less;
	if (lhs > rhs) return std::strong_ordering::greater;
	return std::strong_ordering::equal;
}

}  // namespace latsched

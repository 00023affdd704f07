// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/natural_order.hpp"

#include <cctype>

namespace latsched {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

int natural_compare(std::string_view a, std::string_view b) {
	std::size_t i = 0, j = 0;
	while (i < a.size() && j < b.size()) {
		char ca = a[i], cb = b[j];
		if (is_digit(ca) && is_digit(cb)) {
			std::size_t ia = i, jb = j;
			while (ia < a.size() && is_digit(a[ia])) ++ia;
			while (jb < b.size() && is_digit(b[jb])) ++jb;
			std::string_view ra = a.substr(i, ia - i);
			std::string_view rb = b.substr(j, jb - j);
			// strip leading zeros, then compare by length and digits
			std::size_t za = ra.find_first_not_of('0');
			std::size_t zb = rb.find_first_not_of('0');
			std::string_view na = (za == std::string_view::npos) ? "" : ra.substr(za);
			std::string_view nb = (zb == std::string_view::npos) ? "" : rb.substr(zb);
			if (na.size() != nb.size())
				return na.size() < nb.size() ? -1 : 1;
			if (int c = na.compare(nb); c != 0)
				return c < 0 ? -1 : 1;
			i = ia;
			j = jb;
			continue;
		}
		if (ca != cb)
			return static_cast<unsigned char>(ca) < static_cast<unsigned char>(cb) ? -1 : 1;
		++i;
		++j;
	}
	if (i < a.size()) return 1;
	if (j < b.size()) return -1;
	// numerically equal runs may differ in leading zeros; keep the order total
	if (int c = a.compare(b); c != 0)
		return c < 0 ? -1 : 1;
	return 0;
}

int natural_compare_seq(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
	std::size_t n = std::min(a.size(), b.size());
	for (std::size_t k = 0; k < n; ++k) {
		if (int c = natural_compare(a[k], b[k]); c != 0) return c;
	}
	if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
	return 0;
}

}  // namespace latsched

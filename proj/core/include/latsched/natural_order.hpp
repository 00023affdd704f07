// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace latsched {

/// Digit-aware string comparison: "t2" orders before "t10".
///
/// Embedded digit runs are compared by numeric value (leading zeros
/// ignored), everything else byte-wise.  Ties between numerically equal
/// but textually distinct strings ("t01" vs "t1") fall back to plain
/// byte comparison so the order stays strict and total.
int natural_compare(std::string_view a, std::string_view b);

inline bool natural_less(std::string_view a, std::string_view b) {
	return natural_compare(a, b) < 0;
}

/// Lexicographic comparison of two id sequences under natural_compare.
int natural_compare_seq(const std::vector<std::string>& a,
                        const std::vector<std::string>& b);

}  // namespace latsched

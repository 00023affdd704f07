// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latsched {

/// Thrown when path enumeration exceeds its cap.
class PathExplosionError : public std::runtime_error {
public:
	PathExplosionError(std::string source, std::string sink, std::size_t cap)
	    : std::runtime_error("path enumeration between " + source + " and " + sink +
	                         " exceeded cap of " + std::to_string(cap)),
	      source_(std::move(source)), sink_(std::move(sink)), cap_(cap) {}
	const std::string& source() const { return source_; }
	const std::string& sink() const { return sink_; }
	std::size_t cap() const { return cap_; }

private:
	std::string source_, sink_;
	std::size_t cap_;
};

/// Thrown when a required path set is empty.
class NoPathError : public std::runtime_error {
public:
	NoPathError(const std::string& source, const std::string& sink)
	    : std::runtime_error("no path from " + source + " to " + sink) {}
};

/// Thrown by the cross-constraint check when the pair is not in an X
/// configuration.
class NotXConfigurationError : public std::runtime_error {
public:
	explicit NotXConfigurationError(const std::string& detail)
	    : std::runtime_error("constraint pair is not an X configuration: " + detail) {}
};

/// Thrown by the instance generator when the requested parameters cannot
/// produce a valid instance (e.g. edge budget below the backbone size).
class InfeasibleSpecError : public std::runtime_error {
public:
	explicit InfeasibleSpecError(const std::string& detail)
	    : std::runtime_error("infeasible generator parameters: " + detail) {}
};

/// Thrown on malformed input files.
class ParseError : public std::runtime_error {
public:
	explicit ParseError(const std::string& detail)
	    : std::runtime_error("parse error: " + detail) {}
};

/// Thrown when an operation is handed arguments outside its contract
/// (unknown task id, zero processors, ...).
class InvalidArgumentError : public std::invalid_argument {
public:
	explicit InvalidArgumentError(const std::string& detail)
	    : std::invalid_argument(detail) {}
};

}  // namespace latsched

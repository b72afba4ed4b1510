#pragma once

#include <stdexcept>
#include <string>

namespace jarnik {

// Error taxonomy mirrors the CLI exit codes: config 2, capacity 3,
// certificate failure 1. Everything else is an invariant violation.

struct config_error : std::runtime_error {
  explicit config_error(const std::string& m) : std::runtime_error(m) {}
};

struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& m) : std::runtime_error(m) {}
};

struct certificate_error : std::runtime_error {
  explicit certificate_error(const std::string& m) : std::runtime_error(m) {}
};

struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& m) : std::logic_error(m) {}
};

// A transcendental-weighted comparison stayed undecided after the
// bounded precision escalation.
struct undecided_error : std::runtime_error {
  explicit undecided_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace jarnik

// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Error type shared by the whole library.  Every failure carries a coarse
// kind (used by the command line driver to pick an exit status), a stable
// machine-readable code string, and a human-readable message.

#ifndef LROUGH_ERROR_HPP
#define LROUGH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace lrough {

/// Coarse failure classes.
///
///  - parse:    malformed or structurally invalid input (files, flags, names)
///  - domain:   well-formed input whose data violates a mathematical
///              requirement (not a covering, beta out of range, a table that
///              is not residuated, an unmet operator precondition, ...)
///  - internal: invariant violations inside the library itself (e.g. the
///              direct and matrix evaluation routes disagreeing)
enum class errc { parse, domain, internal };

/// Exception carrying kind + stable code + message.
class error : public std::runtime_error {
 public:
  error(errc kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  errc kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  errc kind_;
  std::string code_;
};

[[noreturn]] inline void fail_parse(std::string code, const std::string& message) {
  throw error(errc::parse, std::move(code), message);
}

[[noreturn]] inline void fail_domain(std::string code, const std::string& message) {
  throw error(errc::domain, std::move(code), message);
}

[[noreturn]] inline void fail_internal(std::string code, const std::string& message) {
  throw error(errc::internal, std::move(code), message);
}

}  // namespace lrough

#endif  // LROUGH_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace weilheight {

/// Raised when an operation's mathematical precondition does not hold
/// (valuation of zero, degenerate projective point, wrong node count, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input. `token()` is the offending piece of text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace weilheight

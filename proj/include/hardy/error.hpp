#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

enum class ErrorCode
{
  degenerate_map,
  not_self_map,
  automorphism,
  no_contact,
  not_parabolic,
  pole,
  contact_mismatch,
  not_in_generator_ring,
  not_central,
  not_self_adjoint,
  window_too_large,
  empty_input,
  invalid_argument,
};

char const *to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
    : std::runtime_error(what)
    , code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Syntax error in an operator expression; `position` is a 0-based character offset.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string const &found);

  std::size_t position() const noexcept { return position_; }
  std::vector<std::string> const &expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

} // namespace hardy

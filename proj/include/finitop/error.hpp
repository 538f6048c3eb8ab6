#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace finitop {

enum class Errc {
  point_out_of_range,
  transitivity_violation,
  not_continuous,
  domain_mismatch,
  not_a_retraction,
  not_t0,
  not_normal,
  size_overflow,
  empty_subspace,
  index_mismatch,
  unknown_suite,
  bound_exceeded,
  unbound_variable,
  syntax_error,
  carrier_mismatch,
  unsupported_carrier,
  not_disjoint,
  not_closed,
  window_too_small,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Raised where normality is a precondition; carries the obstructing
/// disjoint closed pair.
class NotNormalError : public Error {
public:
  NotNormalError(std::vector<int> a, std::vector<int> b)
      : Error(Errc::not_normal, "space is not normal"),
        witness_a(std::move(a)),
        witness_b(std::move(b)) {}
  std::vector<int> witness_a;
  std::vector<int> witness_b;
};

class SyntaxError : public Error {
public:
  SyntaxError(size_t position, std::string expected_tokens)
      : Error(Errc::syntax_error, "at offset " + std::to_string(position) + ", expected " +
                                      expected_tokens),
        position(position),
        expected(std::move(expected_tokens)) {}
  size_t position;  // 1-based byte offset
  std::string expected;
};

}  // namespace finitop

#ifndef CODEGB_ERRORS_HPP
#define CODEGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codegb {

enum class errc {
  not_prime,
  not_primitive,
  not_irreducible,
  division_by_zero,
  rank_deficient,
  too_large,
  length_mismatch,
  not_divisible,
  overflow,
  wrong_order,
  not_zero_dimensional,
  cap_exceeded,
  not_prime_field,
  not_standard_form,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "not_prime";
    case errc::not_primitive: return "not_primitive";
    case errc::not_irreducible: return "not_irreducible";
    case errc::division_by_zero: return "division_by_zero";
    case errc::rank_deficient: return "rank_deficient";
    case errc::too_large: return "too_large";
    case errc::length_mismatch: return "length_mismatch";
    case errc::not_divisible: return "not_divisible";
    case errc::overflow: return "overflow";
    case errc::wrong_order: return "wrong_order";
    case errc::not_zero_dimensional: return "not_zero_dimensional";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::not_prime_field: return "not_prime_field";
    case errc::not_standard_form: return "not_standard_form";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parse failures carry a source position (1-based; 0 = unknown).
class parse_failure : public error {
 public:
  parse_failure(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : error(errc::parse_error,
              what + (line ? " at line " + std::to_string(line) +
                                 (column ? ", column " + std::to_string(column) : "")
                           : "")),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace codegb

#endif

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aurea {

// Every failure the library reports falls into one of three classes,
// which the command-line tool maps onto distinct exit codes:
// malformed input (1), domain violations (2), out-of-scope requests (3).
enum class Errc {
  // input / parse
  syntax_error,
  mixed_variables,
  exponent_too_large,
  ragged_rows,
  non_square,
  // domain
  division_by_zero,
  mixed_fields,
  negative_radicand,
  negative_discriminant,
  negative_eta,
  nonpositive_segment,
  dimension_out_of_range,
  exponent_out_of_range,
  not_applicable,
  squarefree_bound,
  // scope
  unsupported_degree,
  nesting_too_deep,
  not_representable,
};

enum class ErrorClass { parse = 1, domain = 2, scope = 3 };

ErrorClass error_class(Errc code) noexcept;
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message,
        std::size_t offset = no_offset)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }

  // Byte offset into the source text for parse errors, no_offset otherwise.
  std::size_t offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::size_t offset_;
};

}  // namespace aurea

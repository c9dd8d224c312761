#include "aurea/errors.hpp"

namespace aurea {

ErrorClass error_class(Errc code) noexcept {
  switch (code) {
    case Errc::syntax_error:
    case Errc::mixed_variables:
    case Errc::exponent_too_large:
    case Errc::ragged_rows:
    case Errc::non_square:
      return ErrorClass::parse;
    case Errc::unsupported_degree:
    case Errc::nesting_too_deep:
    case Errc::not_representable:
      return ErrorClass::scope;
    default:
      return ErrorClass::domain;
  }
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::syntax_error: return "syntax-error";
    case Errc::mixed_variables: return "mixed-variables";
    case Errc::exponent_too_large: return "exponent-too-large";
    case Errc::ragged_rows: return "ragged-rows";
    case Errc::non_square: return "non-square";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::mixed_fields: return "mixed-fields";
    case Errc::negative_radicand: return "negative-radicand";
    case Errc::negative_discriminant: return "negative-discriminant";
    case Errc::negative_eta: return "negative-eta";
    case Errc::nonpositive_segment: return "nonpositive-segment";
    case Errc::dimension_out_of_range: return "dimension-out-of-range";
    case Errc::exponent_out_of_range: return "exponent-out-of-range";
    case Errc::not_applicable: return "not-applicable";
    case Errc::squarefree_bound: return "squarefree-bound";
    case Errc::unsupported_degree: return "unsupported-degree";
    case Errc::nesting_too_deep: return "nesting-too-deep";
    case Errc::not_representable: return "not-representable";
  }
  return "unknown";
}

}  // namespace aurea

#pragma once

#include <string>
#include <vector>

#include "aurea/polynomial.hpp"
#include "aurea/radical.hpp"

namespace aurea {

enum class SolveMethod { perfect_square, substitution, quadratic, dispatch };

enum class TraceLabel {
  rewrite,
  perfect_square,
  take_root,
  substitute,
  quadratic_formula,
  back_substitute,
};

const char* method_name(SolveMethod m) noexcept;
const char* trace_label_name(TraceLabel l) noexcept;

// One displayed step of a derivation: "lhs  ==>  rhs", with an optional
// free-text note (e.g. the substitution in force).
struct TraceStep {
  TraceLabel label;
  std::string lhs;
  std::string rhs;
  std::string note;
};

// The real roots of one equation, with multiplicity, in derivation order,
// plus the step-by-step trace that produced them. Every root satisfies
// is_root(source, root) exactly; the solver verifies this before
// returning. For equations whose full root set is real (all the
// interesting cases here) the multiset size equals the degree.
struct SolutionSet {
  Polynomial source;
  std::vector<Radical> roots;
  SolveMethod method = SolveMethod::dispatch;
  std::vector<TraceStep> trace;
};

// Roots of x^2 + b x + c = 0 over a common quadratic field.
//
// The discriminant D = b^2 - 4c must be nonnegative
// (Errc::negative_discriminant otherwise; complex roots are out of scope).
// When sqrt(D) exists in the coefficient field the roots are tier-1
// elements; otherwise they are the nested radicals +/- sqrt(D/4) (only
// representable when b = 0 -- a nonzero b would push the roots into a
// tower of two extensions, reported as Errc::mixed_fields).
SolutionSet solve_quadratic(const QuadExt& b, const QuadExt& c,
                            char variable = 'x');

// x^4 + p x^2 + q = 0 by completing both sides to perfect squares:
// (x^2 + alpha)^2 = beta x^2 with alpha = +/- sqrt(q), beta = 2 alpha - p.
//
// Applicable when q is the square of a rational and some choice of alpha
// gives beta >= 0; the choice making sqrt(beta) rational is preferred,
// tie-broken toward alpha = -sqrt(q). sqrt(beta) may be a quadratic
// irrational, in which case the two residual quadratics are solved over
// Q(sqrt(beta)). Inapplicable inputs (including those whose roots would
// need a field tower, and those with no real roots on this route) raise
// Errc::not_applicable so the caller can fall back to substitution.
SolutionSet solve_biquadratic_perfect_square(const Rational& p,
                                             const Rational& q,
                                             char variable = 'x');

// x^4 + p x^2 + q = 0 by the substitution u = x^2: solve the quadratic in
// u, then emit x = +/- sqrt(u) for each nonnegative u WITHOUT denesting,
// preserving the nested form of the roots. Raises Errc::negative_eta when
// both u-roots are negative (no real solutions);
// Errc::negative_discriminant propagates from the u-quadratic.
SolutionSet solve_biquadratic_substitution(const Rational& p,
                                           const Rational& q,
                                           char variable = 'x');

// Dispatch for degrees 1, 2 and 4 (biquadratic only). The input is scaled
// monic first. Quartics try the perfect-square route and fall back to
// substitution when it reports not-applicable. Degree 3, degree >= 5 and
// quartics with odd-degree terms raise Errc::unsupported_degree: they are
// deliberately out of scope, not merely unimplemented.
SolutionSet solve_equation(const Polynomial& p, char variable = 'x');

// The golden-section cut of a segment of length a > 0: the positive root
// x = a(sqrt(5) - 1)/2 of (x + a)x = a^2, i.e. the larger piece when
// a/x = x/(a - x). The trace records the ratio identity and the check
// x > a - x.
struct GoldenSection {
  Radical root;
  std::vector<TraceStep> trace;
};
GoldenSection golden_section(const Rational& a);

// The golden ratio rho = (1 + sqrt(5))/2.
const QuadExt& golden_ratio();

// rho^n computed exactly in Q(sqrt(5)); 1 <= n <= 64
// (Errc::exponent_out_of_range otherwise).
QuadExt golden_power(unsigned n);

// rho written as the real n-th root of rho^n: for n = 2 this is the
// nested representation sqrt((3 + sqrt(5))/2) of the golden ratio.
struct GoldenRep {
  unsigned n = 1;
  QuadExt inner;  // rho^n

  // "rho = sqrt((3 + sqrt(5))/2)" and the like.
  std::string rendering() const;

  // Decimal expansion (truncated) of the n-th root of `inner`; agrees
  // with to_decimal of rho itself in every digit, at any precision.
  std::string decimal(unsigned digits) const;
};
GoldenRep nth_root_representation(unsigned n);

}  // namespace aurea

#include "aurea/solver.hpp"

#include <stdexcept>
#include <utility>

#include "aurea/decimal.hpp"
#include "aurea/denest.hpp"

namespace aurea {

const char* method_name(SolveMethod m) noexcept {
  switch (m) {
    case SolveMethod::perfect_square: return "perfect-square";
    case SolveMethod::substitution: return "substitution";
    case SolveMethod::quadratic: return "quadratic";
    case SolveMethod::dispatch: return "dispatch";
  }
  return "unknown";
}

const char* trace_label_name(TraceLabel l) noexcept {
  switch (l) {
    case TraceLabel::rewrite: return "rewrite";
    case TraceLabel::perfect_square: return "perfect-square";
    case TraceLabel::take_root: return "take-root";
    case TraceLabel::substitute: return "substitute";
    case TraceLabel::quadratic_formula: return "quadratic-formula";
    case TraceLabel::back_substitute: return "back-substitute";
  }
  return "unknown";
}

namespace {

std::string eq_str(const Polynomial& p, char var) {
  return p.str(var) + " = 0";
}

// "x", "3x", "3/2x", "(sqrt(5))x" -- a coefficient times the variable.
std::string coeff_times_var(const QuadExt& s, char var) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.is_rational()) {
    if (!s.as_rational().is_one()) out += s.as_rational().str();
  } else {
    out += "(" + s.str() + ")";
  }
  out += var;
  return out;
}

// "x^2 - sqrt(5)x + 1 = 0" for coefficients in a quadratic field.
std::string quad_eq_str(const QuadExt& b, const QuadExt& c, char var) {
  std::string out{var};
  out += "^2";
  if (!b.is_zero()) {
    out += b.sign() < 0 ? " - " : " + ";
    const QuadExt a = b.abs();
    if (a.is_rational() && a.as_rational().is_one())
      out += var;
    else if (a.is_rational())
      out += a.as_rational().str() + std::string(1, var);
    else
      out += "(" + a.str() + ")" + std::string(1, var);
  }
  if (!c.is_zero()) {
    out += c.sign() < 0 ? " - " : " + ";
    const QuadExt a = c.abs();
    out += a.is_rational() ? a.str() : "(" + a.str() + ")";
  }
  out += " = 0";
  return out;
}

std::string root_list_str(const std::vector<Radical>& roots, char var) {
  std::string out;
  for (const Radical& r : roots) {
    if (!out.empty()) out += " or ";
    out += std::string(1, var) + " = " + r.str();
  }
  return out;
}

void verify_roots(const SolutionSet& s) {
  if (s.source.is_zero()) return;
  for (const Radical& r : s.roots)
    if (!is_root(s.source, r))
      throw std::logic_error("solver produced a non-root for " +
                             s.source.str());
}

}  // namespace

SolutionSet solve_quadratic(const QuadExt& b, const QuadExt& c,
                            char variable) {
  const QuadExt delta = b * b - QuadExt(Rational(4)) * c;
  if (delta.sign() < 0)
    throw Error(Errc::negative_discriminant,
                "negative discriminant " + delta.str() +
                    ": complex roots are out of scope");
  const QuadExt half(Rational(1, 2));
  SolutionSet out;
  out.method = SolveMethod::quadratic;
  if (b.is_rational() && c.is_rational())
    out.source =
        Polynomial({c.as_rational(), b.as_rational(), Rational(1)});

  if (delta.is_rational()) {
    const QuadExt s = sqrt_rational(delta.as_rational()).tier1_value();
    out.roots.emplace_back((s - b) * half);
    out.roots.emplace_back((-s - b) * half);
  } else {
    const DenestResult dn = denest_sqrt(delta);
    if (dn.status == DenestStatus::denested) {
      out.roots.emplace_back((dn.value - b) * half);
      out.roots.emplace_back((-dn.value - b) * half);
    } else if (b.is_zero()) {
      const QuadExt quarter_delta = delta * QuadExt(Rational(1, 4));
      out.roots.push_back(Radical::sqrt_of(quarter_delta, +1));
      out.roots.push_back(Radical::sqrt_of(quarter_delta, -1));
    } else {
      throw Error(Errc::mixed_fields,
                  "the roots of " + quad_eq_str(b, c, variable) +
                      " lie in a tower of two quadratic extensions");
    }
  }
  out.trace.push_back({TraceLabel::quadratic_formula,
                       quad_eq_str(b, c, variable),
                       root_list_str(out.roots, variable), ""});
  verify_roots(out);
  return out;
}

SolutionSet solve_biquadratic_perfect_square(const Rational& p,
                                             const Rational& q,
                                             char variable) {
  const Polynomial source({q, Rational(0), p, Rational(0), Rational(1)});
  const auto g = q.sqrt_if_square();
  if (!g)
    throw Error(Errc::not_applicable,
                "the constant term " + q.str() +
                    " is not the square of a rational");

  // Candidates alpha = -sqrt(q) first: that is the tie-break winner.
  std::vector<Rational> candidates{-*g};
  if (!g->is_zero()) candidates.push_back(*g);
  bool found = false, found_square = false;
  Rational alpha(0), beta(0);
  for (const Rational& cand : candidates) {
    const Rational b2 = Rational(2) * cand - p;
    if (b2.sign() < 0) continue;
    if (!found || (!found_square && b2.is_square())) {
      alpha = cand;
      beta = b2;
      found = true;
      found_square = b2.is_square();
    }
  }
  if (!found)
    throw Error(Errc::not_applicable,
                "no sign of sqrt(q) makes 2*alpha - p nonnegative");

  const QuadExt root_beta = sqrt_rational(beta).tier1_value();

  SolutionSet out;
  out.method = SolveMethod::perfect_square;
  out.source = source;

  // x^4 + p x^2 + q = 0  ==>  x^4 + 2 alpha x^2 + alpha^2 = beta x^2
  const Polynomial shifted(
      {alpha * alpha, Rational(0), Rational(2) * alpha, Rational(0),
       Rational(1)});
  const Polynomial rhs({Rational(0), Rational(0), beta});
  const std::string rhs_str = rhs.str(variable);
  out.trace.push_back({TraceLabel::rewrite, eq_str(source, variable),
                       shifted.str(variable) + " = " + rhs_str, ""});

  const Polynomial inner({alpha, Rational(0), Rational(1)});
  const std::string square_str = "(" + inner.str(variable) + ")^2";
  out.trace.push_back({TraceLabel::perfect_square,
                       shifted.str(variable) + " = " + rhs_str,
                       square_str + " = " + rhs_str, ""});

  const std::string pm_rhs =
      root_beta.is_zero() ? "0"
                          : "+/-" + coeff_times_var(root_beta, variable);
  out.trace.push_back({TraceLabel::take_root,
                       square_str + " = " + rhs_str,
                       inner.str(variable) + " = " + pm_rhs, ""});

  try {
    for (const int branch : {+1, -1}) {
      // x^2 + alpha = +s x gives x^2 - s x + alpha = 0 (and vice versa).
      const QuadExt bq = branch > 0 ? -root_beta : root_beta;
      const std::string branch_rhs =
          root_beta.is_zero()
              ? "0"
              : std::string(branch > 0 ? "" : "-") +
                    coeff_times_var(root_beta, variable);
      SolutionSet sub = solve_quadratic(bq, QuadExt(alpha), variable);
      out.trace.push_back({TraceLabel::rewrite,
                           inner.str(variable) + " = " + branch_rhs,
                           quad_eq_str(bq, QuadExt(alpha), variable), ""});
      for (auto& step : sub.trace) out.trace.push_back(std::move(step));
      for (auto& root : sub.roots) out.roots.push_back(std::move(root));
      if (root_beta.is_zero()) break;  // both branches coincide
    }
  } catch (const Error& e) {
    if (e.code() == Errc::mixed_fields ||
        e.code() == Errc::negative_discriminant)
      throw Error(Errc::not_applicable,
                  std::string("the perfect-square route cannot represent "
                              "the roots here (") +
                      e.what() + "); use substitution");
    throw;
  }
  if (root_beta.is_zero()) {
    // Degenerate beta = 0: the single quadratic carries both root pairs.
    const std::size_t count = out.roots.size();
    for (std::size_t i = 0; i < count; ++i) out.roots.push_back(out.roots[i]);
  }
  verify_roots(out);
  return out;
}

SolutionSet solve_biquadratic_substitution(const Rational& p,
                                           const Rational& q,
                                           char variable) {
  const Polynomial source({q, Rational(0), p, Rational(0), Rational(1)});
  const char uvar = variable == 'u' ? 'v' : 'u';

  SolutionSet usol = solve_quadratic(QuadExt(p), QuadExt(q), uvar);

  SolutionSet out;
  out.method = SolveMethod::substitution;
  out.source = source;
  out.trace.push_back({TraceLabel::substitute, eq_str(source, variable),
                       eq_str(usol.source, uvar),
                       std::string(1, uvar) + " = " + variable + "^2"});
  for (auto& step : usol.trace) out.trace.push_back(std::move(step));

  for (const Radical& uroot : usol.roots) {
    // Rational p, q give a rational discriminant, so u-roots are tier 1.
    const QuadExt& uval = uroot.tier1_value();
    const std::string ustr = std::string(1, uvar) + " = " + uroot.str();
    if (uval.sign() < 0) {
      out.trace.push_back({TraceLabel::back_substitute, ustr,
                           std::string("no real ") + variable +
                               " (negative value)",
                           ""});
      continue;
    }
    const Radical plus = Radical::sqrt_of(uval, +1);
    const Radical minus = Radical::sqrt_of(uval, -1);
    out.trace.push_back({TraceLabel::back_substitute, ustr,
                         root_list_str({plus, minus}, variable), ""});
    out.roots.push_back(plus);
    out.roots.push_back(minus);
  }
  if (out.roots.empty())
    throw Error(Errc::negative_eta,
                "both substituted roots are negative: no real solutions");
  verify_roots(out);
  return out;
}

SolutionSet solve_equation(const Polynomial& p, char variable) {
  const int deg = p.degree();
  if (deg < 1 || deg == 3 || deg > 4)
    throw Error(Errc::unsupported_degree,
                "degree " + std::to_string(deg < 0 ? 0 : deg) +
                    " is out of scope: only linear, quadratic and "
                    "biquadratic equations are solved");
  const Polynomial monic = p.scaled(p.leading().inverse());
  std::vector<TraceStep> prologue;
  if (!(monic == p))
    prologue.push_back({TraceLabel::rewrite, eq_str(p, variable),
                        eq_str(monic, variable), "scaled monic"});

  SolutionSet out;
  if (deg == 1) {
    const Rational root = -monic.coeff(0);
    out.source = monic;
    out.method = SolveMethod::dispatch;
    out.roots.emplace_back(Rational(root));
    out.trace.push_back({TraceLabel::rewrite, eq_str(monic, variable),
                         std::string(1, variable) + " = " + root.str(), ""});
  } else if (deg == 2) {
    out = solve_quadratic(QuadExt(monic.coeff(1)), QuadExt(monic.coeff(0)),
                          variable);
  } else {
    if (!monic.coeff(1).is_zero() || !monic.coeff(3).is_zero())
      throw Error(Errc::unsupported_degree,
                  "general quartics are out of scope: only biquadratic "
                  "equations (no odd-degree terms) are solved");
    const Rational& bp = monic.coeff(2);
    const Rational& bq = monic.coeff(0);
    try {
      out = solve_biquadratic_perfect_square(bp, bq, variable);
    } catch (const Error& e) {
      if (e.code() != Errc::not_applicable) throw;
      out = solve_biquadratic_substitution(bp, bq, variable);
    }
  }
  if (!prologue.empty())
    out.trace.insert(out.trace.begin(),
                     std::make_move_iterator(prologue.begin()),
                     std::make_move_iterator(prologue.end()));
  verify_roots(out);
  return out;
}

GoldenSection golden_section(const Rational& a) {
  if (a.sign() <= 0)
    throw Error(Errc::nonpositive_segment,
                "segment length must be positive, got " + a.str());
  // (x + a) x = a^2  <=>  x^2 + a x - a^2 = 0
  SolutionSet quad =
      solve_quadratic(QuadExt(a), QuadExt(-(a * a)), 'x');

  GoldenSection out;
  const std::string astr = a.str();
  out.trace.push_back(
      {TraceLabel::rewrite, astr + "/x = x/(" + astr + " - x)",
       "(x + " + astr + ")x = " + (a * a).str(), "the golden-section cut"});
  out.trace.push_back({TraceLabel::rewrite,
                       "(x + " + astr + ")x = " + (a * a).str(),
                       eq_str(quad.source, 'x'), ""});
  for (auto& step : quad.trace) out.trace.push_back(std::move(step));

  // The constant term -a^2 is negative, so exactly one root is positive.
  for (const Radical& r : quad.roots)
    if (r.sign_of() > 0) out.root = r;

  // The cut keeps the larger piece: x > a - x, i.e. 2x - a > 0.
  const QuadExt two_x_minus_a =
      out.root.tier1_value() + out.root.tier1_value() - QuadExt(a);
  if (two_x_minus_a.sign() <= 0)
    throw std::logic_error("golden section lost the x > a - x invariant");
  out.trace.push_back({TraceLabel::rewrite,
                       root_list_str(quad.roots, 'x'),
                       "x = " + out.root.str(),
                       "the positive root; x > " + astr + " - x"});
  return out;
}

const QuadExt& golden_ratio() {
  static const QuadExt rho(Rational(1, 2), Rational(1, 2), Int(5));
  return rho;
}

QuadExt golden_power(unsigned n) {
  if (n < 1 || n > 64)
    throw Error(Errc::exponent_out_of_range,
                "golden_power supports 1 <= n <= 64, got " +
                    std::to_string(n));
  QuadExt out = golden_ratio();
  for (unsigned i = 1; i < n; ++i) out = out * golden_ratio();
  return out;
}

std::string GoldenRep::rendering() const {
  if (n == 1) return "rho = " + inner.str();
  if (n == 2) return "rho = sqrt(" + inner.str() + ")";
  return "rho = (" + inner.str() + ")^(1/" + std::to_string(n) + ")";
}

std::string GoldenRep::decimal(unsigned digits) const {
  return decimal_nth_root(inner, n, digits);
}

GoldenRep nth_root_representation(unsigned n) {
  return {n, golden_power(n)};
}

}  // namespace aurea

#include "commands.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include <aurea/decimal.hpp>
#include <aurea/denest.hpp>
#include <aurea/matrix.hpp>
#include <aurea/solver.hpp>

#include "parse.hpp"

namespace aurea::cli {

using nlohmann::json;

int exit_code_for(const Error& e) {
  return static_cast<int>(error_class(e.code()));
}

namespace {

constexpr int kSchema = 1;

Outcome failure(const Error& e) {
  Outcome out;
  out.exit_code = exit_code_for(e);
  out.err =
      std::string("error (") + errc_name(e.code()) + "): " + e.what() + "\n";
  return out;
}

template <typename Fn>
Outcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return failure(e);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json quadext_to_json(const QuadExt& q) {
  json j;
  j["a"] = q.rational_part().str();
  j["b"] = q.radical_coefficient().str();
  if (q.radicand().fits_slong_p())
    j["d"] = static_cast<long>(q.radicand().get_si());
  else
    j["d"] = q.radicand().get_str();
  return j;
}

QuadExt quadext_from_json(const json& j) {
  const Rational a = Rational::from_string(j.at("a").get<std::string>());
  const Rational b = Rational::from_string(j.at("b").get<std::string>());
  const Int d = j.at("d").is_string() ? Int(j.at("d").get<std::string>())
                                      : Int(j.at("d").get<long>());
  return QuadExt(a, b, d);
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json arr = json::array();
  for (const TraceStep& s : trace) {
    json j;
    j["label"] = trace_label_name(s.label);
    j["lhs"] = s.lhs;
    j["rhs"] = s.rhs;
    if (!s.note.empty()) j["note"] = s.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string trace_text(const std::vector<TraceStep>& trace) {
  std::string out = "trace:\n";
  std::size_t i = 1;
  for (const TraceStep& s : trace) {
    out += "  " + std::to_string(i++) + ". " + trace_label_name(s.label) +
           ": " + s.lhs + "  ==>  " + s.rhs;
    if (!s.note.empty()) out += "  [" + s.note + "]";
    out += "\n";
  }
  return out;
}

// Shared by solve and eig: apply the method flag to a parsed polynomial.
SolutionSet solve_with_method(const Polynomial& p, char variable,
                              Method method) {
  if (method == Method::automatic) return solve_equation(p, variable);
  if (p.degree() != 4)
    throw Error(Errc::not_applicable,
                "--method selects a biquadratic algorithm; the equation has "
                "degree " +
                    std::to_string(p.degree() < 0 ? 0 : p.degree()));
  const Polynomial monic = p.scaled(p.leading().inverse());
  if (!monic.coeff(1).is_zero() || !monic.coeff(3).is_zero())
    throw Error(Errc::unsupported_degree,
                "general quartics are out of scope: only biquadratic "
                "equations (no odd-degree terms) are solved");
  SolutionSet out =
      method == Method::perfect_square
          ? solve_biquadratic_perfect_square(monic.coeff(2), monic.coeff(0),
                                             variable)
          : solve_biquadratic_substitution(monic.coeff(2), monic.coeff(0),
                                           variable);
  if (!(monic == p))
    out.trace.insert(out.trace.begin(),
                     {TraceLabel::rewrite, p.str(variable) + " = 0",
                      monic.str(variable) + " = 0", "scaled monic"});
  return out;
}

json roots_to_json(const std::vector<Radical>& roots) {
  json arr = json::array();
  for (const Radical& r : roots) arr.push_back(radical_to_json(r));
  return arr;
}

std::string roots_text(const std::vector<Radical>& roots) {
  std::string out;
  for (const Radical& r : roots) out += "  " + r.str() + "\n";
  return out;
}

}  // namespace

json radical_to_json(const Radical& r) {
  json j;
  if (r.tier() == 1) {
    j = quadext_to_json(r.tier1_value());
    j["tier"] = 1;
  } else {
    j["tier"] = 2;
    j["sign"] = r.sign();
    j["radicand"] = quadext_to_json(r.radicand());
  }
  return j;
}

Radical radical_from_json(const json& j) {
  const int tier = j.at("tier").get<int>();
  if (tier == 1) return Radical(quadext_from_json(j));
  if (tier != 2) throw Error(Errc::syntax_error, "tier must be 1 or 2");
  return Radical::sqrt_of(quadext_from_json(j.at("radicand")),
                          j.at("sign").get<int>());
}

Outcome run_solve(std::string_view equation, const Options& opt) {
  return guarded([&] {
    const ParsedEquation eq = parse_polynomial(equation);
    const SolutionSet s =
        solve_with_method(eq.polynomial, eq.variable, opt.method);
    Outcome out;
    const std::string rendered = eq.polynomial.str(eq.variable) + " = 0";
    if (opt.format == Format::json) {
      json j;
      j["schema"] = kSchema;
      j["equation"] = rendered;
      j["method"] = method_name(s.method);
      j["roots"] = roots_to_json(s.roots);
      if (opt.trace) j["trace"] = trace_to_json(s.trace);
      out.out = dump(j);
    } else {
      out.out = "equation: " + rendered + "\n";
      out.out += std::string("method: ") + method_name(s.method) + "\n";
      out.out += "roots:\n" + roots_text(s.roots);
      if (opt.trace) out.out += trace_text(s.trace);
    }
    return out;
  });
}

Outcome run_charpoly(std::string_view matrix, const Options& opt) {
  return guarded([&] {
    const Matrix m = parse_matrix(matrix);
    const Polynomial cp = m.charpoly();
    Outcome out;
    if (opt.format == Format::json) {
      json j;
      j["schema"] = kSchema;
      json coeffs = json::array();
      for (const Rational& c : cp.coefficients()) coeffs.push_back(c.str());
      j["charpoly"]["coefficients"] = std::move(coeffs);
      j["charpoly"]["rendering"] = cp.str();
      out.out = dump(j);
    } else {
      out.out = "charpoly: " + cp.str() + "\n";
    }
    return out;
  });
}

Outcome run_eig(std::string_view matrix, const Options& opt) {
  return guarded([&] {
    const Matrix m = parse_matrix(matrix);
    const Polynomial cp = m.charpoly();
    const SolutionSet s = solve_with_method(cp, 'x', opt.method);
    Outcome out;
    if (opt.format == Format::json) {
      json j;
      j["schema"] = kSchema;
      j["size"] = m.size();
      j["charpoly"] = cp.str();
      j["method"] = method_name(s.method);
      j["roots"] = roots_to_json(s.roots);
      if (opt.trace) j["trace"] = trace_to_json(s.trace);
      out.out = dump(j);
    } else {
      out.out = "matrix: " + std::to_string(m.size()) + "x" +
                std::to_string(m.size()) + "\n";
      out.out += "charpoly: " + cp.str() + "\n";
      out.out += std::string("method: ") + method_name(s.method) + "\n";
      out.out += "eigenvalues:\n" + roots_text(s.roots);
      if (opt.trace) out.out += trace_text(s.trace);
    }
    return out;
  });
}

Outcome run_denest(std::string_view expression, const Options& opt) {
  return guarded([&] {
    const Radical r = parse_radical(expression);
    Outcome out;
    json j;
    j["schema"] = kSchema;
    j["input"] = r.str();
    std::string text = "input: " + r.str() + "\n";
    if (r.tier() == 1) {
      j["status"] = "already-unnested";
      text += "already unnested\n";
    } else {
      const DenestResult dn = denest_sqrt(r.radicand());
      if (dn.status == DenestStatus::denested) {
        const QuadExt value = r.sign() < 0 ? -dn.value : dn.value;
        j["status"] = "denested";
        j["value"] = radical_to_json(Radical(value));
        j["witness"]["s"] = dn.witness_s.str();
        j["witness"]["branch"] = dn.branch;
        text += "denested: " + value.str() + "\n";
        text += "witness: s = " + dn.witness_s.str() + ", branch = (a " +
                (dn.branch < 0 ? "-" : "+") + " s)/2\n";
      } else {
        j["status"] = "irreducible";
        text += "irreducible: " + r.str() +
                " does not denest over its quadratic field\n";
      }
    }
    out.out = opt.format == Format::json ? dump(j) : text;
    return out;
  });
}

Outcome run_equal(std::string_view lhs, std::string_view rhs,
                  const Options& opt) {
  return guarded([&] {
    const Radical a = parse_radical(lhs);
    const Radical b = parse_radical(rhs);
    const bool same = equal(a, b);
    Outcome out;
    if (opt.format == Format::json) {
      json j;
      j["schema"] = kSchema;
      j["lhs"] = a.str();
      j["rhs"] = b.str();
      j["equal"] = same;
      out.out = dump(j);
    } else {
      out.out = same ? "true\n" : "false\n";
    }
    return out;
  });
}

Outcome run_golden(unsigned n, const Options& opt) {
  return guarded([&] {
    const GoldenRep rep = nth_root_representation(n);
    const Radical rho(golden_ratio());

    std::string mode, value, reference;
    if (n <= 2) {
      // Exact verification: the n-th root of rho^n denests back to rho.
      const bool ok =
          n == 1 ? rep.inner == golden_ratio()
                 : equal(canonical_sqrt(rep.inner), rho);
      if (!ok) throw std::logic_error("golden representation lost exactness");
      mode = "exact";
    } else {
      mode = "decimal";
      value = rep.decimal(opt.digits);
      reference = to_decimal(rho, opt.digits);
      if (value != reference)
        throw std::logic_error("golden representation decimal mismatch");
    }

    Outcome out;
    if (opt.format == Format::json) {
      json j;
      j["schema"] = kSchema;
      j["n"] = n;
      j["power"] = quadext_to_json(rep.inner);
      j["rendering"] = rep.rendering();
      j["verification"]["mode"] = mode;
      if (mode == "decimal") {
        j["verification"]["digits"] = opt.digits;
        j["verification"]["value"] = value;
        j["verification"]["reference"] = reference;
      }
      out.out = dump(j);
    } else {
      out.out = "n: " + std::to_string(n) + "\n";
      out.out += "power: " + rep.inner.str() + "\n";
      out.out += "representation: " + rep.rendering() + "\n";
      if (mode == "exact")
        out.out += n == 1 ? "verification: exact (identity)\n"
                          : "verification: exact (denests to " +
                                golden_ratio().str() + ")\n";
      else
        out.out += "verification: " + value + " == " + reference + " (" +
                   std::to_string(opt.digits) + " digits)\n";
    }
    return out;
  });
}

Outcome run_eval(std::string_view expression, const Options& opt) {
  return guarded([&] {
    const Radical r = parse_radical(expression);
    Outcome out;
    if (opt.format == Format::json) {
      json j;
      j["schema"] = kSchema;
      j["exact"] = r.str();
      j["decimal"] = to_decimal(r, opt.digits);
      out.out = dump(j);
    } else {
      out.out = to_decimal(r, opt.digits) + "\n";
    }
    return out;
  });
}

}  // namespace aurea::cli

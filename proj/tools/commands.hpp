#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include <aurea/errors.hpp>
#include <aurea/radical.hpp>

namespace aurea::cli {

enum class Format { text, json };
enum class Method { automatic, perfect_square, substitution };

struct Options {
  bool trace = false;
  unsigned digits = 10;
  Format format = Format::text;
  Method method = Method::automatic;
};

// What a command run produced. Identical invocations yield byte-identical
// Outcomes: nothing here depends on time, locale, addresses or environment.
struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

Outcome run_solve(std::string_view equation, const Options& opt);
Outcome run_charpoly(std::string_view matrix, const Options& opt);
Outcome run_eig(std::string_view matrix, const Options& opt);
Outcome run_denest(std::string_view expression, const Options& opt);
Outcome run_equal(std::string_view lhs, std::string_view rhs,
                  const Options& opt);
Outcome run_golden(unsigned n, const Options& opt);
Outcome run_eval(std::string_view expression, const Options& opt);

// Machine-readable radical values: {"tier": 1, "a": "1/2", "b": "1/2",
// "d": 5} or {"tier": 2, "sign": -1, "radicand": {...}}. from_json
// reconstructs a value that compares equal() to the original.
nlohmann::json radical_to_json(const Radical& r);
Radical radical_from_json(const nlohmann::json& j);

// 1 = malformed input, 2 = domain violation, 3 = out of scope.
int exit_code_for(const Error& e);

}  // namespace aurea::cli

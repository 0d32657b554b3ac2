#pragma once

// JSON input documents, command dispatch and canonical JSON reports.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tfr/moncomplex.hpp"

namespace tfr::cli {

inline constexpr const char* kVersion = "0.3.0";

/// Malformed or inconsistent input; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::optional<Integer> seminormal_bound;
  std::optional<Integer> oracle_bound;
  std::optional<std::size_t> presentation_degree;
  std::optional<long> box;
  friend bool operator==(const InputOptions&, const InputOptions&) = default;
};

struct ConeEntry {
  std::string name;
  std::vector<std::string> rays;
  friend bool operator==(const ConeEntry&, const ConeEntry&) = default;
};

struct InputDocument {
  std::size_t dimension = 0;
  std::vector<std::pair<std::string, IntVector>> rays;  // file order
  std::vector<ConeEntry> cones;                         // maximal cones
  bool stanley = false;
  std::map<std::string, std::vector<IntVector>> monoids;  // cone name → generators, names resolved
  InputOptions options;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

InputDocument parse_input(const std::string& text);
/// Canonical text; parse_input(render_input(d)) == d.
std::string render_input(const InputDocument& doc);
/// Throws InputError when the fan or monoid axioms fail.
moncomplex::MonoidalComplex build(const InputDocument& doc);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a(const std::string& bytes);

struct CommandOptions {
  std::string command;
  std::optional<IntVector> degree;
  bool report = false;
  std::string characteristic = "0";  // "0", a prime, or "all"
  std::optional<long> prime;         // frobenius
  std::optional<long> box;
  std::optional<Integer> bound;
};

struct Report {
  nlohmann::json json;
  int exit_code = 0;
  /// Canonical rendering: sorted keys, two-space indent, trailing newline.
  std::string text() const;
};

/// Throws InputError on bad input or option conflicts.
Report run_command(const InputDocument& doc, const CommandOptions& opts);

IntVector parse_degree(const std::string& s, std::size_t dim);

}  // namespace tfr::cli

#pragma once

// Text formats.
//
// Instance documents are line oriented; '#' starts a comment:
//
//   men 2
//   women 2
//   m 1: 1
//   m 2: 1 2
//   w 1: (1 2)
//   w 2: 2
//
// Entries are opposite-side indices in preference order, ties in
// parentheses. Agents without a line have empty lists.
//
// CNF input is DIMACS ("p cnf <vars> <clauses>", clauses ended by 0).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ncsm/core.hpp"
#include "ncsm/reduction.hpp"

namespace ncsm {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// Clauses must have two or three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& formula);

struct ResultDocument {
  std::string problem;
  std::optional<std::string> notion;
  std::string outcome;  // "found" or "none"
  bool exists = false;
  std::optional<int> size;
  std::vector<Pair> matching;  // 1-based, ascending
  // Enumeration commands list every matching found.
  std::optional<std::vector<std::vector<Pair>>> matchings;
  std::optional<double> timing_ms;
  std::string input;
  std::optional<std::uint64_t> seed;

  bool operator==(const ResultDocument&) const = default;
};

// Keys in fixed order; absent optionals are omitted.
nlohmann::ordered_json to_json(const ResultDocument& doc);
ResultDocument result_from_json(const nlohmann::ordered_json& json);
std::string format_text(const ResultDocument& doc);

}  // namespace ncsm

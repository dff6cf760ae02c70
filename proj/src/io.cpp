#include "ncsm/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace ncsm {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\r')) {
      ++pos;
    }
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, column(), message);
  }
  long long number() {
    skip_space();
    long long value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos += static_cast<std::size_t>(ptr - first);
    return value;
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }
  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line, char marker) {
  const std::size_t hash = line.find(marker);
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

int count_header(Cursor& cur, std::string_view keyword) {
  const std::string_view w = cur.word();
  if (w != keyword) cur.fail("expected '" + std::string(keyword) + " <n>'");
  const long long n = cur.number();
  if (n < 0 || n > 100'000'000) cur.fail("agent count out of range");
  if (!cur.done()) cur.fail("unexpected text after agent count");
  return static_cast<int>(n);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::string_view> lines = split_lines(text);
  int n_men = -1;
  int n_women = -1;
  std::vector<PreferenceList> men;
  std::vector<PreferenceList> women;
  std::vector<int> man_line;
  std::vector<int> woman_line;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    Cursor cur{strip_comment(lines[idx], '#'), 0, static_cast<int>(idx) + 1};
    if (blank(cur.text)) continue;
    if (n_men < 0) {
      n_men = count_header(cur, "men");
      men.resize(static_cast<std::size_t>(n_men));
      man_line.assign(static_cast<std::size_t>(n_men) + 1, 0);
      continue;
    }
    if (n_women < 0) {
      n_women = count_header(cur, "women");
      women.resize(static_cast<std::size_t>(n_women));
      woman_line.assign(static_cast<std::size_t>(n_women) + 1, 0);
      continue;
    }

    const std::string_view kind = cur.word();
    if (kind != "m" && kind != "w") cur.fail("expected 'm <i>:' or 'w <j>:'");
    const bool is_man = kind == "m";
    const int n_self = is_man ? n_men : n_women;
    const int n_other = is_man ? n_women : n_men;
    const char other_tag = is_man ? 'w' : 'm';
    const long long agent = cur.number();
    if (agent < 1 || agent > n_self) {
      cur.fail(std::string(kind) + std::to_string(agent) + " is out of range");
    }
    if (!cur.eat(':')) cur.fail("expected ':'");
    std::vector<int>& line_of = is_man ? man_line : woman_line;
    if (line_of[agent] != 0) {
      cur.fail("second list for " + std::string(kind) + std::to_string(agent) +
               " (first on line " + std::to_string(line_of[agent]) + ")");
    }
    line_of[agent] = cur.line;

    PreferenceList list;
    std::vector<int> seen;
    auto read_entry = [&]() {
      const int col = cur.column();
      const long long x = cur.number();
      if (x < 1 || x > n_other) {
        throw ParseError(cur.line, col,
                         std::string(1, other_tag) + std::to_string(x) +
                             " is out of range");
      }
      if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
        throw ParseError(cur.line, col,
                         "duplicate entry " + std::string(1, other_tag) +
                             std::to_string(x));
      }
      seen.push_back(static_cast<int>(x));
      return static_cast<int>(x);
    };
    while (!cur.done()) {
      if (cur.eat('(')) {
        Tie tie;
        while (!cur.eat(')')) {
          if (cur.done()) cur.fail("unterminated tie");
          tie.push_back(read_entry());
        }
        if (tie.empty()) cur.fail("empty tie");
        list.push_back(std::move(tie));
      } else {
        list.push_back({read_entry()});
      }
    }
    (is_man ? men : women)[agent - 1] = std::move(list);
  }

  if (n_men < 0) throw ParseError(1, 1, "missing 'men <n>' header");
  if (n_women < 0) throw ParseError(1, 1, "missing 'women <n>' header");

  // Mutual acceptability, reported with the offending line.
  auto lists_agent = [](const PreferenceList& list, int x) {
    for (const Tie& t : list) {
      if (std::find(t.begin(), t.end(), x) != t.end()) return true;
    }
    return false;
  };
  for (int m = 1; m <= n_men; ++m) {
    for (const Tie& t : men[m - 1]) {
      for (int w : t) {
        if (!lists_agent(women[w - 1], m)) {
          throw ParseError(man_line[m], 1,
                           "m" + std::to_string(m) + " lists w" +
                               std::to_string(w) + " but w" +
                               std::to_string(w) + " does not list m" +
                               std::to_string(m));
        }
      }
    }
  }
  for (int w = 1; w <= n_women; ++w) {
    for (const Tie& t : women[w - 1]) {
      for (int m : t) {
        if (!lists_agent(men[m - 1], w)) {
          throw ParseError(woman_line[w], 1,
                           "w" + std::to_string(w) + " lists m" +
                               std::to_string(m) + " but m" +
                               std::to_string(m) + " does not list w" +
                               std::to_string(w));
        }
      }
    }
  }
  return Instance(std::move(men), std::move(women));
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "men " << instance.n_men() << "\n";
  out << "women " << instance.n_women() << "\n";
  auto write = [&](char tag, int agent, const PreferenceList& list) {
    out << tag << ' ' << agent << ':';
    for (const Tie& tie : list) {
      out << ' ';
      if (tie.size() == 1) {
        out << tie.front();
        continue;
      }
      out << '(';
      for (std::size_t k = 0; k < tie.size(); ++k) {
        if (k > 0) out << ' ';
        out << tie[k];
      }
      out << ')';
    }
    out << "\n";
  };
  for (int m = 1; m <= instance.n_men(); ++m) write('m', m, instance.man_list(m));
  for (int w = 1; w <= instance.n_women(); ++w) {
    write('w', w, instance.woman_list(w));
  }
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  std::vector<std::string_view> lines = split_lines(text);
  CnfFormula formula;
  long long declared_clauses = -1;
  std::vector<int> current;
  int current_line = 0;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    Cursor cur{lines[idx], 0, static_cast<int>(idx) + 1};
    if (blank(cur.text)) continue;
    cur.skip_space();
    if (cur.text[cur.pos] == 'c' || cur.text[cur.pos] == '%') continue;
    if (cur.text[cur.pos] == 'p') {
      if (declared_clauses >= 0) cur.fail("second problem line");
      cur.word();
      if (cur.word() != "cnf") cur.fail("expected 'p cnf <vars> <clauses>'");
      const long long vars = cur.number();
      declared_clauses = cur.number();
      if (vars < 0 || declared_clauses < 0) cur.fail("negative count");
      formula.n_vars = static_cast<int>(vars);
      continue;
    }
    if (declared_clauses < 0) cur.fail("clause before the problem line");
    while (!cur.done()) {
      const int col = cur.column();
      const long long lit = cur.number();
      if (lit == 0) {
        if (current.size() < 2 || current.size() > 3) {
          throw ParseError(current_line, col,
                           "clause " +
                               std::to_string(formula.clauses.size() + 1) +
                               " has " + std::to_string(current.size()) +
                               " literals (need 2 or 3)");
        }
        formula.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit < -formula.n_vars || lit > formula.n_vars) {
        throw ParseError(cur.line, col,
                         "literal " + std::to_string(lit) +
                             " exceeds the declared variable count");
      }
      if (current.empty()) current_line = cur.line;
      current.push_back(static_cast<int>(lit));
    }
  }
  if (declared_clauses < 0) throw ParseError(1, 1, "missing problem line");
  if (!current.empty()) {
    throw ParseError(current_line, 1, "last clause is not terminated by 0");
  }
  if (static_cast<long long>(formula.clauses.size()) != declared_clauses) {
    throw ParseError(1, 1,
                     "problem line declares " +
                         std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(formula.clauses.size()));
  }
  return formula;
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.n_vars << ' ' << formula.clauses.size() << "\n";
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const ResultDocument& doc) {
  nlohmann::ordered_json j;
  j["problem"] = doc.problem;
  if (doc.notion) j["notion"] = *doc.notion;
  j["outcome"] = doc.outcome;
  j["exists"] = doc.exists;
  if (doc.size) j["size"] = *doc.size;
  auto pairs = nlohmann::ordered_json::array();
  for (Pair p : doc.matching) pairs.push_back({p.man, p.woman});
  j["matching"] = std::move(pairs);
  if (doc.matchings) {
    auto all = nlohmann::ordered_json::array();
    for (const auto& m : *doc.matchings) {
      auto one = nlohmann::ordered_json::array();
      for (Pair p : m) one.push_back({p.man, p.woman});
      all.push_back(std::move(one));
    }
    j["matchings"] = std::move(all);
  }
  if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
  nlohmann::ordered_json prov;
  prov["input"] = doc.input;
  if (doc.seed) prov["seed"] = *doc.seed;
  j["provenance"] = std::move(prov);
  return j;
}

ResultDocument result_from_json(const nlohmann::ordered_json& j) {
  ResultDocument doc;
  doc.problem = j.at("problem").get<std::string>();
  if (j.contains("notion")) doc.notion = j.at("notion").get<std::string>();
  doc.outcome = j.at("outcome").get<std::string>();
  doc.exists = j.at("exists").get<bool>();
  if (j.contains("size")) doc.size = j.at("size").get<int>();
  for (const auto& p : j.at("matching")) {
    doc.matching.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  }
  if (j.contains("matchings")) {
    doc.matchings.emplace();
    for (const auto& m : j.at("matchings")) {
      std::vector<Pair> one;
      for (const auto& p : m) one.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      doc.matchings->push_back(std::move(one));
    }
  }
  if (j.contains("timing_ms")) doc.timing_ms = j.at("timing_ms").get<double>();
  const auto& prov = j.at("provenance");
  doc.input = prov.at("input").get<std::string>();
  if (prov.contains("seed")) doc.seed = prov.at("seed").get<std::uint64_t>();
  return doc;
}

std::string format_text(const ResultDocument& doc) {
  std::ostringstream out;
  out << "problem   " << doc.problem << "\n";
  if (doc.notion) out << "notion    " << *doc.notion << "\n";
  out << "outcome   " << doc.outcome << "\n";
  if (doc.size) out << "size      " << *doc.size << "\n";
  if (doc.timing_ms) out << "time      " << *doc.timing_ms << " ms\n";
  if (!doc.input.empty()) out << "input     " << doc.input << "\n";
  if (doc.seed) out << "seed      " << *doc.seed << "\n";
  if (!doc.matching.empty()) {
    out << "matching\n";
    for (Pair p : doc.matching) {
      out << "  m" << p.man << " - w" << p.woman << "\n";
    }
  }
  if (doc.matchings) {
    out << "matchings " << doc.matchings->size() << "\n";
    for (const auto& m : *doc.matchings) {
      out << " ";
      for (Pair p : m) out << " (m" << p.man << ",w" << p.woman << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace ncsm

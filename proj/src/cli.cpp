#include "ncsm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ncsm/core.hpp"
#include "ncsm/generate.hpp"
#include "ncsm/greedy1.hpp"
#include "ncsm/io.hpp"
#include "ncsm/maxwsnm.hpp"
#include "ncsm/oracle.hpp"
#include "ncsm/reduction.hpp"
#include "ncsm/render.hpp"
#include "ncsm/ssnm.hpp"

namespace ncsm {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << content;
}

bool guard_overridden() {
  const char* v = std::getenv("NCSM_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

struct SolveOptions {
  std::string command;
  std::string notion = "weak";
  bool women_side = false;
  bool no_guard = false;
  bool no_timing = false;
};

struct SolveOutcome {
  int status = kExitOk;
  ResultDocument doc;
  std::string error;
};

std::vector<Pair> pairs_of(const Matching& m) { return m.pairs(); }

ResultDocument solve(const SolveOptions& opts, const std::string& path) {
  const Instance instance = parse_instance(read_file(path));
  const bool lifted = opts.no_guard || guard_overridden();
  const SizeGuard size_guard = lifted ? SizeGuard::unlimited() : SizeGuard{};

  ResultDocument doc;
  doc.input = path;
  const auto start = std::chrono::steady_clock::now();

  auto set_matching = [&doc](const std::optional<Matching>& m) {
    doc.exists = m.has_value();
    doc.outcome = m ? "found" : "none";
    if (m) {
      doc.size = static_cast<int>(m->size());
      doc.matching = pairs_of(*m);
    }
  };

  if (opts.command == "solve-max-wsnm" || opts.command == "oracle-max-wsnm") {
    const Notion notion = parse_notion(opts.notion);
    require_notion_applicable(instance, notion);
    doc.problem = "max-wsnm";
    doc.notion = std::string(to_string(notion));
    std::optional<SizedMatching> best;
    if (opts.command == "solve-max-wsnm") {
      best = max_wsnm(instance, notion,
                      lifted ? std::numeric_limits<int>::max() : kDefaultMaxDpSide);
    } else {
      best = brute_max_wsnm(instance, notion, size_guard);
    }
    set_matching(best ? std::optional<Matching>(best->matching) : std::nullopt);
  } else if (opts.command == "exist-ssnm") {
    const Notion notion = parse_notion(opts.notion);
    if (notion == Notion::Weak) {
      throw InputError(
          "exist-ssnm decides smi-strict, super and strong; weak-SSNM "
          "existence is NP-complete, use oracle-exist-ssnm or weak-ssnm-len1");
    }
    require_notion_applicable(instance, notion);
    doc.problem = "exist-ssnm";
    doc.notion = std::string(to_string(notion));
    const SsnmResult r = exist_ssnm(
        instance, notion, lifted ? FinderGuard::unlimited() : FinderGuard{});
    // No stable matching at all is just another way of having no SSNM.
    doc.exists = r.outcome == SsnmOutcome::Found;
    doc.outcome = doc.exists ? "found" : "none";
    if (r.matching) {
      doc.size = static_cast<int>(r.matching->size());
      doc.matching = pairs_of(*r.matching);
    }
  } else if (opts.command == "oracle-exist-ssnm") {
    const Notion notion = parse_notion(opts.notion);
    require_notion_applicable(instance, notion);
    doc.problem = "exist-ssnm";
    doc.notion = std::string(to_string(notion));
    set_matching(brute_exist_ssnm(instance, notion, size_guard));
  } else if (opts.command == "weak-ssnm-len1") {
    doc.problem = "weak-ssnm-len1";
    doc.notion = "weak";
    set_matching(opts.women_side ? weak_ssnm_len1_women(instance)
                                 : weak_ssnm_len1(instance));
  } else if (opts.command == "oracle-all-stable") {
    const Notion notion = parse_notion(opts.notion);
    require_notion_applicable(instance, notion);
    doc.problem = "all-stable";
    doc.notion = std::string(to_string(notion));
    const std::vector<Matching> all = brute_all_stable(instance, notion, size_guard);
    doc.exists = !all.empty();
    doc.outcome = all.empty() ? "none" : "found";
    doc.size = static_cast<int>(all.size());
    doc.matchings.emplace();
    for (const Matching& m : all) doc.matchings->push_back(pairs_of(m));
  } else {
    throw InputError("unknown command '" + opts.command + "'");
  }

  if (!opts.no_timing) {
    doc.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  }
  return doc;
}

// Maps library exceptions onto exit statuses.
template <typename F>
int guarded(std::ostream& err, std::string* message, F&& body) {
  auto report = [&](int status, const std::string& text) {
    if (message) {
      *message = text;
    } else {
      err << "error: " << text << "\n";
    }
    return status;
  };
  try {
    body();
    return kExitOk;
  } catch (const GuardExceeded& e) {
    return report(kExitGuardRefusal,
                  std::string(e.what()) +
                      " (set NCSM_GUARD_OVERRIDE=1 or pass --no-guard)");
  } catch (const InvalidFormula& e) {
    std::string text = e.what();
    for (const std::string& v : e.violations()) text += "\n  " + v;
    return report(kExitInputError, text);
  } catch (const ParseError& e) {
    return report(kExitInputError, e.what());
  } catch (const InvalidInstance& e) {
    return report(kExitInputError, e.what());
  } catch (const ContractViolation& e) {
    return report(kExitInputError, e.what());
  } catch (const InputError& e) {
    return report(kExitInputError, e.what());
  } catch (const std::invalid_argument& e) {
    return report(kExitInputError, e.what());
  } catch (const std::exception& e) {
    return report(kExitInternal, e.what());
  }
}

std::string render_doc(const ResultDocument& doc, const std::string& format,
                       bool compact) {
  if (format == "text") return format_text(doc);
  return compact ? to_json(doc).dump() + "\n" : to_json(doc).dump(2) + "\n";
}

int run_solve(const SolveOptions& opts, const std::vector<std::string>& inputs,
              const std::string& format, int jobs, std::ostream& out,
              std::ostream& err) {
  if (inputs.size() == 1) {
    ResultDocument doc;
    const int status =
        guarded(err, nullptr, [&] { doc = solve(opts, inputs.front()); });
    if (status == kExitOk) out << render_doc(doc, format, false);
    return status;
  }

  // Batch: one line per input, in input order, whatever order they finish.
  std::vector<SolveOutcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < inputs.size(); k = next++) {
      SolveOutcome& r = results[k];
      r.status = guarded(err, &r.error, [&] { r.doc = solve(opts, inputs[k]); });
    }
  };
  const int n_threads =
      std::max(1, std::min(jobs, static_cast<int>(inputs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int worst = kExitOk;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const SolveOutcome& r = results[k];
    worst = std::max(worst, r.status);
    if (r.status == kExitOk) {
      out << render_doc(r.doc, format, true);
      if (format == "text") out << "\n";
      continue;
    }
    nlohmann::ordered_json line;
    line["input"] = inputs[k];
    line["status"] = r.status;
    line["error"] = r.error;
    if (format == "text") {
      out << "input     " << inputs[k] << "\nerror     " << r.error << "\n\n";
    } else {
      out << line.dump() << "\n";
    }
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Stable noncrossing matchings on two parallel lines"};
  app.name("ncsm");
  app.require_subcommand(1);

  SolveOptions opts;
  std::vector<std::string> inputs;
  std::string format = "json";
  int jobs = 1;

  const std::vector<std::string> notions = {"smi-strict", "smi", "super",
                                            "strong", "weak"};
  auto add_solver = [&](const std::string& name, const std::string& help,
                        bool takes_notion) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs, "instance files ('-' for stdin)")
        ->required();
    if (takes_notion) {
      sub->add_option("--notion", opts.notion, "smi-strict | super | strong | weak")
          ->check(CLI::IsMember(notions))
          ->capture_default_str();
    }
    sub->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_flag("--no-timing", opts.no_timing, "omit timing_ms");
    sub->add_option("--jobs", jobs, "solve several files concurrently")
        ->check(CLI::PositiveNumber);
    return sub;
  };

  CLI::App* solve_max =
      add_solver("solve-max-wsnm", "maximum weakly stable noncrossing matching", true);
  solve_max->add_flag("--no-guard", opts.no_guard, "lift the DP size limit");
  CLI::App* exist = add_solver(
      "exist-ssnm", "does a strongly stable noncrossing matching exist", true);
  exist->get_option("--notion")->required();
  exist->add_flag("--no-guard", opts.no_guard,
                  "lift the exhaustive stable-matching finder guard");
  CLI::App* len1 = add_solver(
      "weak-ssnm-len1", "weak SSNM when every man lists at most one woman", false);
  len1->add_flag("--women-side", opts.women_side,
                 "every woman lists at most one man instead");
  for (const char* name :
       {"oracle-max-wsnm", "oracle-exist-ssnm", "oracle-all-stable"}) {
    add_solver(name, "exhaustive search (small instances)", true)
        ->add_flag("--no-guard", opts.no_guard, "lift the size guard");
  }

  std::string cnf_path;
  std::string output_path;
  CLI::App* reduce =
      app.add_subcommand("reduce-3sat", "gadget instance for a restricted 3SAT formula");
  reduce->add_option("cnf", cnf_path, "DIMACS file ('-' for stdin)")->required();
  reduce->add_option("-o,--output", output_path, "write the instance here");

  int gen_men = 5;
  int gen_women = -1;
  int gen_len = 3;
  double gen_ties = 0.0;
  std::uint64_t gen_seed = 1;
  bool gen_complete = false;
  CLI::App* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--men", gen_men, "number of men")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen->add_option("--women", gen_women, "number of women (default: --men)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--max-len", gen_len, "longest man's list")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen->add_option("--tie-prob", gen_ties, "chance that an entry ties the previous")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
  gen->add_flag("--complete", gen_complete,
                "complete strict lists on --men agents per side");
  gen->add_option("-o,--output", output_path, "write the instance here");

  std::string render_input;
  std::string result_path;
  bool ascii = false;
  bool overlay = false;
  bool show_acceptable = false;
  CLI::App* render = app.add_subcommand("render", "draw an instance and a matching");
  render->add_option("input", render_input, "instance file")->required();
  render->add_option("--result", result_path,
                     "JSON result whose matching is drawn (default: solve "
                     "max-wsnm under --notion)");
  render->add_option("--notion", opts.notion, "notion for solving and the overlay")
      ->check(CLI::IsMember(notions))
      ->capture_default_str();
  render->add_flag("--overlay", overlay, "draw noncrossing blocking pairs");
  render->add_flag("--acceptable", show_acceptable, "draw every acceptable pair");
  render->add_flag("--ascii", ascii, "character art instead of SVG");
  render->add_option("-o,--output", output_path, "write the picture here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto emit = [&](const std::string& text) {
    if (output_path.empty()) {
      out << text;
    } else {
      write_file(output_path, text);
    }
  };

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();

  if (chosen == reduce) {
    return guarded(err, nullptr, [&] {
      const CnfFormula formula = parse_dimacs(read_file(cnf_path));
      const GadgetInstance g = build_gadget_instance(formula);
      std::ostringstream text;
      text << "# gadget instance: " << formula.n_vars << " variables, "
           << g.plan.n_two_clauses << " 2-clauses, " << g.plan.n_three_clauses
           << " 3-clauses\n";
      text << "# core agents: " << g.plan.core_men << " men, "
           << g.plan.core_women << " women; separator m"
           << g.plan.separator_man << " - w" << g.plan.separator_woman << "\n";
      text << serialize_instance(g.instance);
      emit(text.str());
    });
  }
  if (chosen == gen) {
    return guarded(err, nullptr, [&] {
      const Instance inst =
          gen_complete
              ? generate_complete(gen_men, gen_seed)
              : generate(gen_men, gen_women < 0 ? gen_men : gen_women, gen_len,
                         gen_ties, gen_seed);
      std::ostringstream text;
      text << "# gen seed " << gen_seed << "\n" << serialize_instance(inst);
      emit(text.str());
    });
  }
  if (chosen == render) {
    return guarded(err, nullptr, [&] {
      const Instance inst = parse_instance(read_file(render_input));
      const Notion notion = parse_notion(opts.notion);
      require_notion_applicable(inst, notion);
      std::optional<Matching> matching;
      if (!result_path.empty()) {
        nlohmann::ordered_json j;
        try {
          j = nlohmann::ordered_json::parse(read_file(result_path));
          matching = Matching(inst, result_from_json(j).matching);
        } catch (const nlohmann::json::exception& e) {
          throw InputError("bad result file '" + result_path + "': " + e.what());
        }
      } else {
        const bool lifted = guard_overridden();
        auto best = max_wsnm(inst, notion,
                             lifted ? std::numeric_limits<int>::max()
                                    : kDefaultMaxDpSide);
        matching = best ? best->matching
                        : Matching::unchecked(inst.n_men(), inst.n_women(), {});
      }
      RenderOptions ro;
      ro.show_acceptable = show_acceptable;
      if (overlay) ro.overlay = noncrossing_blocking_pairs(inst, notion, *matching);
      emit(ascii ? render_ascii(inst, *matching, ro)
                 : render_svg(inst, *matching, ro));
    });
  }

  opts.command = command;
  return run_solve(opts, inputs, format, jobs, out, err);
}

}  // namespace ncsm

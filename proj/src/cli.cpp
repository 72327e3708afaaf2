// Copyright 2026 The qfa-equiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfa/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfa/equivalence.hpp"
#include "qfa/generate.hpp"
#include "qfa/io.hpp"

namespace qfa {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Alphabet alphabet_from_csv(const std::string& csv) {
  std::string symbols;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.size() != 1) throw std::invalid_argument("alphabet symbols must be single characters, got '" + item + "'");
    symbols += item;
  }
  return Alphabet(symbols);
}

std::vector<std::size_t> parse_range(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const std::size_t lo = std::stoul(text.substr(0, dots));
      const std::size_t hi = std::stoul(text.substr(dots + 2));
      for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      std::stringstream ss(text);
      for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoul(item));
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad grid value for '" + key + "': '" + text + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty grid range for '" + key + "'");
  return out;
}

struct Grid {
  std::vector<std::size_t> states{1, 2};
  std::vector<std::size_t> m{1, 2};
  std::vector<std::size_t> k{1, 2};
  std::size_t seeds = 2;
};

// "states=1..3;m=1,2;k=1..2;seeds=4"; omitted keys keep their defaults.
Grid parse_grid(const std::string& text) {
  Grid g;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("grid entry '" + part + "' is not key=value");
    const std::string key = part.substr(0, eq);
    const auto values = parse_range(key, part.substr(eq + 1));
    if (key == "states") g.states = values;
    else if (key == "m") g.m = values;
    else if (key == "k") g.k = values;
    else if (key == "seeds" && values.size() == 1) g.seeds = values.front();
    else throw std::invalid_argument("unknown grid key '" + key + "'");
  }
  for (std::size_t m : g.m) {
    if (m == 0 || m > 26) throw std::invalid_argument("grid alphabet size must be in 1..26");
  }
  return g;
}

int run_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  const KLetterQfa a = load_qfa_unvalidated(file);
  const ValidationReport report = validate(a);
  if (report.ok()) {
    out << "ok\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) err << file << ": " << v.message << '\n';
  return kExitInputError;
}

int run_prob(const std::string& file, const std::string& word, std::ostream& out) {
  const KLetterQfa a = load_qfa(file);
  const Rational p = accept_prob(a, word);
  out << p << " ≈ " << std::setprecision(12) << p.to_double() << '\n';
  return kExitOk;
}

int run_equiv(const std::string& f1, const std::string& f2, const std::string& method, bool as_json, unsigned workers,
              std::ostream& out) {
  const KLetterQfa a1 = load_qfa(f1);
  const KLetterQfa a2 = load_qfa(f2);
  EquivReport report;
  report.method = method == "bruteforce" ? Method::kBruteForce : Method::kAlgebraic;
  if (a1.alphabet != a2.alphabet) throw std::invalid_argument("alphabet mismatch between the two automata");
  report.bound_used = equivalence_bound(a1.states, a2.states, a1.alphabet.size(), std::max(a1.k, a2.k));
  const auto start = Clock::now();
  if (report.method == Method::kAlgebraic) {
    report.verdict = decide(a1, a2, &report.stats);
  } else {
    BruteForceOptions options;
    options.workers = workers;
    report.verdict = brute_force(a1, a2, options, &report.stats);
  }
  report.wall_millis = millis_since(start);
  out << (as_json ? report_json(report) : report_text(report));
  return report.verdict.equivalent() ? kExitOk : kExitInequivalent;
}

int run_gen(std::size_t states, const std::string& alphabet, std::size_t k, std::uint64_t seed,
            const std::string& output, std::ostream& out) {
  const KLetterQfa a = random_qfa(states, alphabet_from_csv(alphabet), k, seed);
  if (output.empty() || output == "-") {
    out << serialize_qfa(a);
  } else {
    save_qfa(output, a);
  }
  return kExitOk;
}

int run_bound(const std::string& f1, const std::string& f2, std::ostream& out) {
  const KLetterQfa a1 = load_qfa(f1);
  const KLetterQfa a2 = load_qfa(f2);
  if (a1.alphabet != a2.alphabet) throw std::invalid_argument("alphabet mismatch between the two automata");
  out << equivalence_bound(a1.states, a2.states, a1.alphabet.size(), std::max(a1.k, a2.k)) << '\n';
  return kExitOk;
}

int run_bench(const std::string& grid_text, std::optional<std::size_t> bf_max_len, std::ostream& out) {
  const Grid grid = parse_grid(grid_text);
  const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  out << "n,m,k,method,verdict,millis\n";
  for (std::size_t states : grid.states) {
    for (std::size_t m : grid.m) {
      for (std::size_t k : grid.k) {
        const Alphabet alphabet(letters.substr(0, m));
        for (std::size_t s = 0; s < grid.seeds; ++s) {
          const std::uint64_t seed = 1000003ULL * states + 10007ULL * m + 101ULL * k + s;
          const KLetterQfa a1 = random_qfa(states, alphabet, k, seed);
          // Alternate equivalent (phase-shifted copy) and independent pairs.
          const KLetterQfa a2 = s % 2 == 0 ? with_global_phase(a1, unit_phases()[4])
                                           : random_qfa(states, alphabet, k, seed ^ 0x9e3779b97f4a7c15ULL);
          auto row = [&](const char* method, const Verdict& v, double ms) {
            out << 2 * states << ',' << m << ',' << k << ',' << method << ','
                << (v.equivalent() ? "equivalent" : "not_equivalent") << ',' << std::fixed << std::setprecision(3)
                << ms << std::defaultfloat << '\n';
          };
          auto start = Clock::now();
          const Verdict algebraic = decide(a1, a2);
          row("algebraic", algebraic, millis_since(start));
          start = Clock::now();
          BruteForceOptions options;
          options.max_len = bf_max_len;
          const Verdict brute = brute_force(a1, a2, options);
          row("bruteforce", brute, millis_since(start));
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equivalence checking for multi-letter quantum finite automata", "qfa"};
  app.require_subcommand(1);

  std::string file1;
  std::string file2;
  std::string word;

  auto* validate_cmd = app.add_subcommand("validate", "Check an automaton document");
  validate_cmd->add_option("file", file1, "Automaton JSON file")->required();

  auto* prob_cmd = app.add_subcommand("prob", "Exact acceptance probability of a word");
  prob_cmd->add_option("file", file1, "Automaton JSON file")->required();
  prob_cmd->add_option("word", word, "Input word (omit for the empty word)");

  std::string method = "algebraic";
  bool as_json = false;
  unsigned workers = 1;
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two automata are equivalent");
  equiv_cmd->add_option("file1", file1, "First automaton")->required();
  equiv_cmd->add_option("file2", file2, "Second automaton")->required();
  equiv_cmd->add_option("--method", method, "algebraic or bruteforce")
      ->check(CLI::IsMember({"algebraic", "bruteforce"}));
  equiv_cmd->add_flag("--json", as_json, "Emit a JSON report");
  equiv_cmd->add_option("--workers", workers, "Threads for the bruteforce method")->check(CLI::PositiveNumber);

  std::size_t states = 0;
  std::string alphabet_csv;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random automaton with rational unitaries");
  gen_cmd->add_option("--states", states, "Number of states")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--alphabet", alphabet_csv, "Comma-separated single-character symbols")->required();
  gen_cmd->add_option("--k", k, "Memory length")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed")->required();
  gen_cmd->add_option("-o,--output", output, "Output file ('-' for stdout)");

  auto* bound_cmd = app.add_subcommand("bound", "Print the equivalence length bound for two automata");
  bound_cmd->add_option("file1", file1, "First automaton")->required();
  bound_cmd->add_option("file2", file2, "Second automaton")->required();

  std::string grid = "states=1..2;m=1..2;k=1..2;seeds=2";
  std::optional<std::size_t> bf_max_len;
  auto* bench_cmd = app.add_subcommand("bench", "Time algebraic vs bruteforce over a parameter grid (CSV)");
  bench_cmd->add_option("--grid", grid, "e.g. states=1..2;m=1,2;k=1..2;seeds=2");
  bench_cmd->add_option("--bf-max-len", bf_max_len, "Cap the bruteforce word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*validate_cmd) return run_validate(file1, out, err);
    if (*prob_cmd) return run_prob(file1, word, out);
    if (*equiv_cmd) return run_equiv(file1, file2, method, as_json, workers, out);
    if (*gen_cmd) return run_gen(states, alphabet_csv, k, seed, output, out);
    if (*bound_cmd) return run_bound(file1, file2, out);
    if (*bench_cmd) return run_bench(grid, bf_max_len, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qfa

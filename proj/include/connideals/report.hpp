#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "connideals/betti.hpp"
#include "connideals/corpus.hpp"
#include "connideals/ideal.hpp"

namespace connideals {

/// Version of the JSON-lines schema, emitted as the top-level "v" field.
inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitResourceCap = 3,
  kExitInconsistent = 4,
};

struct RunOptions {
  std::vector<int> t_values{2, 3, 4, 5};
  std::vector<Field> fields{Field::rationals, Field::gf2};
  SearchLimits search;
  BettiLimits betti;
  int jobs = 1;
  std::size_t skip = 0;
  bool keep_going = false;
  bool timing = false;
  std::filesystem::path repro_dir = "conn-ideals-repro";
};

enum class Verdict { present, absent, undecided };
std::string_view to_string(Verdict v);

/// Everything `analyze` learns about one (graph, t) pair.
struct GraphReport {
  std::string source;
  std::string graph6;
  int n = 0;
  int t = 0;

  bool chordal = false;
  bool co_chordal = false;
  bool gap_free = false;
  bool t_gap_free = false;
  std::optional<bool> t_claw_free;  // only for t >= 3
  bool long_induced_cycle = false;  // an induced cycle on more than t + 2 vertices

  SquarefreeIdeal conn;
  std::size_t path_gens = 0;

  Verdict lq = Verdict::undecided;
  std::string provenance = "none";  // chordal-builder | clawfree-builder | exact-search | none
  std::optional<AdmissibleOrder> order;
  bool certificate_replays = false;

  std::map<Field, std::optional<int>> regularity;          // nullopt: zero ideal or capped
  std::map<Field, std::optional<bool>> linear_resolution;  // nullopt: capped
  std::optional<bool> vertex_splittable;                   // nullopt: capped

  bool resource_limited = false;
  std::vector<std::string> notes;
  std::optional<double> elapsed_ms;
};

GraphReport analyze_graph(const CorpusEntry& entry, int t, const RunOptions& options);
nlohmann::ordered_json to_json(const GraphReport& report);

/// Implications that hold as theorems; any entry returned signals a bug.
std::vector<std::string> consistency_violations(const GraphReport& report);

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct TheoremCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

/// Runs every theorem check on (g, t); checks whose hypotheses fail are
/// reported as skipped.
std::vector<TheoremCheck> replay_theorems(const Graph& g, int t, const RunOptions& options);

enum class Question { q7_1, q7_2, q7_4 };
std::optional<Question> parse_question(std::string_view name);
std::string_view to_string(Question q);

/// The three subcommands. Each writes JSON lines to `out` (one record per
/// graph and t, then for theorems/conjecture a summary line) and returns
/// the process exit code.
int cmd_analyze(const std::vector<CorpusEntry>& corpus, const RunOptions& options,
                std::ostream& out, std::ostream& err);
int cmd_theorems(const std::vector<CorpusEntry>& corpus, const RunOptions& options,
                 std::ostream& out, std::ostream& err);
int cmd_conjecture(const std::vector<CorpusEntry>& corpus, Question question,
                   const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace connideals

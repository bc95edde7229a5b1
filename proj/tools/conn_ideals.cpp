#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "connideals/errors.hpp"
#include "connideals/report.hpp"

using namespace connideals;

namespace {

// Accepts "3", "2..5" and comma lists of either.
std::vector<int> parse_t_values(const std::string& text) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto dots = item.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad t value: " + item);
      continue;
    }
    const int lo = std::stoi(item.substr(0, dots));
    const int hi = std::stoi(item.substr(dots + 2), &used);
    if (used != item.size() - dots - 2 || lo > hi) throw std::invalid_argument("bad t range: " + item);
    for (int t = lo; t <= hi; ++t) out.push_back(t);
  }
  if (out.empty()) throw std::invalid_argument("empty t list");
  for (int t : out) {
    if (t < 2 || t > 64) throw std::invalid_argument("t must lie in 2..64");
  }
  return out;
}

std::vector<Field> parse_fields(const std::string& text) {
  std::vector<Field> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const Field f = parse_field(item);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  if (out.empty()) throw std::invalid_argument("empty field list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected ideals of graphs: linear quotients, resolutions and corpus scans"};
  app.require_subcommand(1);

  std::string format_name;
  std::string t_text = "2..5";
  std::string fields_text = "q,gf2";
  int jobs = 1;
  std::size_t cap_gens = SearchLimits{}.max_generators;
  std::size_t skip = 0;
  bool keep_going = false;
  bool timing = false;
  std::string repro_dir = "conn-ideals-repro";
  std::string question_name;
  std::string file;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Input format: g6 or edges (default: detect)");
    sub->add_option("--t", t_text, "Values of t, e.g. 3 or 2..5 or 2,4");
    sub->add_option("--fields", fields_text, "Coefficient fields: q, gf2");
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cap-gens", cap_gens, "Largest generator count given to exact searches");
    sub->add_option("--skip", skip, "Skip the first N graphs of the corpus");
    sub->add_flag("--keep-going", keep_going, "Report consistency violations without aborting");
    sub->add_flag("--timing", timing, "Add elapsed_ms to analyze records");
    sub->add_option("--repro-dir", repro_dir, "Directory for reproducers of failed checks");
    sub->add_option("FILE", file, "Graph file (- for stdin)")->required();
  };
  auto* analyze = app.add_subcommand("analyze", "Per-graph report for every t");
  auto* theorems = app.add_subcommand("theorems", "Replay theorem checks over a corpus");
  auto* conjecture = app.add_subcommand("conjecture", "Scan a corpus for counterexample candidates");
  add_common(analyze);
  add_common(theorems);
  add_common(conjecture);
  conjecture->add_option("--question", question_name, "gapfree-lq (Q7.1), classify (Q7.2) or splittable (Q7.4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  RunOptions options;
  std::optional<Question> question;
  try {
    options.t_values = parse_t_values(t_text);
    options.fields = parse_fields(fields_text);
    if (const char* env = std::getenv("CONN_IDEALS_CAP_GENS")) {
      cap_gens = std::stoul(env);
    }
    if (conjecture->parsed()) {
      question = parse_question(question_name);
      if (!question) throw std::invalid_argument("unknown question: " + question_name);
    }
  } catch (const std::exception& e) {
    std::cerr << "conn-ideals: " << e.what() << '\n';
    return kExitParseError;
  }
  options.search.max_generators = cap_gens;
  options.jobs = jobs;
  options.skip = skip;
  options.keep_going = keep_going;
  options.timing = timing;
  options.repro_dir = repro_dir;

  std::vector<CorpusEntry> corpus;
  try {
    std::ifstream stream;
    std::istream* in = &std::cin;
    if (file != "-") {
      stream.open(file);
      if (!stream) {
        std::cerr << "conn-ideals: cannot open " << file << '\n';
        return kExitParseError;
      }
      in = &stream;
    }
    const std::string text{std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>()};
    CorpusFormat format;
    if (!format_name.empty()) {
      const auto f = parse_format(format_name);
      if (!f) throw std::invalid_argument("unknown format: " + format_name);
      format = *f;
    } else {
      std::istringstream lines(text);
      std::string first;
      while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
      }
      format = detect_format(file, first);
    }
    std::istringstream body(text);
    corpus = read_corpus(body, format, file == "-" ? "stdin" : file);
  } catch (const std::exception& e) {
    std::cerr << "conn-ideals: " << file << ": " << e.what() << '\n';
    return kExitParseError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(corpus, options, std::cout, std::cerr);
    if (theorems->parsed()) return cmd_theorems(corpus, options, std::cout, std::cerr);
    return cmd_conjecture(corpus, *question, options, std::cout, std::cerr);
  } catch (const ResourceLimit& e) {
    std::cerr << "conn-ideals: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "conn-ideals: " << e.what() << '\n';
    return kExitParseError;
  }
}

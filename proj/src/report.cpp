#include "connideals/report.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <thread>

#include "connideals/errors.hpp"
#include "connideals/hypergraph.hpp"
#include "connideals/order_builders.hpp"
#include "connideals/serialize.hpp"

namespace connideals {

using nlohmann::ordered_json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::present:
      return "present";
    case Verdict::absent:
      return "absent";
    case Verdict::undecided:
      break;
  }
  return "undecided";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      break;
  }
  return "skipped";
}

std::optional<Question> parse_question(std::string_view name) {
  if (name == "Q7.1" || name == "q7.1" || name == "gapfree-lq") return Question::q7_1;
  if (name == "Q7.2" || name == "q7.2" || name == "classify") return Question::q7_2;
  if (name == "Q7.4" || name == "q7.4" || name == "splittable") return Question::q7_4;
  return std::nullopt;
}

std::string_view to_string(Question q) {
  switch (q) {
    case Question::q7_1:
      return "gapfree-lq";
    case Question::q7_2:
      return "classify";
    case Question::q7_4:
      break;
  }
  return "splittable";
}

namespace {

// Applies fn to 0..count-1 on `jobs` threads; results keep index order.
template <class Result, class Fn>
std::vector<Result> ordered_map(std::size_t count, int jobs, Fn fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct Task {
  std::size_t entry = 0;
  int t = 0;
};

std::vector<Task> tasks_for(const std::vector<CorpusEntry>& corpus, const RunOptions& options) {
  std::vector<Task> tasks;
  for (std::size_t i = options.skip; i < corpus.size(); ++i) {
    for (int t : options.t_values) tasks.push_back({i, t});
  }
  return tasks;
}

}  // namespace

GraphReport analyze_graph(const CorpusEntry& entry, int t, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = entry.graph;
  GraphReport r;
  r.source = entry.source;
  r.graph6 = encode_graph6(g);
  r.n = g.vertex_count();
  r.t = t;
  r.chordal = is_chordal(g).has_value();
  r.co_chordal = is_chordal(g.complement()).has_value();
  r.gap_free = is_gap_free(g);
  r.t_gap_free = is_t_gap_free(g, t);
  if (t >= 3) r.t_claw_free = is_t_claw_free(g, t);
  r.long_induced_cycle = has_long_induced_cycle(g, t + 2).has_value();
  r.conn = conn_ideal(g, t);
  r.path_gens = path_ideal(g, t).size();

  try {
    if (r.chordal) {
      if (auto o = chordal_order(g, t)) {
        r.order = std::move(o);
        r.provenance = "chordal-builder";
      }
    }
    if (!r.order && t >= 3 && r.gap_free && r.t_claw_free.value_or(false)) {
      r.order = gapfree_clawfree_order(g, t);
      r.provenance = "clawfree-builder";
    }
    if (!r.order) {
      if (auto o = find_admissible_order(r.conn, options.search)) {
        r.order = std::move(o);
        r.provenance = "exact-search";
      }
    }
    r.lq = r.order ? Verdict::present : Verdict::absent;
    if (r.order) r.certificate_replays = replay_certificate(r.conn, *r.order);
  } catch (const ResourceLimit& e) {
    r.lq = Verdict::undecided;
    r.resource_limited = true;
    r.notes.emplace_back(e.what());
  }

  for (Field f : options.fields) {
    try {
      if (r.conn.is_zero()) {
        r.regularity[f] = std::nullopt;
        r.linear_resolution[f] = true;
      } else {
        const int reg = regularity(r.conn, f, options.betti);
        r.regularity[f] = reg;
        r.linear_resolution[f] = reg == t;
      }
    } catch (const ResourceLimit& e) {
      r.regularity[f] = std::nullopt;
      r.linear_resolution[f] = std::nullopt;
      r.resource_limited = true;
      r.notes.emplace_back(e.what());
    }
  }

  try {
    r.vertex_splittable = is_vertex_splittable(r.conn, options.search);
  } catch (const ResourceLimit& e) {
    r.resource_limited = true;
    r.notes.emplace_back(e.what());
  }

  if (options.timing) {
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

ordered_json to_json(const GraphReport& r) {
  ordered_json j;
  j["v"] = kReportSchemaVersion;
  j["source"] = r.source;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["t"] = r.t;
  ordered_json pred;
  pred["chordal"] = r.chordal;
  pred["co_chordal"] = r.co_chordal;
  pred["gap_free"] = r.gap_free;
  pred["t_gap_free"] = r.t_gap_free;
  pred["t_claw_free"] = r.t_claw_free ? ordered_json(*r.t_claw_free) : ordered_json(nullptr);
  pred["long_induced_cycle"] = r.long_induced_cycle;
  j["predicates"] = std::move(pred);
  j["ideal"] = {{"conn_gens", r.conn.size()}, {"path_gens", r.path_gens}};
  ordered_json lq;
  lq["verdict"] = to_string(r.lq);
  lq["provenance"] = r.provenance;
  lq["order"] = r.order ? ordered_json(order_to_json(r.conn, *r.order)) : ordered_json(nullptr);
  j["lq"] = std::move(lq);
  ordered_json reg = ordered_json::object();
  ordered_json lr = ordered_json::object();
  for (const auto& [field, value] : r.regularity) {
    reg[std::string(to_string(field))] = value ? ordered_json(*value) : ordered_json(nullptr);
  }
  for (const auto& [field, value] : r.linear_resolution) {
    lr[std::string(to_string(field))] = value ? ordered_json(*value) : ordered_json(nullptr);
  }
  j["regularity"] = std::move(reg);
  j["linear_resolution"] = std::move(lr);
  j["vertex_splittable"] =
      r.vertex_splittable ? ordered_json(*r.vertex_splittable) : ordered_json(nullptr);
  j["resource_limited"] = r.resource_limited;
  j["notes"] = r.notes;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

std::vector<std::string> consistency_violations(const GraphReport& r) {
  std::vector<std::string> out;
  const bool lq_decided = r.lq != Verdict::undecided;
  const bool lq = r.lq == Verdict::present;
  if (lq && !r.certificate_replays) out.emplace_back("admissible order fails certificate replay");
  if (r.vertex_splittable.value_or(false) && r.lq == Verdict::absent) {
    out.emplace_back("vertex splittable but no linear quotients");
  }
  if (r.chordal && lq_decided && lq != r.t_gap_free) {
    out.emplace_back("chordal graph: linear quotients disagrees with t-gap-freeness");
  }
  if (r.t == 2 && lq_decided && lq != r.co_chordal) {
    out.emplace_back("t = 2: linear quotients disagrees with co-chordality");
  }
  for (const auto& [field, value] : r.linear_resolution) {
    if (!value) continue;
    const std::string tag = " over " + std::string(to_string(field));
    if (lq && !*value) out.push_back("linear quotients without linear resolution" + tag);
    if (*value && !r.t_gap_free) out.push_back("linear resolution but not t-gap-free" + tag);
    if (*value && r.long_induced_cycle) {
      out.push_back("linear resolution despite a long induced cycle" + tag);
    }
    if (r.t == 2 && *value != r.co_chordal) {
      out.push_back("t = 2: linear resolution disagrees with co-chordality" + tag);
    }
  }
  return out;
}

std::vector<TheoremCheck> replay_theorems(const Graph& g, int t, const RunOptions& options) {
  std::vector<TheoremCheck> checks;
  const bool chordal = is_chordal(g).has_value();
  const bool gap_free = is_gap_free(g);
  const bool t_gap_free = is_t_gap_free(g, t);
  const bool claw_free = is_t_claw_free(g, 3);
  const bool t_claw_free = t >= 3 && is_t_claw_free(g, t);
  const SquarefreeIdeal conn = conn_ideal(g, t);

  auto run = [&](const std::string& name, bool applies, auto&& body) {
    TheoremCheck check{name, CheckStatus::skipped, "hypotheses not met"};
    if (applies) {
      try {
        body(check);
      } catch (const ResourceLimit& e) {
        check.status = CheckStatus::skipped;
        check.detail = std::string("undecided: ") + e.what();
      }
    }
    checks.push_back(std::move(check));
  };
  auto verdict = [](TheoremCheck& c, bool ok, std::string detail) {
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    c.detail = std::move(detail);
  };

  // Lazily computed shared facts.
  std::optional<bool> lq_cache;
  auto lq = [&] {
    if (!lq_cache) lq_cache = find_admissible_order(conn, options.search).has_value();
    return *lq_cache;
  };
  std::map<Field, bool> lr_cache;
  auto lr = [&](Field f) {
    if (!lr_cache.contains(f)) lr_cache[f] = has_linear_resolution(conn, f, options.betti);
    return lr_cache[f];
  };

  run("chordal-equivalence", chordal, [&](TheoremCheck& c) {
    const auto built = chordal_order(g, t);
    const bool builder = built.has_value() && replay_certificate(conn, *built);
    bool agree = builder == lq() && builder == t_gap_free;
    for (Field f : options.fields) agree = agree && lr(f) == builder;
    verdict(c, agree, "builder=" + std::to_string(builder) + " search=" + std::to_string(lq()) +
                          " t_gap_free=" + std::to_string(t_gap_free));
  });

  run("gapfree-clawfree-order", t >= 3 && gap_free && t_claw_free, [&](TheoremCheck& c) {
    const auto order = gapfree_clawfree_order(g, t);
    verdict(c, replay_certificate(conn, order),
            std::to_string(conn.size()) + " generators ordered");
  });

  run("claw-free-path-equals-conn", claw_free && t >= 3 && t <= 5, [&](TheoremCheck& c) {
    const auto path = path_ideal(g, t);
    verdict(c, path == conn,
            "path_gens=" + std::to_string(path.size()) + " conn_gens=" + std::to_string(conn.size()));
  });

  run("gapfree-clawfree-path-lq", gap_free && claw_free && t >= 3 && t <= 5, [&](TheoremCheck& c) {
    const auto path = path_ideal(g, t);
    const auto order = gapfree_clawfree_order(g, t);
    verdict(c, path == conn && replay_certificate(path, order), "path ideal ordered by builder");
  });

  run("splittable-lq-lr-chain", true, [&](TheoremCheck& c) {
    const bool vs = is_vertex_splittable(conn, options.search);
    bool ok = !vs || lq();
    if (lq()) {
      for (Field f : options.fields) ok = ok && lr(f);
    }
    verdict(c, ok, "splittable=" + std::to_string(vs) + " lq=" + std::to_string(lq()));
  });

  run("lr-implies-t-gap-free", true, [&](TheoremCheck& c) {
    bool ok = true;
    for (Field f : options.fields) ok = ok && (!lr(f) || t_gap_free);
    verdict(c, ok, "t_gap_free=" + std::to_string(t_gap_free));
  });

  run("long-cycle-blocks-lr", has_long_induced_cycle(g, t + 2).has_value(), [&](TheoremCheck& c) {
    bool ok = true;
    for (Field f : options.fields) ok = ok && !lr(f);
    verdict(c, ok, "induced cycle longer than t + 2 present");
  });

  return checks;
}

int cmd_analyze(const std::vector<CorpusEntry>& corpus, const RunOptions& options,
                std::ostream& out, std::ostream& err) {
  const auto tasks = tasks_for(corpus, options);
  const auto reports = ordered_map<GraphReport>(tasks.size(), options.jobs, [&](std::size_t i) {
    return analyze_graph(corpus[tasks[i].entry], tasks[i].t, options);
  });
  int code = kExitOk;
  for (const auto& r : reports) {
    out << to_json(r).dump() << '\n';
    const auto bad = consistency_violations(r);
    for (const auto& msg : bad) err << r.source << " t=" << r.t << ": " << msg << '\n';
    if (!bad.empty()) {
      if (!options.keep_going) {
        err << "aborting: internal consistency violated (rerun with --keep-going to continue)\n";
        return kExitInconsistent;
      }
      code = kExitInconsistent;
    }
    if (r.resource_limited && code == kExitOk) code = kExitResourceCap;
  }
  return code;
}

int cmd_theorems(const std::vector<CorpusEntry>& corpus, const RunOptions& options,
                 std::ostream& out, std::ostream& err) {
  const auto tasks = tasks_for(corpus, options);
  const auto results =
      ordered_map<std::vector<TheoremCheck>>(tasks.size(), options.jobs, [&](std::size_t i) {
        return replay_theorems(corpus[tasks[i].entry].graph, tasks[i].t, options);
      });

  std::map<std::string, std::map<std::string, std::size_t>> summary;
  std::size_t failures = 0;
  std::size_t undecided = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const CorpusEntry& entry = corpus[tasks[i].entry];
    const std::string g6 = encode_graph6(entry.graph);
    ordered_json record;
    record["v"] = kReportSchemaVersion;
    record["source"] = entry.source;
    record["graph6"] = g6;
    record["t"] = tasks[i].t;
    ordered_json checks = ordered_json::object();
    for (const auto& c : results[i]) {
      checks[c.name] = {{"status", to_string(c.status)}, {"detail", c.detail}};
      auto& counts = summary[c.name];
      counts.try_emplace("pass", 0);
      counts.try_emplace("fail", 0);
      counts.try_emplace("skipped", 0);
      ++counts[std::string(to_string(c.status))];
      if (c.detail.starts_with("undecided")) ++undecided;
      if (c.status == CheckStatus::fail) {
        ++failures;
        std::filesystem::create_directories(options.repro_dir);
        const auto file = options.repro_dir / ("repro-" + c.name + "-t" +
                                               std::to_string(tasks[i].t) + "-" +
                                               std::to_string(failures) + ".g6");
        std::ofstream(file) << g6 << '\n';
        err << entry.source << " t=" << tasks[i].t << ": " << c.name << " failed (" << c.detail
            << "); reproducer " << file.string() << '\n';
      }
    }
    record["checks"] = std::move(checks);
    out << record.dump() << '\n';
  }
  ordered_json tail;
  tail["v"] = kReportSchemaVersion;
  ordered_json counts = ordered_json::object();
  for (const auto& [name, c] : summary) counts[name] = c;
  tail["summary"] = {{"instances", tasks.size()},
                     {"failures", failures},
                     {"undecided", undecided},
                     {"checks", std::move(counts)}};
  out << tail.dump() << '\n';
  if (failures > 0) return kExitInconsistent;
  return undecided > 0 ? kExitResourceCap : kExitOk;
}

int cmd_conjecture(const std::vector<CorpusEntry>& corpus, Question question,
                   const RunOptions& options, std::ostream& out, std::ostream& err) {
  struct Outcome {
    bool examined = false;
    ordered_json record;
    bool candidate = false;
    bool undecided = false;
    bool inconsistent = false;
    std::string table_key;
  };
  const auto tasks = tasks_for(corpus, options);
  const auto outcomes = ordered_map<Outcome>(tasks.size(), options.jobs, [&](std::size_t i) {
    const CorpusEntry& entry = corpus[tasks[i].entry];
    const Graph& g = entry.graph;
    const int t = tasks[i].t;
    Outcome o;
    bool hypotheses = false;
    switch (question) {
      case Question::q7_1:
      case Question::q7_2:
        hypotheses = t >= 3 && (question == Question::q7_2 || is_gap_free(g));
        break;
      case Question::q7_4:
        hypotheses = (is_chordal(g) && is_t_gap_free(g, t)) ||
                     (t >= 3 && is_gap_free(g) && is_t_claw_free(g, t));
        break;
    }
    if (!hypotheses) return o;
    o.examined = true;
    const SquarefreeIdeal conn = conn_ideal(g, t);
    auto& rec = o.record;
    rec["v"] = kReportSchemaVersion;
    rec["question"] = to_string(question);
    rec["source"] = entry.source;
    rec["graph6"] = encode_graph6(g);
    rec["t"] = t;
    try {
      if (question == Question::q7_4) {
        const bool vs = is_vertex_splittable(conn, options.search);
        rec["vertex_splittable"] = vs;
        o.candidate = !vs;
      } else {
        const bool lq = find_admissible_order(conn, options.search).has_value();
        rec["lq"] = lq ? "present" : "absent";
        if (question == Question::q7_1) {
          o.candidate = !lq;
        } else {
          const bool tgf = is_t_gap_free(g, t);
          const bool no_cycle = !has_long_induced_cycle(g, t + 2).has_value();
          rec["t_gap_free"] = tgf;
          rec["no_long_induced_cycle"] = no_cycle;
          o.table_key = "t_gap_free=" + std::to_string(tgf) +
                        ",no_long_induced_cycle=" + std::to_string(no_cycle) +
                        ",lq=" + std::to_string(lq);
          // Both conditions are necessary for linear quotients; a record
          // meeting them without linear quotients shows they are not enough.
          o.inconsistent = lq && (!tgf || !no_cycle);
          o.candidate = tgf && no_cycle && !lq;
        }
      }
    } catch (const ResourceLimit& e) {
      rec["undecided"] = e.what();
      o.undecided = true;
    }
    rec["candidate"] = o.candidate;
    return o;
  });

  std::size_t examined = 0;
  std::size_t candidates = 0;
  std::size_t undecided = 0;
  std::map<std::string, std::size_t> table;
  int code = kExitOk;
  for (const auto& o : outcomes) {
    if (!o.examined) continue;
    ++examined;
    candidates += o.candidate ? 1 : 0;
    undecided += o.undecided ? 1 : 0;
    if (!o.table_key.empty()) ++table[o.table_key];
    out << o.record.dump() << '\n';
    if (o.inconsistent) {
      err << o.record["source"].get<std::string>()
          << ": linear quotients without a necessary condition\n";
      if (!options.keep_going) return kExitInconsistent;
      code = kExitInconsistent;
    }
  }
  ordered_json tail;
  tail["v"] = kReportSchemaVersion;
  ordered_json summary;
  summary["question"] = to_string(question);
  summary["instances"] = tasks.size();
  summary["hypotheses_met"] = examined;
  summary["candidates"] = candidates;
  summary["undecided"] = undecided;
  if (question == Question::q7_2) summary["table"] = table;
  tail["summary"] = std::move(summary);
  out << tail.dump() << '\n';
  return code;
}

}  // namespace connideals

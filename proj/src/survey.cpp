#include "groupkit/survey.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "groupkit/checks.hpp"
#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

using ordered_json = nlohmann::ordered_json;

bool known_check(const std::string& name) {
  if (name == "bw" || name == "bs" || name == "main" || name == "focal" ||
      name == "lemma3" || name == "lemma2a" || name == "bw-equiv") {
    return true;
  }
  if (name.rfind("level:", 0) == 0) {
    TheoremSelector::parse(name);
    return true;
  }
  return false;
}

CheckVerdict focal_sweep(const GroupPtr& g) {
  if (!is_soluble(g)) {
    return CheckVerdict::make("focal", false, true, std::nullopt, "group insoluble");
  }
  bool conclusion = true;
  std::string note;
  for (int p : prime_divisors(g->order())) {
    for (int k = 0; k <= 2; ++k) {
      CheckVerdict one = focal_check(g, k, p);
      if (!one.conclusion) {
        conclusion = false;
        if (!note.empty()) note += "; ";
        note += "mismatch at " + one.note;
      } else if (one.note.find("alternative") != std::string::npos) {
        if (!note.empty()) note += "; ";
        note += one.note;
      }
    }
  }
  return CheckVerdict::make("focal", true, conclusion, std::nullopt, std::move(note));
}

CheckVerdict lemma2a_sweep(const GroupPtr& g) {
  bool conclusion = true;
  int instances = 0;
  std::vector<Subgroup> sylows;
  for (int p : prime_divisors(g->order())) sylows.push_back(sylow_subgroup(g, p));
  for (const Subgroup& n : normal_closure_family(g)) {
    for (const Subgroup& a : sylows) {
      if (std::gcd(n.size(), a.size()) != 1) continue;
      ++instances;
      if (!coprime_action_check(g, n, a)) conclusion = false;
    }
  }
  return CheckVerdict::make("lemma2a", true, conclusion, std::nullopt,
                            "instances=" + std::to_string(instances));
}

CheckVerdict evaluate_check(const GroupPtr& g, const std::string& name) {
  if (name == "focal") return focal_sweep(g);
  if (name == "lemma2a") return lemma2a_sweep(g);
  if (name == "lemma3") return lemma3_check(g);
  if (name == "bw-equiv") {
    return CheckVerdict::make("bw-equiv", true, bw_equivalence(g));
  }
  return theorem_check(g, TheoremSelector::parse(name));
}

ordered_json verdict_json(const CheckVerdict& v) {
  ordered_json out;
  out["hypothesis"] = v.hypothesis;
  out["conclusion"] = v.conclusion;
  out["sound"] = v.sound;
  out["open_conjecture"] = v.open_conjecture;
  if (v.witness) {
    out["witness"] = {{"x", v.witness->x},
                      {"y", v.witness->y},
                      {"order_x", v.witness->order_x},
                      {"order_y", v.witness->order_y},
                      {"order_product", v.witness->order_product}};
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

struct GroupTally {
  int verdicts = 0;
  int sound = 0;
  int unsound_proved = 0;
  int candidates = 0;
};

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (const std::string& line : lines) out << line << '\n';
  if (!out) throw IoError("write failed on " + path);
}

}  // namespace

SurveySummary survey(const std::vector<GroupSpec>& corpus, const SurveyOptions& options) {
  for (const std::string& name : options.checks) {
    if (!known_check(name)) throw ParameterError("unknown check '" + name + "'");
  }
  if (options.jobs < 1) throw ParameterError("jobs must be at least 1");

  const size_t count = corpus.size();
  std::vector<std::string> lines(count);
  std::vector<GroupTally> tallies(count);
  std::atomic<size_t> cursor{0};
  std::atomic<bool> abort{false};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto process = [&](size_t i) {
    auto started = std::chrono::steady_clock::now();
    GroupPtr g = realize(corpus[i], options.realize);
    SeriesReport fitting_series = lower_fitting_series(g, options.max_fitting_k);
    Subgroup residual = fitting_series.term_at(1);
    std::optional<int> height = fitting_height(g);

    ordered_json record;
    record["spec"] = corpus[i].to_string();
    record["order"] = g->order();
    record["soluble"] = is_soluble(g);
    record["nilpotent"] = residual.is_trivial();
    record["gamma_inf_order"] = residual.size();
    if (height) {
      record["fitting_height"] = *height;
    } else {
      record["fitting_height"] = "insoluble";
    }
    record["d_series_orders"] = fitting_series.term_orders();

    ordered_json verdicts;
    GroupTally tally;
    for (const std::string& name : options.checks) {
      CheckVerdict v = evaluate_check(g, name);
      verdicts[name] = verdict_json(v);
      ++tally.verdicts;
      if (v.sound) {
        ++tally.sound;
      } else if (v.open_conjecture) {
        ++tally.candidates;
      } else {
        ++tally.unsound_proved;
      }
    }
    record["verdicts"] = std::move(verdicts);

    auto elapsed = std::chrono::steady_clock::now() - started;
    record["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    lines[i] = record.dump();
    tallies[i] = tally;
  };

  auto worker = [&] {
    while (!abort.load()) {
      size_t i = cursor.fetch_add(1);
      if (i >= count) break;
      try {
        process(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        abort.store(true);
      }
    }
  };

  if (options.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int jobs = std::min<int>(options.jobs, static_cast<int>(std::max<size_t>(count, 1)));
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  write_lines(options.out_path, lines);

  SurveySummary summary;
  summary.groups = static_cast<int>(count);
  for (const GroupTally& tally : tallies) {
    summary.verdicts += tally.verdicts;
    summary.sound += tally.sound;
    summary.unsound_proved += tally.unsound_proved;
    summary.candidates += tally.candidates;
  }
  return summary;
}

HuntSummary hunt(const std::vector<GroupSpec>& corpus, const HuntOptions& options) {
  if (options.level < 2 || options.level > 4) {
    throw ParameterError("hunt level must be between 2 and 4");
  }
  TheoremSelector selector{TheoremSelector::Kind::level, options.level};

  HuntSummary summary;
  std::vector<std::string> lines;
  for (const GroupSpec& spec : corpus) {
    GroupPtr g = realize(spec, options.realize);
    CheckVerdict verdict = theorem_check(g, selector);
    ++summary.examined;
    if (!verdict.hypothesis) continue;
    ++summary.hypothesis_holds;

    SeriesReport fitting = lower_fitting_series(g, std::max(8, options.level + 1));
    const Subgroup& dk = fitting.term_at(options.level);
    bool candidate = !verdict.conclusion;
    if (candidate) ++summary.candidates;

    ordered_json record;
    record["spec"] = spec.to_string();
    record["order"] = g->order();
    record["level"] = options.level;
    record["dk_order"] = dk.size();
    record["dk_nilpotent"] = verdict.conclusion;
    record["verdict"] = candidate ? "CANDIDATE COUNTEREXAMPLE" : "ok";
    lines.push_back(record.dump());
  }
  write_lines(options.out_path, lines);
  return summary;
}

}  // namespace groupkit

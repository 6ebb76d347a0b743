#pragma once

#include <string>
#include <vector>

#include "groupkit/corpus.hpp"
#include "groupkit/verdict.hpp"

namespace groupkit {

inline const std::vector<std::string> kAllSurveyChecks = {
    "bw", "bs", "main", "level:2", "level:3", "focal", "lemma3", "lemma2a",
    "bw-equiv"};

struct SurveyOptions {
  std::vector<std::string> checks{"bw", "bs", "main", "bw-equiv"};
  int jobs = 1;
  std::string out_path;  // empty writes nowhere (summary only)
  RealizeOptions realize;
  int max_fitting_k = 8;
};

struct SurveySummary {
  int groups = 0;
  int verdicts = 0;
  int sound = 0;
  int unsound_proved = 0;  // a proved theorem failed: implementation bug
  int candidates = 0;      // an open-conjecture check failed

  int exit_code() const {
    return unsound_proved > 0 ? 2 : candidates > 0 ? 3 : 0;
  }
};

// Runs the named checks over every corpus entry and writes one JSON object
// per group to out_path (JSON Lines, fixed field order). Groups may be
// evaluated on several worker threads; records are still written in corpus
// order, so the output is identical for any jobs value except for the
// elapsed_ms field.
SurveySummary survey(const std::vector<GroupSpec>& corpus, const SurveyOptions& options);

struct HuntOptions {
  int level = 2;  // 2..4
  std::string out_path;
  RealizeOptions realize;
};

struct HuntSummary {
  int examined = 0;
  int hypothesis_holds = 0;
  int candidates = 0;

  int exit_code() const { return candidates > 0 ? 3 : 0; }
};

// Counterexample hunt for the open question at the given level: evaluates
// the level-k check on every corpus entry and records only the groups where
// the hypothesis holds, marking any with a non-nilpotent D_k as a candidate.
HuntSummary hunt(const std::vector<GroupSpec>& corpus, const HuntOptions& options);

}  // namespace groupkit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tdqe/cad.hpp"
#include "tdqe/fme.hpp"

namespace tdqe {

// One row of the comparison harness.
struct StatsRecord {
  std::string instance;
  std::string mode;  // "fme" or "cad"
  std::string strategy;
  std::string policy;
  std::vector<std::string> order;
  std::vector<std::size_t> per_step_counts;
  std::size_t initial = 0;
  std::size_t peak = 0;
  std::size_t final_count = 0;
  std::optional<std::size_t> max_combined_degree;
  double elapsed_ms = 0;
  std::string verdict;
  std::optional<std::size_t> false_step;
  std::optional<std::size_t> td_width;
  std::optional<std::size_t> td_height;
  // Random strategy: how many trials hit the atom cap.
  std::optional<std::size_t> trials;
  std::optional<std::size_t> trials_capped;
};

StatsRecord fme_stats(const FmeTrace& trace, const VarTable& vars, CountPolicy policy);
StatsRecord cad_stats(const CadTrace& trace, const VarTable& vars);

nlohmann::json to_json(const StatsRecord& s);
// Same as to_json without elapsed_ms, for determinism checks.
nlohmann::json to_json_stable(const StatsRecord& s);

}  // namespace tdqe

#include "tdqe/stats.hpp"

namespace tdqe {

namespace {

std::vector<std::string> names(const std::vector<Var>& order, const VarTable& vars) {
  std::vector<std::string> out;
  for (Var v : order) out.push_back(vars.name(v));
  return out;
}

template <typename T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

StatsRecord fme_stats(const FmeTrace& trace, const VarTable& vars, CountPolicy policy) {
  StatsRecord s;
  s.mode = "fme";
  s.policy = to_string(policy);
  s.order = names(trace.order, vars);
  s.per_step_counts = trace.per_step_counts;
  s.initial = trace.initial;
  s.peak = trace.peak;
  s.final_count = trace.final_count;
  s.elapsed_ms = trace.elapsed_ms;
  s.verdict = to_string(trace.verdict);
  s.false_step = trace.false_step;
  return s;
}

StatsRecord cad_stats(const CadTrace& trace, const VarTable& vars) {
  StatsRecord s;
  s.mode = "cad";
  s.policy = "canonical";
  s.order = names(trace.order, vars);
  s.per_step_counts = trace.per_step_counts;
  s.initial = trace.initial;
  s.peak = trace.peak;
  s.final_count = trace.final_count;
  s.max_combined_degree = trace.max_combined_degree;
  s.elapsed_ms = trace.elapsed_ms;
  s.verdict = "open";
  return s;
}

nlohmann::json to_json_stable(const StatsRecord& s) {
  return nlohmann::json{{"instance", s.instance},
                        {"mode", s.mode},
                        {"strategy", s.strategy},
                        {"policy", s.policy},
                        {"order", s.order},
                        {"per_step_counts", s.per_step_counts},
                        {"initial", s.initial},
                        {"peak", s.peak},
                        {"final", s.final_count},
                        {"max_combined_degree", opt(s.max_combined_degree)},
                        {"verdict", s.verdict},
                        {"false_step", opt(s.false_step)},
                        {"td_width", opt(s.td_width)},
                        {"td_height", opt(s.td_height)},
                        {"trials", opt(s.trials)},
                        {"trials_capped", opt(s.trials_capped)}};
}

nlohmann::json to_json(const StatsRecord& s) {
  nlohmann::json j = to_json_stable(s);
  j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

}  // namespace tdqe

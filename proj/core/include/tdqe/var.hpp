#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tdqe {

// A variable is its stable index into a VarTable. Comparison follows the
// index, which is also the tie-breaking key used by every heuristic.
struct Var {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Var, Var) = default;
};

class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(const std::vector<std::string>& names);

  // Returns the existing variable for `name` or appends a new one.
  Var intern(std::string_view name);
  std::optional<Var> find(std::string_view name) const;

  const std::string& name(Var v) const { return names_.at(v.index); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  // Fresh table with x1..xn.
  static VarTable numbered(std::size_t n, std::string_view prefix = "x");

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Var> by_name_;
};

}  // namespace tdqe

template <>
struct std::hash<tdqe::Var> {
  std::size_t operator()(tdqe::Var v) const noexcept { return std::hash<std::uint32_t>{}(v.index); }
};

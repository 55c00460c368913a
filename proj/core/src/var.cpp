#include "tdqe/var.hpp"

#include <stdexcept>

namespace tdqe {

VarTable::VarTable(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (find(n)) throw std::invalid_argument("duplicate variable name: " + n);
    intern(n);
  }
}

Var VarTable::intern(std::string_view name) {
  std::string key(name);
  if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
  Var v{static_cast<std::uint32_t>(names_.size())};
  names_.push_back(key);
  by_name_.emplace(std::move(key), v);
  return v;
}

std::optional<Var> VarTable::find(std::string_view name) const {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) return it->second;
  return std::nullopt;
}

VarTable VarTable::numbered(std::size_t n, std::string_view prefix) {
  VarTable t;
  for (std::size_t i = 1; i <= n; ++i) t.intern(std::string(prefix) + std::to_string(i));
  return t;
}

}  // namespace tdqe

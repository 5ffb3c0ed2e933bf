#include "galring/arith/variables.hpp"

#include <set>

#include "galring/arith/monomial.hpp"
#include "galring/error.hpp"

namespace galring {

VariableTable::VariableTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxVariables) {
    fail(ErrorKind::Parameter, "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.name.empty()) fail(ErrorKind::Parameter, "empty variable name");
    if (!seen.insert(e.name).second) fail(ErrorKind::Parameter, "duplicate variable name '" + e.name + "'");
  }
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> VariableTable::indices(VariableRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].role == role) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> VariableTable::non_parameters() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].role != VariableRole::Parameter) out.push_back(i);
  }
  return out;
}

bool VariableTable::operator==(const VariableTable& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name != other.entries_[i].name || entries_[i].role != other.entries_[i].role) return false;
  }
  return true;
}

TablePtr make_table(std::vector<VariableTable::Entry> entries) {
  return std::make_shared<const VariableTable>(std::move(entries));
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace galring

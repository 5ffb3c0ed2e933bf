#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galring {

enum class VariableRole {
  Acted,      // moved by the monoid action
  Fixed,      // polynomial variable fixed by every automorphism
  Parameter,  // transcendental parameter (q, s, ...), fixed by everything
};

// Ordered variable names with their role. The order is the term-order
// variable order (x_1 > x_2 > ... under grlex).
class VariableTable {
 public:
  struct Entry {
    std::string name;
    VariableRole role;
  };

  explicit VariableTable(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  const std::string& name(std::size_t i) const { return entries_.at(i).name; }
  VariableRole role(std::size_t i) const { return entries_.at(i).role; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  std::vector<std::size_t> indices(VariableRole role) const;
  // Acted and fixed variables, in table order.
  std::vector<std::size_t> non_parameters() const;

  bool operator==(const VariableTable& other) const;

 private:
  std::vector<Entry> entries_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<VariableTable::Entry> entries);

// True when both tables are the same object or have identical entries.
bool same_table(const TablePtr& a, const TablePtr& b);

}  // namespace galring

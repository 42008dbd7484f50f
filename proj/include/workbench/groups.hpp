#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "workbench/errors.hpp"

namespace wb {

// Finite group with a validated Cayley table. Elements are dense indices;
// names are presentation-specific and used by configs and reports.
class FiniteGroup {
 public:
  // table[a][b] is the index of a*b. Throws NotAGroup unless the table is a
  // Latin square with identity, inverses, and full associativity.
  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<std::vector<std::size_t>> table);

  // Z/n with names 1, g, g^2, ...
  static FiniteGroup cyclic(std::size_t n);
  // Order 2n generated by two involutions a, b with (ba)^n = 1. Element names
  // are the shortest words in a, b (breadth-first, a before b).
  static FiniteGroup dihedral_reflections(std::size_t n);
  // 1, -1, i, -i, j, -j, k, -k
  static FiniteGroup quaternion8();
  // Direct product; element names are "(x,y)".
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const { return names_.size(); }
  std::size_t identity() const { return id_; }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a * order() + b];
  }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t power(std::size_t a, long e) const;
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Throws UnknownElement for names not in the table.
  std::size_t element(const std::string& name) const;

  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  // Sorted element indices of the subgroup generated by gens (identity for an
  // empty generating set).
  std::vector<std::size_t> subgroup_generated(
      const std::vector<std::size_t>& gens) const;

 private:
  FiniteGroup() = default;
  std::vector<std::string> names_;
  std::vector<std::size_t> table_;  // row-major order() x order()
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
};

}  // namespace wb

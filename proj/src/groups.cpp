#include "workbench/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace wb {

FiniteGroup FiniteGroup::from_table(
    std::vector<std::string> names,
    std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = names.size();
  if (n == 0) throw NotAGroup("a group needs at least one element");
  if (std::set<std::string>(names.begin(), names.end()).size() != n)
    throw NotAGroup("element names are not distinct");
  if (table.size() != n)
    throw NotAGroup("multiplication table must have one row per element");
  for (const auto& row : table) {
    if (row.size() != n)
      throw NotAGroup("multiplication table must be square");
    for (std::size_t v : row)
      if (v >= n) throw NotAGroup("table entry out of range");
  }
  // Latin square: rows and columns are permutations.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[table[i][j]])
        throw NotAGroup("row " + names[i] + " repeats an element");
      if (col_seen[table[j][i]])
        throw NotAGroup("column " + names[i] + " repeats an element");
      row_seen[table[i][j]] = true;
      col_seen[table[j][i]] = true;
    }
  }
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) id = e;
  }
  if (id == n) throw NotAGroup("no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAGroup("associativity fails at (" + names[a] + ", " +
                          names[b] + ", " + names[c] + ")");
  FiniteGroup g;
  g.names_ = std::move(names);
  g.id_ = id;
  g.table_.resize(n * n);
  g.inv_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      g.table_[a * n + b] = table[a][b];
      if (table[a][b] == id && table[b][a] == id) g.inv_[a] = b;
    }
  for (std::size_t a = 0; a < n; ++a)
    if (g.inv_[a] == n) throw NotAGroup("element " + g.names_[a] +
                                        " has no two-sided inverse");
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw NotAGroup("cyclic group order must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      names.push_back("1");
    else if (i == 1)
      names.push_back("g");
    else
      names.push_back("g^" + std::to_string(i));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return from_table(std::move(names), std::move(table));
}

namespace {

// Dihedral element a^eps * r^k with r = b*a of order n, encoded eps*n + k.
std::size_t dihedral_mul(std::size_t n, std::size_t x, std::size_t y) {
  std::size_t e1 = x / n, k1 = x % n;
  std::size_t e2 = y / n, k2 = y % n;
  if (e2 == 0) return e1 * n + (k1 + k2) % n;
  return (e1 ^ 1) * n + (k2 + n - k1) % n;
}

}  // namespace

FiniteGroup FiniteGroup::dihedral_reflections(std::size_t n) {
  if (n == 0) throw NotAGroup("rotation order must be positive");
  const std::size_t a = n;                      // (1, 0)
  const std::size_t b = n + (n - 1) % n;        // (1, n-1), so b*a = r
  // Name every element by its shortest word in a, b (a first on ties).
  std::vector<std::size_t> disc;                 // encoded, in discovery order
  std::map<std::size_t, std::size_t> index;
  std::deque<std::pair<std::size_t, std::string>> queue;
  auto visit = [&](std::size_t enc, const std::string& word) {
    if (index.count(enc)) return;
    index[enc] = disc.size();
    disc.push_back(enc);
    queue.emplace_back(enc, word);
  };
  visit(0, "1");
  std::vector<std::string> names = {"1"};
  while (!queue.empty()) {
    auto [enc, word] = queue.front();
    queue.pop_front();
    const std::pair<std::size_t, char> gens[] = {{a, 'a'}, {b, 'b'}};
    for (const auto& [gen, letter] : gens) {
      std::size_t next = dihedral_mul(n, enc, gen);
      if (index.count(next)) continue;
      std::string next_word = (word == "1") ? std::string(1, letter)
                                            : word + letter;
      visit(next, next_word);
      names.push_back(next_word);
    }
  }
  const std::size_t order = disc.size();
  std::vector<std::vector<std::size_t>> table(order,
                                              std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table[i][j] = index.at(dihedral_mul(n, disc[i], disc[j]));
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::quaternion8() {
  // index = 2*axis + sign, axes 1, i, j, k
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto unit_mul = [](std::size_t s, std::size_t t) -> std::pair<std::size_t, std::size_t> {
    if (s == 0) return {t, 0};
    if (t == 0) return {s, 0};
    if (s == t) return {0, 1};
    // cyclic i->j->k->i is positive
    if ((s % 3) + 1 == t) return {6 - s - t, 0};
    return {6 - s - t, 1};
  };
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      auto [axis, flip] = unit_mul(x / 2, y / 2);
      table[x][y] = 2 * axis + ((x ^ y ^ flip) & 1);
    }
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < nh; ++j)
      names.push_back("(" + g.name(i) + "," + h.name(j) + ")");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x][y] =
          g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  return from_table(std::move(names), std::move(table));
}

std::size_t FiniteGroup::power(std::size_t a, long e) const {
  std::size_t base = e >= 0 ? a : inverse(a);
  std::size_t out = id_;
  for (long i = 0, m = std::labs(e); i < m; ++i) out = mul(out, base);
  return out;
}

std::size_t FiniteGroup::element(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw UnknownElement("no group element named '" + name + "'");
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t x = a, k = 1;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::subgroup_generated(
    const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> seen = {id_};
  std::deque<std::size_t> queue = {id_};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t gen : gens) {
      std::size_t next = mul(x, gen);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<std::size_t>(seen.begin(), seen.end());
}

}  // namespace wb

#include "hopfkit/groups.hpp"

#include "hopfkit/hopf_algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace hopfkit {

FiniteGroup FiniteGroup::from_table(Table table, std::vector<std::string> labels, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw StructureError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw StructureError("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw StructureError("group table entry out of range");
    }
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  const auto& t = g.table_;

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw StructureError("group table has no identity");

  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t[a][b] == g.identity_) {
        if (t[b][a] != g.identity_) throw StructureError("group table: one-sided inverse");
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] == n) throw StructureError("group table: element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          throw StructureError("group table not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
        }
      }
    }
  }
  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  }
  if (labels.size() != n) throw StructureError("group labels have the wrong length");
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw StructureError("cyclic group of order 0");
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    labels.push_back(i == 0 ? "1" : i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return from_table(std::move(t), std::move(labels), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  if (k == 0 || k > 5) throw StructureError("symmetric group supported for 1 <= k <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = "[";
    for (std::size_t i = 0; i < k; ++i) l += std::to_string(perms[a][i] + 1);
    labels.push_back(l + "]");
    for (std::size_t b = 0; b < n; ++b) {
      // (a b)(i) = a(b(i))
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(t), std::move(labels), "S" + std::to_string(k));
}

FiniteGroup FiniteGroup::semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r) {
  if (n == 0 || m == 0) throw StructureError("semidirect product of an empty factor");
  std::size_t rm = 1;
  for (std::size_t i = 0; i < m; ++i) rm = rm * r % n;
  if (rm != 1 % n) throw StructureError("r^m != 1 mod n: not an action");
  std::vector<std::size_t> rpow(m, 1 % n);
  for (std::size_t j = 1; j < m; ++j) rpow[j] = rpow[j - 1] * r % n;
  const std::size_t order = n * m;
  Table t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, j = x / n;
    std::string l;
    if (i) l += i == 1 ? "a" : "a^" + std::to_string(i);
    if (j) l += j == 1 ? "b" : "b^" + std::to_string(j);
    labels.push_back(l.empty() ? "1" : l);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, l2 = y / n;
      // a^i b^j a^k b^l = a^(i + r^j k) b^(j + l)
      t[x][y] = (i + rpow[j] * k) % n + n * ((j + l2) % m);
    }
  }
  return from_table(std::move(t), std::move(labels),
                    "Z" + std::to_string(n) + "xZ" + std::to_string(m));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  Table t(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.labels_[x % na] + "," + b.labels_[x / na] + ")");
    for (std::size_t y = 0; y < na * nb; ++y) {
      t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
    }
  }
  return from_table(std::move(t), std::move(labels), a.name_ + "x" + b.name_);
}

FiniteGroup FiniteGroup::builtin(std::string_view name) {
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  if (name == "Z7xZ3") return semidirect_cyclic(7, 3, 2);
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') throw StructureError("unknown built-in group: " + std::string(name));
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 4096) throw StructureError("built-in cyclic group too large");
    }
    return cyclic(n);
  }
  throw StructureError("unknown built-in group: " + std::string(name));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<std::size_t> FiniteGroup::closure(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::deque<std::size_t> queue{identity_};
  in[identity_] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t g : gens) {
      const std::size_t y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < order(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& subset) const {
  if (subset.empty()) return false;
  std::vector<bool> in(order(), false);
  for (std::size_t s : subset) {
    if (s >= order()) return false;
    in[s] = true;
  }
  if (!in[identity_]) return false;
  for (std::size_t a : subset) {
    for (std::size_t b : subset) {
      if (!in[mul(a, inv(b))]) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> FiniteGroup::normality_witness(
    const std::vector<std::size_t>& subgroup) const {
  std::vector<bool> in(order(), false);
  for (std::size_t s : subgroup) in[s] = true;
  for (std::size_t g = 0; g < order(); ++g) {
    for (std::size_t s : subgroup) {
      if (!in[conjugate(g, s)]) return std::make_pair(g, s);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> FiniteGroup::subgroups() const {
  if (order() > kMaxEnumeratedGroupOrder) {
    throw StructureError("subgroup enumeration refused: order " + std::to_string(order()) + " exceeds " +
                         std::to_string(kMaxEnumeratedGroupOrder));
  }
  std::set<std::vector<std::size_t>> found;
  std::deque<std::vector<std::size_t>> queue;
  auto trivial = closure({});
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const auto h = queue.front();
    queue.pop_front();
    std::vector<bool> in(order(), false);
    for (std::size_t s : h) in[s] = true;
    for (std::size_t g = 0; g < order(); ++g) {
      if (in[g]) continue;
      std::vector<std::size_t> gens = h;
      gens.push_back(g);
      auto c = closure(gens);
      if (found.insert(c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    std::set<std::size_t> cls;
    for (std::size_t g = 0; g < order(); ++g) cls.insert(conjugate(g, a));
    for (std::size_t c : cls) seen[c] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<std::size_t> FiniteGroup::centralizer(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < order(); ++g) {
    if (mul(g, a) == mul(a, g)) out.push_back(g);
  }
  return out;
}

FiniteGroup FiniteGroup::restrict_to(const std::vector<std::size_t>& subgroup) const {
  if (!is_subgroup(subgroup)) throw StructureError("restrict_to: subset is not a subgroup");
  std::vector<std::size_t> pos(order(), order());
  for (std::size_t i = 0; i < subgroup.size(); ++i) pos[subgroup[i]] = i;
  Table t(subgroup.size(), std::vector<std::size_t>(subgroup.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    labels.push_back(labels_[subgroup[i]]);
    for (std::size_t j = 0; j < subgroup.size(); ++j) t[i][j] = pos[mul(subgroup[i], subgroup[j])];
  }
  return from_table(std::move(t), std::move(labels), name_.empty() ? std::string() : "subgroup of " + name_);
}

std::vector<std::size_t> FiniteGroup::generators() const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span = closure({});
  for (std::size_t a = 0; a < order() && span.size() < order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = closure(gens);
  }
  return gens;
}

std::vector<std::vector<std::size_t>> homomorphisms(const FiniteGroup& src, const FiniteGroup& dst) {
  const std::vector<std::size_t> gens = src.generators();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> images(gens.size(), 0);
  const std::size_t n = src.order();
  while (true) {
    // Extend along words in the generators; reject on any inconsistency.
    std::vector<std::size_t> phi(n, dst.order());
    phi[src.identity()] = dst.identity();
    std::deque<std::size_t> queue{src.identity()};
    bool ok = true;
    while (!queue.empty() && ok) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t y = src.mul(x, gens[k]);
        const std::size_t v = dst.mul(phi[x], images[k]);
        if (phi[y] == dst.order()) {
          phi[y] = v;
          queue.push_back(y);
        } else if (phi[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) ok = phi[src.mul(a, b)] == dst.mul(phi[a], phi[b]);
      }
    }
    if (ok) out.push_back(phi);
    std::size_t k = images.size();
    while (k > 0 && ++images[k - 1] == dst.order()) images[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace hopfkit

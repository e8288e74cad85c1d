#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <set>

namespace hopfkit::testing {

namespace {

using Table = std::vector<std::vector<std::size_t>>;
using Cplx = std::complex<double>;

struct Group {
  const Table& t;
  std::size_t id = 0;
  std::vector<std::size_t> inv;

  explicit Group(const Table& table) : t(table) {
    const std::size_t n = t.size();
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = t[e][x] == x;
      if (ok) id = e;
    }
    inv.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (t[x][y] == id) inv[x] = y;
      }
    }
  }

  std::set<std::size_t> closure(const std::vector<std::size_t>& gens) const {
    std::set<std::size_t> s{id};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x : std::vector<std::size_t>(s.begin(), s.end())) {
        for (std::size_t g : gens) grew |= s.insert(t[x][g]).second;
      }
    }
    return s;
  }
};

/// Solutions of a homomorphism-type problem on a finitely generated abelian
/// structure: assign every generator a value in Z_e, propagate, keep the
/// consistent ones.
std::vector<std::vector<std::size_t>> characters_of(const Group& g, const std::vector<std::size_t>& sub,
                                                    std::size_t e) {
  std::vector<std::size_t> gens;
  std::set<std::size_t> reached{g.id};
  for (std::size_t x : sub) {
    if (!reached.count(x)) {
      gens.push_back(x);
      reached = g.closure(gens);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> vals(gens.size(), 0);
  const std::size_t n = g.t.size();
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k < gens.size()) {
      for (std::size_t v = 0; v < e; ++v) {
        vals[k] = v;
        rec(k + 1);
      }
      return;
    }
    std::vector<long> chi(n, -1);
    chi[g.id] = 0;
    std::vector<std::size_t> queue{g.id};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t y = g.t[queue[q]][gens[i]];
        const long v = static_cast<long>((chi[queue[q]] + vals[i]) % e);
        if (chi[y] < 0) {
          chi[y] = v;
          queue.push_back(y);
        } else if (chi[y] != v) {
          return;
        }
      }
    }
    for (std::size_t a : sub) {
      for (std::size_t b : sub) {
        if (chi[g.t[a][b]] != static_cast<long>((chi[a] + chi[b]) % e)) return;
      }
    }
    std::vector<std::size_t> c;
    for (std::size_t a : sub) c.push_back(static_cast<std::size_t>(chi[a]));
    out.push_back(c);
  };
  rec(0);
  return out;
}

}  // namespace

std::size_t census_oracle(const Table& table) {
  const Group g(table);
  const std::size_t n = table.size();

  std::set<std::vector<std::size_t>> subgroups;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::set<std::size_t> s = g.closure({a, b});
      subgroups.insert(std::vector<std::size_t>(s.begin(), s.end()));
    }
  }

  std::vector<std::vector<Cplx>> found;
  for (const std::vector<std::size_t>& sub : subgroups) {
    bool abelian = true;
    bool normal = true;
    for (std::size_t a : sub) {
      for (std::size_t b : sub) abelian &= table[a][b] == table[b][a];
      for (std::size_t x = 0; x < n; ++x) {
        normal &= std::binary_search(sub.begin(), sub.end(), table[table[x][a]][g.inv[x]]);
      }
    }
    if (!abelian || !normal) continue;

    const std::size_t m = sub.size();
    std::size_t e = 1;
    for (std::size_t a : sub) {
      std::size_t k = 1;
      for (std::size_t p = a; p != g.id; p = table[p][a]) ++k;
      e = std::lcm(e, k);
    }
    const std::vector<std::vector<std::size_t>> chars = characters_of(g, sub, e);
    if (chars.size() != m) return 0;

    auto index_of = [&](const std::vector<std::size_t>& c) {
      return static_cast<std::size_t>(std::find(chars.begin(), chars.end(), c) - chars.begin());
    };
    std::vector<std::vector<std::size_t>> add(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::size_t> s(m);
        for (std::size_t k = 0; k < m; ++k) s[k] = (chars[i][k] + chars[j][k]) % e;
        add[i][j] = index_of(s);
      }
    }
    // conjugation action on characters: (x . chi)(a) = chi(x^-1 a x)
    std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> c(m);
        for (std::size_t k = 0; k < m; ++k) {
          const std::size_t y = table[table[g.inv[x]][sub[k]]][x];
          c[k] = chars[i][static_cast<std::size_t>(std::lower_bound(sub.begin(), sub.end(), y) - sub.begin())];
        }
        act[x][i] = index_of(c);
      }
    }

    // generators of the character group and one word for every character
    std::vector<std::size_t> gens;
    std::vector<std::vector<std::size_t>> coef(m);
    auto span = [&] {
      std::vector<std::vector<std::size_t>> c(m);
      c[0] = std::vector<std::size_t>(gens.size(), 0);
      std::vector<std::size_t> queue{0};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const std::size_t y = add[queue[q]][gens[i]];
          if (c[y].empty()) {
            c[y] = c[queue[q]];
            c[y][i] = (c[y][i] + 1) % e;
            queue.push_back(y);
          }
        }
      }
      return c;
    };
    coef = span();
    for (std::size_t i = 1; i < m; ++i) {
      if (coef[i].empty()) {
        gens.push_back(i);
        coef = span();
      }
    }

    const std::size_t k = gens.size();
    std::vector<std::size_t> beta_gen(k * k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos < k * k) {
        for (std::size_t v = 0; v < e; ++v) {
          beta_gen[pos] = v;
          rec(pos + 1);
        }
        return;
      }
      std::vector<std::vector<std::size_t>> beta(m, std::vector<std::size_t>(m, 0));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          std::size_t s = 0;
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) s += coef[a][i] * coef[b][j] * beta_gen[i * k + j];
          }
          beta[a][b] = s % e;
        }
      }
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t c = 0; c < m; ++c) {
            if (beta[add[a][b]][c] != (beta[a][c] + beta[b][c]) % e) return;
            if (beta[c][add[a][b]] != (beta[c][a] + beta[c][b]) % e) return;
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            if (beta[act[x][a]][act[x][b]] != beta[a][b]) return;
          }
        }
      }
      std::vector<Cplx> r(n * n, 0.0);
      const double w = 2.0 * std::acos(-1.0) / static_cast<double>(e);
      for (std::size_t ia = 0; ia < m; ++ia) {
        for (std::size_t ib = 0; ib < m; ++ib) {
          Cplx s = 0.0;
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t d = 0; d < m; ++d) {
              const double ex = static_cast<double>(beta[c][d]) - static_cast<double>(chars[c][ia]) -
                                static_cast<double>(chars[d][ib]);
              s += std::polar(1.0, w * ex);
            }
          }
          r[sub[ia] * n + sub[ib]] = s / static_cast<double>(m * m);
        }
      }
      for (const std::vector<Cplx>& old : found) {
        double diff = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) diff = std::max(diff, std::abs(old[i] - r[i]));
        if (diff < 1e-9) return;
      }
      found.push_back(std::move(r));
    };
    rec(0);
  }
  return found.size();
}

std::vector<Vec> small_grouplikes_oracle(const FiniteDimHopf& h) {
  const std::size_t n = h.dim();
  std::vector<Vec> out;
  Vec v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < n) {
      for (int c : {-1, 0, 1}) {
        v[i] = CycloScalar(c);
        rec(i + 1);
      }
      return;
    }
    if (h.epsilon(v).is_one() && h.comultiply(v) == TensorElement::outer(v, v)) out.push_back(v);
  };
  rec(0);
  return out;
}

}  // namespace hopfkit::testing

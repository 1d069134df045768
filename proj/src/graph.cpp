#include "gp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "gp/error.hpp"

namespace gp {

  SimplicialGraph::SimplicialGraph(std::vector<std::string> names)
      : names_(std::move(names)), adj_(names_.size() * names_.size(), 0) {
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw InputError("duplicate vertex id \"" + *dup + "\"");
    }
  }

  SimplicialGraph SimplicialGraph::from_edges(
      std::vector<std::string>                       names,
      std::span<const std::pair<VertexId, VertexId>> edges) {
    SimplicialGraph g(std::move(names));
    for (auto [u, v] : edges) {
      g.add_edge(u, v);
    }
    return g;
  }

  void SimplicialGraph::check_vertex(VertexId v) const {
    if (v >= names_.size()) {
      throw InputError("unknown vertex id " + std::to_string(v));
    }
  }

  std::string const& SimplicialGraph::name(VertexId v) const {
    check_vertex(v);
    return names_[v];
  }

  std::optional<VertexId> SimplicialGraph::find(std::string const& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<VertexId>(it - names_.begin());
  }

  VertexId SimplicialGraph::id(std::string const& name) const {
    auto v = find(name);
    if (!v) {
      throw InputError("unknown vertex \"" + name + "\"");
    }
    return *v;
  }

  void SimplicialGraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw InputError("loop edge at vertex \"" + names_[u] + "\"");
    }
    std::size_t n = names_.size();
    if (adj_[u * n + v] != 0) {
      throw InputError("duplicate edge {" + names_[u] + ", " + names_[v]
                       + "}");
    }
    adj_[u * n + v] = 1;
    adj_[v * n + u] = 1;
    ++edge_count_;
  }

  std::vector<std::pair<VertexId, VertexId>> SimplicialGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < size(); ++u) {
      for (VertexId v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  namespace {
    VertexSet normalized(SimplicialGraph const& g, VertexSet s) {
      for (VertexId v : s) {
        g.check_vertex(v);
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }

    // Is the vertex sequence an induced cycle of g (every vertex has exactly
    // two neighbours inside the set, and the set is connected)?
    bool is_induced_cycle(SimplicialGraph const& g, VertexSet const& s) {
      if (s.size() < 3) {
        return false;
      }
      for (VertexId v : s) {
        std::size_t deg = 0;
        for (VertexId w : s) {
          deg += g.adjacent(v, w);
        }
        if (deg != 2) {
          return false;
        }
      }
      // 2-regular: connected iff a walk from s[0] visits everything
      std::size_t visited = 1;
      VertexId    prev = s[0], cur = s[0];
      for (VertexId w : s) {
        if (g.adjacent(s[0], w)) {
          cur = w;
          break;
        }
      }
      while (cur != s[0]) {
        ++visited;
        for (VertexId w : s) {
          if (w != prev && g.adjacent(cur, w)) {
            prev = cur;
            cur  = w;
            break;
          }
        }
      }
      return visited == s.size();
    }

    std::vector<VertexId> cycle_order(SimplicialGraph const& g,
                                      VertexSet const&       s) {
      std::vector<VertexId> order{s[0]};
      VertexId              prev = s[0];
      VertexId              cur  = s[0];
      for (VertexId w : s) {
        if (g.adjacent(cur, w)) {
          cur = w;
          break;
        }
      }
      while (cur != s[0]) {
        order.push_back(cur);
        for (VertexId w : s) {
          if (w != prev && g.adjacent(cur, w)) {
            prev = cur;
            cur  = w;
            break;
          }
        }
      }
      return order;
    }

    // Smallest induced cycle of length >= min_len by subset enumeration
    // ordered by size, then lexicographically.
    std::optional<std::vector<VertexId>>
    brute_force_cycle(SimplicialGraph const& g,
                      std::size_t            min_len,
                      std::size_t            max_len) {
      std::size_t n = g.size();
      max_len       = std::min(max_len, n);
      for (std::size_t k = min_len; k <= max_len; ++k) {
        // iterate k-combinations in lexicographic order
        std::vector<VertexId> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
          if (is_induced_cycle(g, comb)) {
            return canonical_cycle(cycle_order(g, comb));
          }
          std::size_t i = k;
          while (i > 0 && comb[i - 1] == n - k + i - 1) {
            --i;
          }
          if (i == 0) {
            break;
          }
          ++comb[i - 1];
          for (std::size_t j = i; j < k; ++j) {
            comb[j] = comb[j - 1] + 1;
          }
        }
      }
      return std::nullopt;
    }

    // Any induced cycle of length >= 4, found through a vertex v with two
    // non-adjacent neighbours joined by a path that avoids the rest of N[v].
    std::optional<std::vector<VertexId>>
    search_long_cycle(SimplicialGraph const& g) {
      std::size_t n = g.size();
      for (VertexId v = 0; v < n; ++v) {
        VertexSet nb = link(g, v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            VertexId u = nb[i], w = nb[j];
            if (g.adjacent(u, w)) {
              continue;
            }
            std::vector<bool> blocked(n, false);
            blocked[v] = true;
            for (VertexId x : nb) {
              blocked[x] = (x != u && x != w);
            }
            std::vector<std::int64_t> parent(n, -1);
            std::queue<VertexId>      q;
            q.push(u);
            parent[u] = u;
            while (!q.empty() && parent[w] < 0) {
              VertexId x = q.front();
              q.pop();
              for (VertexId y = 0; y < n; ++y) {
                if (!blocked[y] && parent[y] < 0 && g.adjacent(x, y)) {
                  parent[y] = x;
                  q.push(y);
                }
              }
            }
            if (parent[w] < 0) {
              continue;
            }
            std::vector<VertexId> cyc{v};
            for (VertexId x = w; x != u; x = static_cast<VertexId>(parent[x])) {
              cyc.push_back(x);
            }
            cyc.push_back(u);
            return canonical_cycle(std::move(cyc));
          }
        }
      }
      return std::nullopt;
    }

    constexpr std::size_t brute_force_limit = 12;
  }  // namespace

  InducedSubgraph induced_subgraph(SimplicialGraph const& g, VertexSet subset) {
    subset = normalized(g, std::move(subset));
    std::vector<std::string> names;
    names.reserve(subset.size());
    for (VertexId v : subset) {
      names.push_back(g.name(v));
    }
    SimplicialGraph h(std::move(names));
    for (VertexId i = 0; i < subset.size(); ++i) {
      for (VertexId j = i + 1; j < subset.size(); ++j) {
        if (g.adjacent(subset[i], subset[j])) {
          h.add_edge(i, j);
        }
      }
    }
    return {std::move(h), std::move(subset)};
  }

  VertexSet link(SimplicialGraph const& g, VertexId v) {
    g.check_vertex(v);
    VertexSet out;
    for (VertexId w = 0; w < g.size(); ++w) {
      if (g.adjacent(v, w)) {
        out.push_back(w);
      }
    }
    return out;
  }

  bool is_clique(SimplicialGraph const& g, VertexSet const& subset) {
    VertexSet s = normalized(g, subset);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!g.adjacent(s[i], s[j])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
    if (cycle.empty()) {
      return cycle;
    }
    auto        best = cycle;
    std::size_t m    = cycle.size();
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < m; ++r) {
        std::vector<VertexId> cand(m);
        for (std::size_t i = 0; i < m; ++i) {
          cand[i] = dir == 0 ? cycle[(r + i) % m] : cycle[(r + m - i) % m];
        }
        best = std::min(best, cand);
      }
    }
    return best;
  }

  std::optional<std::vector<VertexId>>
  has_induced_cycle_ge(SimplicialGraph const& g, CycleLength kind) {
    if (kind == CycleLength::exactly_4) {
      return brute_force_cycle(g, 4, 4);
    }
    if (g.size() <= brute_force_limit) {
      return brute_force_cycle(g, 4, g.size());
    }
    if (is_chordal_lex_bfs(g)) {
      return std::nullopt;
    }
    return search_long_cycle(g);
  }

  bool is_chordal_brute_force(SimplicialGraph const& g) {
    if (g.size() > 24) {
      throw ResourceError("brute-force chordality limited to 24 vertices");
    }
    return !brute_force_cycle(g, 4, g.size()).has_value();
  }

  std::vector<VertexId> lex_bfs_order(SimplicialGraph const& g) {
    // Partition refinement: an ordered list of cells, visiting the first
    // vertex of the first cell and splitting each cell into neighbours
    // (moved in front) and non-neighbours.
    std::size_t                        n = g.size();
    std::vector<std::vector<VertexId>> cells;
    if (n > 0) {
      cells.emplace_back(n);
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!cells.empty()) {
      VertexId v = cells.front().front();
      cells.front().erase(cells.front().begin());
      if (cells.front().empty()) {
        cells.erase(cells.begin());
      }
      order.push_back(v);
      std::vector<std::vector<VertexId>> next;
      for (auto& cell : cells) {
        std::vector<VertexId> in, out;
        for (VertexId w : cell) {
          (g.adjacent(v, w) ? in : out).push_back(w);
        }
        if (!in.empty()) {
          next.push_back(std::move(in));
        }
        if (!out.empty()) {
          next.push_back(std::move(out));
        }
      }
      cells = std::move(next);
    }
    return order;
  }

  bool is_chordal_lex_bfs(SimplicialGraph const& g) {
    // The reverse of a LexBFS order is a perfect elimination ordering iff g
    // is chordal. Check: for each v, its neighbours visited earlier, minus
    // the latest one u, must all be adjacent to u.
    auto                     order = lex_bfs_order(g);
    std::size_t              n     = g.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[order[i]] = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
      VertexId              v = order[i];
      std::vector<VertexId> earlier;
      for (VertexId w = 0; w < n; ++w) {
        if (g.adjacent(v, w) && pos[w] < i) {
          earlier.push_back(w);
        }
      }
      if (earlier.size() < 2) {
        continue;
      }
      VertexId u = *std::max_element(
          earlier.begin(), earlier.end(), [&](VertexId a, VertexId b) {
            return pos[a] < pos[b];
          });
      for (VertexId w : earlier) {
        if (w != u && !g.adjacent(u, w)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_proper(SimplicialGraph const& g, Coloring const& c) {
    if (c.color.size() != g.size()) {
      return false;
    }
    for (auto col : c.color) {
      if (col >= c.num_colors) {
        return false;
      }
    }
    for (auto [u, v] : g.edges()) {
      if (c.color[u] == c.color[v]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    struct ColoringSearch {
      SimplicialGraph const&     g;
      std::uint32_t              k;
      std::vector<std::int32_t>  color;

      // DSATUR-style branching: colour the uncoloured vertex with the most
      // distinct neighbour colours next; new colours only in increasing
      // order to skip symmetric branches.
      bool run(std::size_t coloured, std::uint32_t used) {
        std::size_t n = g.size();
        if (coloured == n) {
          return true;
        }
        std::int64_t best = -1, best_sat = -1, best_deg = -1;
        for (VertexId v = 0; v < n; ++v) {
          if (color[v] >= 0) {
            continue;
          }
          std::vector<bool> seen(k, false);
          std::int64_t      sat = 0, deg = 0;
          for (VertexId w = 0; w < n; ++w) {
            if (!g.adjacent(v, w)) {
              continue;
            }
            if (color[w] < 0) {
              ++deg;
            } else if (!seen[color[w]]) {
              seen[color[w]] = true;
              ++sat;
            }
          }
          if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v, best_sat = sat, best_deg = deg;
          }
        }
        auto v     = static_cast<VertexId>(best);
        auto limit = std::min(k, used + 1);
        for (std::uint32_t c = 0; c < limit; ++c) {
          bool ok = true;
          for (VertexId w = 0; w < n && ok; ++w) {
            ok = !(g.adjacent(v, w) && color[w] == static_cast<std::int32_t>(c));
          }
          if (!ok) {
            continue;
          }
          color[v] = static_cast<std::int32_t>(c);
          if (run(coloured + 1, std::max(used, c + 1))) {
            return true;
          }
          color[v] = -1;
        }
        return false;
      }
    };

    Coloring greedy(SimplicialGraph const& g) {
      Coloring c;
      c.color.assign(g.size(), 0);
      for (VertexId v = 0; v < g.size(); ++v) {
        std::vector<bool> taken(g.size() + 1, false);
        for (VertexId w = 0; w < v; ++w) {
          if (g.adjacent(v, w)) {
            taken[c.color[w]] = true;
          }
        }
        std::uint32_t col = 0;
        while (taken[col]) {
          ++col;
        }
        c.color[v]   = col;
        c.num_colors = std::max(c.num_colors, col + 1);
      }
      return c;
    }
  }  // namespace

  Coloring chromatic_coloring(SimplicialGraph const& g) {
    if (g.size() == 0) {
      return {};
    }
    Coloring upper = greedy(g);
    for (std::uint32_t k = 1; k < upper.num_colors; ++k) {
      ColoringSearch s{g, k, std::vector<std::int32_t>(g.size(), -1)};
      if (s.run(0, 0)) {
        Coloring c;
        c.num_colors = k;
        for (auto col : s.color) {
          c.color.push_back(static_cast<std::uint32_t>(col));
        }
        return c;
      }
    }
    return upper;
  }

  namespace graphs {
    namespace {
      std::vector<std::string> numbered(std::size_t n, std::string const& p) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) {
          names.push_back(p + std::to_string(i));
        }
        return names;
      }
    }  // namespace

    SimplicialGraph path(std::size_t n, std::string const& prefix) {
      SimplicialGraph g(numbered(n, prefix));
      for (VertexId i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
      }
      return g;
    }

    SimplicialGraph cycle(std::size_t n, std::string const& prefix) {
      if (n < 3) {
        throw InputError("a cycle needs at least 3 vertices");
      }
      SimplicialGraph g = path(n, prefix);
      g.add_edge(static_cast<VertexId>(n - 1), 0);
      return g;
    }

    SimplicialGraph complete(std::size_t n, std::string const& prefix) {
      SimplicialGraph g(numbered(n, prefix));
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
          g.add_edge(i, j);
        }
      }
      return g;
    }

    SimplicialGraph edgeless(std::size_t n, std::string const& prefix) {
      return SimplicialGraph(numbered(n, prefix));
    }
  }  // namespace graphs

}  // namespace gp

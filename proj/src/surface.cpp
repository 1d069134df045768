#include "gp/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gp/error.hpp"

namespace gp {

  namespace {
    std::uint32_t bit(int v) {
      return std::uint32_t{1} << v;
    }

    // Cycle edges e_i = {i, i+1 mod n} and the inverse lookup.
    struct CycleEdges {
      int                              n;
      std::vector<std::pair<int, int>> ends;   // u < v
      std::vector<int>                 lookup; // n*n, -1 if not adjacent

      explicit CycleEdges(int n_) : n(n_), lookup(n_ * n_, -1) {
        for (int i = 0; i < n; ++i) {
          int u = i, v = (i + 1) % n;
          if (u > v) {
            std::swap(u, v);
          }
          lookup[u * n + v] = lookup[v * n + u] = static_cast<int>(ends.size());
          ends.emplace_back(u, v);
        }
      }

      int index(int u, int v) const {
        return lookup[u * n + v];
      }
    };

    void check_n(int n) {
      if (n < 3 || n > max_surface_n) {
        throw InputError("surface complex needs 3 <= n <= "
                         + std::to_string(max_surface_n) + " (got "
                         + std::to_string(n) + ")");
      }
    }

    // presence bitmap over (base, cycle edge index)
    std::vector<std::uint8_t> square_bitmap(CubeSurfaceComplex const& c,
                                            CycleEdges const&         ce) {
      std::vector<std::uint8_t> present((std::size_t{1} << c.n) * c.n, 0);
      for (auto const& s : c.squares) {
        present[std::size_t{s.base} * c.n + ce.index(s.u, s.v)] = 1;
      }
      return present;
    }
  }  // namespace

  CubeSurfaceComplex build_Y(int n) {
    check_n(n);
    CubeSurfaceComplex c;
    c.n            = n;
    c.vertex_count = std::uint64_t{1} << n;
    CycleEdges ce(n);
    for (std::uint32_t s = 0; s < c.vertex_count; ++s) {
      for (int v = 0; v < n; ++v) {
        if ((s & bit(v)) == 0) {
          c.edges.push_back({s, static_cast<std::uint8_t>(v)});
        }
      }
    }
    for (std::uint32_t s = 0; s < c.vertex_count; ++s) {
      for (auto [u, v] : ce.ends) {
        if ((s & (bit(u) | bit(v))) == 0) {
          c.squares.push_back(
              {s, static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
        }
      }
    }
    return c;
  }

  CubeSurfaceComplex build_Y_from_cayley(std::vector<std::int64_t> const& orders) {
    int n = static_cast<int>(orders.size());
    check_n(n);
    for (auto k : orders) {
      if (k == 1 || k < 0) {
        throw InputError("vertex orders must be >= 2 (0 for infinite)");
      }
    }
    using Point = std::vector<std::int64_t>;
    auto step = [&](Point g, int v) {
      g[v] += 1;
      if (orders[v] != 0) {
        g[v] %= orders[v];
      }
      return g;
    };

    // Walk words with pairwise distinct positive generators from 0.
    std::map<Point, std::uint32_t>           used;  // point -> generators used
    std::vector<std::pair<Point, int>>       edges;
    std::queue<std::pair<Point, std::uint32_t>> todo;
    Point                                    origin(n, 0);
    used[origin] = 0;
    todo.push({origin, 0});
    while (!todo.empty()) {
      auto [g, mask] = todo.front();
      todo.pop();
      for (int v = 0; v < n; ++v) {
        if ((mask & bit(v)) != 0) {
          continue;
        }
        Point h = step(g, v);
        edges.emplace_back(g, v);
        if (used.emplace(h, mask | bit(v)).second) {
          todo.push({h, mask | bit(v)});
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto has_edge = [&](Point const& g, int v) {
      return std::binary_search(edges.begin(), edges.end(), std::make_pair(g, v));
    };

    auto mask_of = [&](Point const& g) {
      std::uint32_t m = 0;
      for (int v = 0; v < n; ++v) {
        if (g[v] == 1) {
          m |= bit(v);
        } else if (g[v] != 0) {
          throw Error("cube walk left {0,1}^n");
        }
      }
      return m;
    };

    CubeSurfaceComplex c;
    c.n            = n;
    c.vertex_count = used.size();
    for (auto const& [g, v] : edges) {
      c.edges.push_back({mask_of(g), static_cast<std::uint8_t>(v)});
    }
    CycleEdges ce(n);
    for (auto const& [g, mask] : used) {
      for (auto [u, v] : ce.ends) {
        // commutator cell x_u x_v x_u^-1 x_v^-1 based at g
        Point gu = step(g, u), gv = step(g, v);
        if (has_edge(g, u) && has_edge(g, v) && has_edge(gu, v)
            && has_edge(gv, u)) {
          c.squares.push_back({mask_of(g),
                               static_cast<std::uint8_t>(u),
                               static_cast<std::uint8_t>(v)});
        }
      }
    }
    auto by_key = [](auto const& a, auto const& b) {
      return std::tie(a.base, a.v) < std::tie(b.base, b.v);
    };
    std::sort(c.edges.begin(), c.edges.end(), by_key);
    std::sort(c.squares.begin(), c.squares.end(), [](auto const& a, auto const& b) {
      return std::tie(a.base, a.u, a.v) < std::tie(b.base, b.u, b.v);
    });
    return c;
  }

  std::int64_t euler_characteristic(CubeSurfaceComplex const& c) {
    return static_cast<std::int64_t>(c.vertex_count)
           - static_cast<std::int64_t>(c.edges.size())
           + static_cast<std::int64_t>(c.squares.size());
  }

  SurfaceCheck verify_closed_surface(CubeSurfaceComplex const& c) {
    check_n(c.n);
    int          n = c.n;
    CycleEdges   ce(n);
    SurfaceCheck r;

    std::size_t               slots = (std::size_t{1} << n) * n;
    std::vector<std::uint8_t> edge_present(slots, 0), incidence(slots, 0);
    for (auto const& e : c.edges) {
      edge_present[std::size_t{e.base} * n + e.v] = 1;
    }
    auto bump = [&](std::uint32_t base, int v) {
      auto& x = incidence[std::size_t{base} * n + v];
      x       = static_cast<std::uint8_t>(std::min(x + 1, 255));
    };
    for (auto const& s : c.squares) {
      bump(s.base, s.u);
      bump(s.base, s.v);
      bump(s.base | bit(s.u), s.v);
      bump(s.base | bit(s.v), s.u);
    }
    for (std::size_t i = 0; i < slots; ++i) {
      bool present = edge_present[i] != 0;
      if ((present && incidence[i] != 2) || (!present && incidence[i] != 0)) {
        r.bad_edges.push_back({static_cast<std::uint32_t>(i / n),
                               static_cast<std::uint8_t>(i % n)});
      }
    }

    // link of S: nodes are directions v (the edge flipping v), with a link
    // edge {u, v} for each square having S as a corner
    auto present = square_bitmap(c, ce);
    for (std::uint32_t s = 0; s < c.vertex_count; ++s) {
      std::vector<std::vector<int>> adj(n);
      for (std::size_t e = 0; e < ce.ends.size(); ++e) {
        auto [u, v]        = ce.ends[e];
        std::uint32_t base = s & ~(bit(u) | bit(v));
        if (present[std::size_t{base} * n + e] != 0) {
          adj[u].push_back(v);
          adj[v].push_back(u);
        }
      }
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        ok = adj[v].size() == 2;
      }
      if (ok) {
        // 2-regular: single cycle iff the walk from 0 covers all n nodes
        int prev = 0, cur = adj[0][0], len = 1;
        while (cur != 0) {
          int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev     = cur;
          cur      = next;
          ++len;
        }
        ok = len == n;
      }
      if (!ok) {
        r.bad_vertices.push_back(s);
      }
    }
    r.closed_surface = r.bad_edges.empty() && r.bad_vertices.empty();
    return r;
  }

  std::string orientability(CubeSurfaceComplex const& c) {
    check_n(c.n);
    int        n = c.n;
    CycleEdges ce(n);
    auto       present = square_bitmap(c, ce);
    std::vector<std::int8_t> sign(present.size(), 0);

    // Boundary of square (S, u, v) with sign +1: S → S+u → S+u+v → S+v → S.
    // Returns the direction (+1 forward along increasing subsets) in which
    // the square traverses its edge (base, w).
    auto direction = [](std::uint32_t sb, int u, std::uint32_t eb, int w) {
      if (w == u) {
        return eb == sb ? 1 : -1;
      }
      return eb == sb ? -1 : 1;
    };

    for (std::size_t start = 0; start < present.size(); ++start) {
      if (present[start] == 0 || sign[start] != 0) {
        continue;
      }
      sign[start] = 1;
      std::queue<std::size_t> todo;
      todo.push(start);
      while (!todo.empty()) {
        std::size_t   id   = todo.front();
        std::uint32_t base = static_cast<std::uint32_t>(id / n);
        auto [u, v]        = ce.ends[id % n];
        todo.pop();
        // the four boundary edges as (edge base, direction flipped)
        std::pair<std::uint32_t, int> sides[4] = {
            {base, u}, {base, v}, {base | bit(u), v}, {base | bit(v), u}};
        for (auto [eb, w] : sides) {
          int d1 = direction(base, u, eb, w);
          // other squares through edge (eb, w): pair w with a cycle
          // neighbour x of w
          for (int x : {(w + 1) % n, (w + n - 1) % n}) {
            int e = ce.index(w, x);
            if (e < 0) {
              continue;
            }
            std::uint32_t ob    = eb & ~bit(x);
            std::size_t   other = std::size_t{ob} * n + e;
            if (other == id || present[other] == 0) {
              continue;
            }
            int ou = ce.ends[e].first;
            int d2 = direction(ob, ou, eb, w);
            auto want = static_cast<std::int8_t>(-sign[id] * d1 * d2);
            if (sign[other] == 0) {
              sign[other] = want;
              todo.push(other);
            } else if (sign[other] != want) {
              return "undetermined";
            }
          }
        }
      }
    }
    return "pass";
  }

  std::int64_t genus_from_complex(CubeSurfaceComplex const& c) {
    if (!verify_closed_surface(c).closed_surface) {
      throw PreconditionViolation("complex is not a closed surface");
    }
    return 1 - euler_characteristic(c) / 2;
  }

}  // namespace gp

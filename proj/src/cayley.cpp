#include "gp/cayley.hpp"

#include <algorithm>
#include <thread>

#include "gp/error.hpp"

namespace gp {

  std::vector<Letter> generating_set(Presentation const& p) {
    p.require_concrete();
    std::vector<Letter> out;
    for (VertexId v = 0; v < p.size(); ++v) {
      for (Elem x : p.group(v).generators()) {
        out.push_back({v, x});
      }
    }
    return out;
  }

  std::optional<std::uint32_t> CayleyBall::find(NormalForm const& g) const {
    auto it = index.find(g);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  CayleyBall ball(Presentation const& p, int radius, CayleyLimits limits) {
    if (radius < 0) {
      throw InputError("radius must be non-negative");
    }
    if (radius > limits.max_radius) {
      throw ResourceError("radius " + std::to_string(radius)
                          + " exceeds the cap " + std::to_string(limits.max_radius));
    }
    CayleyBall b;
    b.radius  = radius;
    b.letters = generating_set(p);
    b.elements.emplace_back();
    b.distance.push_back(0);
    b.predecessors.emplace_back();
    b.index.emplace(NormalForm{}, 0);
    b.sphere_sizes.push_back(1);

    std::size_t layer_begin = 0;
    for (int d = 0; d < radius; ++d) {
      std::size_t layer_end = b.elements.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (std::uint32_t l = 0; l < b.letters.size(); ++l) {
          auto const& x  = b.letters[l];
          NormalForm  gx = multiply(p, b.elements[i], Syllable{x.vertex, x.element});
          auto [it, inserted] = b.index.try_emplace(
              std::move(gx), static_cast<std::uint32_t>(b.elements.size()));
          if (inserted) {
            if (b.elements.size() >= limits.max_elements) {
              throw ResourceError("ball exceeds "
                                  + std::to_string(limits.max_elements)
                                  + " elements");
            }
            b.elements.push_back(it->first);
            b.distance.push_back(d + 1);
            b.predecessors.emplace_back();
          }
          if (b.distance[it->second] == d + 1) {
            b.predecessors[it->second].emplace_back(
                static_cast<std::uint32_t>(i), l);
          }
        }
      }
      b.sphere_sizes.push_back(b.elements.size() - layer_end);
      layer_begin = layer_end;
    }
    return b;
  }

  std::int64_t distance(Presentation const& p,
                        NormalForm const&   g,
                        NormalForm const&   h) {
    return geodesic_length(p, multiply(p, inverse(p, g), h));
  }

  std::int64_t distance(Presentation const&       p,
                        std::span<const Syllable> e1,
                        std::span<const Syllable> e2) {
    return distance(p, normalize(p, e1), normalize(p, e2));
  }

  GeodesicList geodesics_between(Presentation const& p,
                                 NormalForm const&   g,
                                 NormalForm const&   h,
                                 std::size_t         cap) {
    auto         letters = generating_set(p);
    NormalForm   target  = multiply(p, inverse(p, g), h);
    GeodesicList out;
    LetterWord   path;

    auto dfs = [&](auto&& self, NormalForm const& u, std::int64_t left) -> void {
      if (out.truncated) {
        return;
      }
      if (left == 0) {
        if (out.words.size() == cap) {
          out.truncated = true;
          return;
        }
        out.words.push_back(path);
        return;
      }
      for (auto const& x : letters) {
        NormalForm ux = multiply(p, u, Syllable{x.vertex, x.element});
        if (distance(p, ux, target) == left - 1) {
          path.push_back(x);
          self(self, ux, left - 1);
          path.pop_back();
        }
      }
    };
    dfs(dfs, NormalForm{}, geodesic_length(p, target));
    return out;
  }

  std::int64_t fellow_travel_distance(Presentation const&     p,
                                      std::span<const Letter> w1,
                                      std::span<const Letter> w2) {
    auto prefixes = [&](std::span<const Letter> w) {
      std::vector<NormalForm> out{NormalForm{}};
      for (auto x : w) {
        check_letter(p, x);
        out.push_back(multiply(p, out.back(), Syllable{x.vertex, x.element}));
      }
      return out;
    };
    auto         a     = prefixes(w1);
    auto         b     = prefixes(w2);
    std::size_t  steps = std::max(w1.size(), w2.size());
    std::int64_t width = 0;
    for (std::size_t t = 0; t <= steps; ++t) {
      auto const& u = a[std::min(t, w1.size())];
      auto const& v = b[std::min(t, w2.size())];
      width         = std::max(width, distance(p, u, v));
    }
    return width;
  }

  namespace {
    // A geodesic as the sequence of ball indices it visits plus its letters.
    struct BallPath {
      std::vector<std::uint32_t> points;
      std::vector<std::uint32_t> letters;
    };

    std::vector<BallPath> ball_geodesics(CayleyBall const& b,
                                         std::uint32_t     target,
                                         std::size_t       cap,
                                         bool&             truncated) {
      std::vector<BallPath>      out;
      std::vector<std::uint32_t> pts{target}, lts;
      auto dfs = [&](auto&& self, std::uint32_t node) -> void {
        if (out.size() >= cap) {
          truncated = true;
          return;
        }
        if (node == 0) {
          BallPath bp;
          bp.points.assign(pts.rbegin(), pts.rend());
          bp.letters.assign(lts.rbegin(), lts.rend());
          out.push_back(std::move(bp));
          return;
        }
        for (auto [parent, letter] : b.predecessors[node]) {
          pts.push_back(parent);
          lts.push_back(letter);
          self(self, parent);
          pts.pop_back();
          lts.pop_back();
        }
      };
      dfs(dfs, target);
      std::sort(out.begin(), out.end(), [](BallPath const& x, BallPath const& y) {
        return x.letters < y.letters;
      });
      return out;
    }

    struct PairResult {
      std::int64_t width = -1;
      std::size_t  first = 0, second = 0;
      std::size_t  pairs = 0;
    };

    struct EndpointResult {
      PairResult   case_a;
      PairResult   case_b;
      std::int64_t case_b_excess = 0;
      std::uint32_t case_b_other = 0;  // endpoint of α2
      bool         truncated     = false;
    };

    class Scanner {
     public:
      Scanner(Presentation const& p, CayleyBall const& b, std::size_t cap)
          : p_(p), b_(b), cap_(cap) {}

      std::int64_t dist(std::uint32_t x, std::uint32_t y) {
        if (x == y) {
          return 0;
        }
        if (x > y) {
          std::swap(x, y);
        }
        std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
        auto          it  = memo_.find(key);
        if (it != memo_.end()) {
          return it->second;
        }
        auto d = distance(p_, b_.elements[x], b_.elements[y]);
        memo_.emplace(key, d);
        return d;
      }

      std::int64_t width(BallPath const& u, BallPath const& v) {
        std::int64_t w = 0;
        for (std::size_t t = 0; t < u.points.size(); ++t) {
          w = std::max(w, dist(u.points[t], v.points[t]));
        }
        return w;
      }

      std::vector<BallPath> const& geodesics(std::uint32_t g, bool& truncated) {
        auto it = cache_.find(g);
        if (it == cache_.end()) {
          bool t = false;
          it     = cache_.emplace(g, ball_geodesics(b_, g, cap_, t)).first;
          if (t) {
            truncated_.push_back(g);
          }
        }
        truncated = truncated
                    || std::find(truncated_.begin(), truncated_.end(), g)
                           != truncated_.end();
        return it->second;
      }

      PairResult case_a(std::uint32_t g, bool& truncated) {
        auto const& geo = geodesics(g, truncated);
        PairResult  r;
        r.width = 0;
        for (std::size_t i = 0; i < geo.size(); ++i) {
          for (std::size_t j = i + 1; j < geo.size(); ++j) {
            ++r.pairs;
            auto w = width(geo[i], geo[j]);
            if (w > r.width) {
              r.width = w, r.first = i, r.second = j;
            }
          }
        }
        return r;
      }

      void forget(std::uint32_t g) {
        cache_.erase(g);
      }

     private:
      Presentation const& p_;
      CayleyBall const&   b_;
      std::size_t         cap_;
      std::unordered_map<std::uint64_t, std::int64_t>          memo_;
      std::unordered_map<std::uint32_t, std::vector<BallPath>> cache_;
      std::vector<std::uint32_t>                               truncated_;
    };

    LetterWord to_word(CayleyBall const& b, BallPath const& path) {
      LetterWord w;
      for (auto l : path.letters) {
        w.push_back(b.letters[l]);
      }
      return w;
    }
  }  // namespace

  BigonReport bigon_scan(Presentation const& p,
                         int                 radius,
                         BigonOptions const& options) {
    CayleyBall  b = ball(p, radius, options.limits);
    std::size_t N = b.size();

    // case-(a) widths per endpoint first; case (b) compares against them
    std::vector<EndpointResult> res(N);
    unsigned threads = std::max(1U, options.threads);
    auto run = [&](auto&& body) {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          Scanner sc(p, b, options.geodesic_cap);
          for (std::size_t i = t; i < N; i += threads) {
            body(sc, static_cast<std::uint32_t>(i));
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    };

    run([&](Scanner& sc, std::uint32_t g) {
      res[g].case_a = sc.case_a(g, res[g].truncated);
      sc.forget(g);
    });

    run([&](Scanner& sc, std::uint32_t g) {
      auto& r = res[g];
      r.case_b.width = -1;
      if (b.distance[g] == 0) {
        return;
      }
      auto const& geo_g = sc.geodesics(g, r.truncated);
      for (std::uint32_t l = 0; l < b.letters.size(); ++l) {
        auto const& x = b.letters[l];
        auto        h = b.find(multiply(p, b.elements[g], Syllable{x.vertex, x.element}));
        if (!h || b.distance[*h] != b.distance[g]) {
          continue;
        }
        auto const& geo_h = sc.geodesics(*h, r.truncated);
        for (std::size_t i = 0; i < geo_g.size(); ++i) {
          for (std::size_t j = 0; j < geo_h.size(); ++j) {
            ++r.case_b.pairs;
            auto w = sc.width(geo_g[i], geo_h[j]);
            r.case_b_excess
                = std::max(r.case_b_excess, w - res[*h].case_a.width);
            if (w > r.case_b.width) {
              r.case_b.width  = w;
              r.case_b.first  = i;
              r.case_b.second = j;
              r.case_b_other  = *h;
            }
          }
        }
      }
    });

    BigonReport rep;
    rep.radius    = radius;
    rep.ball_size = N;
    rep.caveat
        = "bounded-radius evidence only: a finite scan can refute uniform "
          "thinness but cannot prove hyperbolicity";
    rep.case_b_excess = 0;
    for (int r = 0; r <= radius; ++r) {
      rep.rows.push_back({r, 0, 0, 0, 0});
    }
    // deterministic reduction in breadth-first order
    for (std::uint32_t g = 0; g < N; ++g) {
      auto const& r   = res[g];
      auto&       row = rep.rows[b.distance[g]];
      rep.truncated   = rep.truncated || r.truncated;
      row.case_a_width = std::max(row.case_a_width, r.case_a.width);
      row.case_a_pairs += r.case_a.pairs;
      row.case_b_pairs += r.case_b.pairs;
      row.case_b_width = std::max(row.case_b_width, r.case_b.width);
      rep.case_a_width = std::max(rep.case_a_width, r.case_a.width);
      rep.case_b_width = std::max(rep.case_b_width, r.case_b.width);
      rep.case_b_excess = std::max(rep.case_b_excess, r.case_b_excess);

      bool dummy = false;
      if (r.case_a.pairs > 0
          && (!rep.witness || r.case_a.width > rep.witness->width)) {
        auto geo = ball_geodesics(b, g, options.geodesic_cap, dummy);
        rep.witness = BigonWitness{'a', b.elements[g],
                                   to_word(b, geo[r.case_a.first]),
                                   to_word(b, geo[r.case_a.second]),
                                   r.case_a.width};
      }
      if (r.case_b.pairs > 0
          && (!rep.witness || r.case_b.width > rep.witness->width)) {
        auto geo_g = ball_geodesics(b, g, options.geodesic_cap, dummy);
        auto geo_h = ball_geodesics(b, r.case_b_other, options.geodesic_cap, dummy);
        rep.witness = BigonWitness{'b', b.elements[r.case_b_other],
                                   to_word(b, geo_g[r.case_b.first]),
                                   to_word(b, geo_h[r.case_b.second]),
                                   r.case_b.width};
      }
    }
    rep.max_width = std::max(rep.case_a_width, rep.case_b_width);
    return rep;
  }

  std::int64_t measure_vertex_thinness(VertexGroup const& g) {
    if (!g.concrete()) {
      throw UnsupportedOperation("cannot measure an opaque group");
    }
    if (g.kind() == VertexGroup::Kind::infinite_cyclic) {
      // geodesics in Z over {±1} are unique
      return 0;
    }
    Presentation p = Presentation::uniform(graphs::edgeless(1, "v"), g);
    // grow until the ball stops growing, so every element is covered
    CayleyLimits limits;
    limits.max_radius = static_cast<int>(g.order());
    int radius        = 0;
    while (ball(p, radius + 1, limits).sphere_sizes.back() != 0) {
      ++radius;
    }
    BigonOptions opt;
    opt.limits = limits;
    return bigon_scan(p, radius, opt).case_a_width;
  }

}  // namespace gp

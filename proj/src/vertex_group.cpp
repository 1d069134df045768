#include "gp/vertex_group.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "gp/error.hpp"

namespace gp {

  namespace {
    Elem checked_add(Elem a, Elem b) {
      Elem r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw ResourceError("infinite cyclic exponent overflow");
      }
      return r;
    }

    Elem checked_mul(Elem a, Elem b) {
      Elem r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceError("infinite cyclic exponent overflow");
      }
      return r;
    }
  }  // namespace

  VertexGroup VertexGroup::cyclic(std::int64_t order) {
    if (order < 2) {
      throw InputError("cyclic vertex group must have order >= 2 (got "
                       + std::to_string(order) + ")");
    }
    VertexGroup g;
    g.kind_  = Kind::finite_cyclic;
    g.order_ = order;
    return g;
  }

  VertexGroup VertexGroup::infinite_cyclic() {
    VertexGroup g;
    g.kind_  = Kind::infinite_cyclic;
    g.order_ = 0;
    return g;
  }

  VertexGroup VertexGroup::table(std::vector<std::vector<std::int64_t>> t,
                                 std::vector<std::string>               names) {
    auto k = static_cast<std::int64_t>(t.size());
    if (k < 2) {
      throw InputError("table vertex group must have at least 2 elements");
    }
    if (t.size() > max_table_order) {
      throw InputError("table vertex group larger than "
                       + std::to_string(max_table_order) + " elements");
    }
    if (!names.empty() && names.size() != t.size()) {
      throw InputError("table has " + std::to_string(t.size())
                       + " rows but " + std::to_string(names.size())
                       + " element names");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].size() != t.size()) {
        throw InputError("table row " + std::to_string(i) + " has length "
                         + std::to_string(t[i].size()) + ", expected "
                         + std::to_string(k));
      }
      for (auto x : t[i]) {
        if (x < 0 || x >= k) {
          throw InputError("table entry out of range in row "
                           + std::to_string(i));
        }
      }
    }
    std::optional<Elem> e;
    for (Elem i = 0; i < k && !e; ++i) {
      bool ok = true;
      for (Elem j = 0; j < k && ok; ++j) {
        ok = t[i][j] == j && t[j][i] == j;
      }
      if (ok) {
        e = i;
      }
    }
    if (!e) {
      throw InputError("table has no identity element");
    }
    for (Elem a = 0; a < k; ++a) {
      for (Elem b = 0; b < k; ++b) {
        for (Elem c = 0; c < k; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            throw InputError("table is not associative at ("
                             + std::to_string(a) + ", " + std::to_string(b)
                             + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    std::vector<Elem> inv(t.size(), -1);
    for (Elem a = 0; a < k; ++a) {
      for (Elem b = 0; b < k; ++b) {
        if (t[a][b] == *e && t[b][a] == *e) {
          inv[a] = b;
          break;
        }
      }
      if (inv[a] < 0) {
        throw InputError("table element " + std::to_string(a)
                         + " has no inverse");
      }
    }
    VertexGroup g;
    g.kind_     = Kind::finite_table;
    g.order_    = k;
    g.table_    = std::move(t);
    g.inverse_  = std::move(inv);
    g.identity_ = *e;
    g.names_    = std::move(names);
    return g;
  }

  VertexGroup VertexGroup::opaque(std::optional<bool> finite,
                                  std::optional<bool> hyperbolic) {
    VertexGroup g;
    g.kind_            = Kind::opaque;
    g.order_           = 0;
    g.finite_flag_     = finite;
    g.hyperbolic_flag_ = hyperbolic;
    return g;
  }

  void VertexGroup::require_concrete(char const* what) const {
    if (kind_ == Kind::opaque) {
      throw UnsupportedOperation(std::string(what)
                                 + " is not available for an opaque group");
    }
  }

  bool VertexGroup::is_finite() const {
    switch (kind_) {
      case Kind::finite_cyclic:
      case Kind::finite_table:
        return true;
      case Kind::infinite_cyclic:
        return false;
      case Kind::opaque:
        break;
    }
    if (!finite_flag_) {
      throw MissingMetadata("opaque group has no \"finite\" flag");
    }
    return *finite_flag_;
  }

  bool VertexGroup::is_hyperbolic() const {
    if (kind_ != Kind::opaque) {
      // finite and virtually cyclic groups are hyperbolic
      return true;
    }
    if (!hyperbolic_flag_) {
      throw MissingMetadata("opaque group has no \"hyperbolic\" flag");
    }
    return *hyperbolic_flag_;
  }

  std::int64_t VertexGroup::order() const {
    require_concrete("order");
    return order_;
  }

  Elem VertexGroup::identity() const {
    require_concrete("identity");
    return kind_ == Kind::finite_table ? identity_ : 0;
  }

  bool VertexGroup::is_identity(Elem a) const {
    return a == identity();
  }

  bool VertexGroup::contains(Elem a) const {
    require_concrete("membership");
    if (kind_ == Kind::infinite_cyclic) {
      return true;
    }
    return a >= 0 && a < order_;
  }

  Elem VertexGroup::multiply(Elem a, Elem b) const {
    require_concrete("multiplication");
    switch (kind_) {
      case Kind::finite_cyclic:
        return (a + b) % order_;
      case Kind::finite_table:
        return table_[a][b];
      case Kind::infinite_cyclic:
        return checked_add(a, b);
      case Kind::opaque:
        break;
    }
    return 0;
  }

  Elem VertexGroup::inverse(Elem a) const {
    require_concrete("inversion");
    switch (kind_) {
      case Kind::finite_cyclic:
        return (order_ - a) % order_;
      case Kind::finite_table:
        return inverse_[a];
      case Kind::infinite_cyclic:
        if (a == INT64_MIN) {
          throw ResourceError("infinite cyclic exponent overflow");
        }
        return -a;
      case Kind::opaque:
        break;
    }
    return 0;
  }

  Elem VertexGroup::power(Elem a, std::int64_t m) const {
    require_concrete("powers");
    switch (kind_) {
      case Kind::finite_cyclic: {
        auto r = static_cast<std::int64_t>(
            (static_cast<__int128>(a) * m) % order_);
        return r < 0 ? r + order_ : r;
      }
      case Kind::infinite_cyclic:
        return checked_mul(a, m);
      case Kind::finite_table: {
        Elem base = m < 0 ? inverse_[a] : a;
        Elem r    = identity_;
        for (std::int64_t i = 0, e = m < 0 ? -m : m; i < e % order_; ++i) {
          r = table_[r][base];
        }
        return r;
      }
      case Kind::opaque:
        break;
    }
    return 0;
  }

  std::int64_t VertexGroup::geodesic_length(Elem a) const {
    require_concrete("geodesic length");
    if (kind_ == Kind::infinite_cyclic) {
      if (a == INT64_MIN) {
        throw ResourceError("infinite cyclic exponent overflow");
      }
      return a < 0 ? -a : a;
    }
    return is_identity(a) ? 0 : 1;
  }

  std::vector<Elem> VertexGroup::generators() const {
    require_concrete("generators");
    if (kind_ == Kind::infinite_cyclic) {
      return {1, -1};
    }
    std::vector<Elem> out;
    for (Elem a = 0; a < order_; ++a) {
      if (!is_identity(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Elem> VertexGroup::elements() const {
    require_concrete("element enumeration");
    if (kind_ == Kind::infinite_cyclic) {
      throw UnsupportedOperation("cannot enumerate an infinite group");
    }
    std::vector<Elem> out{identity()};
    auto              gens = generators();
    out.insert(out.end(), gens.begin(), gens.end());
    return out;
  }

  std::string VertexGroup::element_name(Elem a) const {
    if (kind_ == Kind::finite_table) {
      return names_.empty() ? std::to_string(a) : names_[a];
    }
    return std::to_string(a);
  }

  std::optional<Elem> VertexGroup::element_by_name(std::string const& s) const {
    if (kind_ != Kind::finite_table) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == s) {
        return static_cast<Elem>(i);
      }
    }
    char* end = nullptr;
    long  v   = std::strtol(s.c_str(), &end, 10);
    if (!s.empty() && *end == '\0' && v >= 0 && v < order_) {
      return v;
    }
    return std::nullopt;
  }

  std::string VertexGroup::describe() const {
    switch (kind_) {
      case Kind::finite_cyclic:
        return "Z/" + std::to_string(order_);
      case Kind::finite_table:
        return "table(" + std::to_string(order_) + ")";
      case Kind::infinite_cyclic:
        return "Z";
      case Kind::opaque:
        break;
    }
    return "opaque";
  }

  VertexGroup symmetric_group_3() {
    // permutations of {0,1,2} in the order e, (01), (02), (12), (012), (021)
    using Perm = std::array<int, 3>;
    std::array<Perm, 6> perms{{{0, 1, 2},
                               {1, 0, 2},
                               {2, 1, 0},
                               {0, 2, 1},
                               {1, 2, 0},
                               {2, 0, 1}}};
    std::vector<std::vector<std::int64_t>> t(6, std::vector<std::int64_t>(6));
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        // a then b, acting on the right
        Perm c{};
        for (int i = 0; i < 3; ++i) {
          c[i] = perms[b][perms[a][i]];
        }
        auto it = std::find(perms.begin(), perms.end(), c);
        t[a][b] = it - perms.begin();
      }
    }
    return VertexGroup::table(
        std::move(t), {"e", "(01)", "(02)", "(12)", "(012)", "(021)"});
  }

}  // namespace gp

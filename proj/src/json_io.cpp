#include "gp/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gp/error.hpp"

namespace gp {

  using nlohmann::json;
  using nlohmann::ordered_json;

  namespace {
    [[noreturn]] void fail(std::string const& where, std::string const& what) {
      throw InputError(where + ": " + what);
    }

    json const& field(json const& j, std::string const& where, char const* key) {
      if (!j.is_object()) {
        fail(where, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        fail(where, std::string("missing \"") + key + "\"");
      }
      return *it;
    }

    std::string vertex_ref(json const& j, std::string const& where) {
      if (!j.is_string()) {
        fail(where, "vertex id must be a string");
      }
      return j.get<std::string>();
    }

    std::optional<bool> optional_flag(json const& j,
                                      std::string const& where,
                                      char const* key) {
      auto it = j.find(key);
      if (it == j.end() || it->is_null()) {
        return std::nullopt;
      }
      if (!it->is_boolean()) {
        fail(where + "/" + key, "expected a boolean");
      }
      return it->get<bool>();
    }
  }  // namespace

  SimplicialGraph graph_from_json(json const& j) {
    auto const& vs = field(j, "/", "vertices");
    if (!vs.is_array()) {
      fail("/vertices", "expected an array");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::string where = "/vertices/" + std::to_string(i);
      names.push_back(vertex_ref(field(vs[i], where, "id"), where + "/id"));
    }
    SimplicialGraph g;
    try {
      g = SimplicialGraph(names);
    } catch (InputError const& e) {
      fail("/vertices", e.what());
    }
    auto it = j.find("edges");
    if (it == j.end()) {
      return g;
    }
    if (!it->is_array()) {
      fail("/edges", "expected an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = "/edges/" + std::to_string(i);
      auto const& e     = (*it)[i];
      if (!e.is_array() || e.size() != 2) {
        fail(where, "expected a pair of vertex ids");
      }
      auto u = g.find(vertex_ref(e[0], where + "/0"));
      auto v = g.find(vertex_ref(e[1], where + "/1"));
      if (!u || !v) {
        fail(where, "unknown vertex \"" + (u ? e[1] : e[0]).get<std::string>() + "\"");
      }
      try {
        g.add_edge(*u, *v);
      } catch (InputError const& ex) {
        fail(where, ex.what());
      }
    }
    return g;
  }

  ordered_json graph_to_json(SimplicialGraph const& g) {
    ordered_json out;
    out["vertices"] = ordered_json::array();
    for (VertexId v = 0; v < g.size(); ++v) {
      out["vertices"].push_back({{"id", g.name(v)}});
    }
    out["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) {
      out["edges"].push_back({g.name(u), g.name(v)});
    }
    return out;
  }

  VertexGroup group_from_json(json const& j, std::string const& where) {
    auto const& type = field(j, where, "type");
    if (!type.is_string()) {
      fail(where + "/type", "expected a string");
    }
    auto t = type.get<std::string>();
    try {
      if (t == "cyclic") {
        auto const& order = field(j, where, "order");
        if (order.is_string() && order.get<std::string>() == "inf") {
          return VertexGroup::infinite_cyclic();
        }
        if (!order.is_number_integer()) {
          fail(where + "/order", "expected an integer or \"inf\"");
        }
        return VertexGroup::cyclic(order.get<std::int64_t>());
      }
      if (t == "table") {
        auto const& elems = field(j, where, "elements");
        auto const& rows  = field(j, where, "table");
        if (!elems.is_array() || !rows.is_array()) {
          fail(where, "\"elements\" and \"table\" must be arrays");
        }
        std::vector<std::string> names;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          auto const& x = elems[i];
          if (x.is_string()) {
            names.push_back(x.get<std::string>());
          } else if (x.is_number_integer()) {
            names.push_back(std::to_string(x.get<std::int64_t>()));
          } else {
            fail(where + "/elements/" + std::to_string(i),
                 "expected a string or integer");
          }
        }
        auto index_of = [&](json const& x, std::string const& at) -> std::int64_t {
          for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i] == x) {
              return static_cast<std::int64_t>(i);
            }
          }
          if (x.is_number_integer()) {
            auto i = x.get<std::int64_t>();
            if (i >= 0 && i < static_cast<std::int64_t>(elems.size())) {
              return i;
            }
          }
          fail(at, "not an element: " + x.dump());
        };
        std::vector<std::vector<std::int64_t>> table;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          std::string at = where + "/table/" + std::to_string(r);
          if (!rows[r].is_array()) {
            fail(at, "expected an array");
          }
          auto& row = table.emplace_back();
          for (std::size_t c = 0; c < rows[r].size(); ++c) {
            row.push_back(index_of(rows[r][c], at + "/" + std::to_string(c)));
          }
        }
        return VertexGroup::table(std::move(table), std::move(names));
      }
      if (t == "opaque") {
        return VertexGroup::opaque(optional_flag(j, where, "finite"),
                                   optional_flag(j, where, "hyperbolic"));
      }
    } catch (InputError const& e) {
      std::string msg = e.what();
      if (msg.rfind(where, 0) == 0) {
        throw;
      }
      fail(where, msg);
    }
    fail(where + "/type", "unknown group type \"" + t + "\"");
  }

  ordered_json group_to_json(VertexGroup const& g) {
    ordered_json out;
    switch (g.kind()) {
      case VertexGroup::Kind::finite_cyclic:
        out["type"]  = "cyclic";
        out["order"] = g.order();
        break;
      case VertexGroup::Kind::infinite_cyclic:
        out["type"]  = "cyclic";
        out["order"] = "inf";
        break;
      case VertexGroup::Kind::finite_table: {
        out["type"] = "table";
        auto elems  = g.elements();
        std::sort(elems.begin(), elems.end());
        out["elements"] = ordered_json::array();
        for (Elem a : elems) {
          out["elements"].push_back(g.element_name(a));
        }
        out["table"] = ordered_json::array();
        for (Elem a : elems) {
          ordered_json row = ordered_json::array();
          for (Elem b : elems) {
            row.push_back(g.element_name(g.multiply(a, b)));
          }
          out["table"].push_back(row);
        }
        break;
      }
      case VertexGroup::Kind::opaque:
        out["type"] = "opaque";
        try {
          out["finite"] = g.is_finite();
        } catch (MissingMetadata const&) {
        }
        try {
          out["hyperbolic"] = g.is_hyperbolic();
        } catch (MissingMetadata const&) {
        }
        break;
    }
    return out;
  }

  Presentation presentation_from_json(json const& j) {
    SimplicialGraph g      = graph_from_json(j);
    auto const&     groups = field(j, "/", "groups");
    if (!groups.is_object()) {
      fail("/groups", "expected an object keyed by vertex id");
    }
    for (auto const& [key, value] : groups.items()) {
      if (!g.find(key)) {
        fail("/groups/" + key, "unknown vertex");
      }
    }
    std::vector<VertexGroup> gs;
    for (VertexId v = 0; v < g.size(); ++v) {
      auto it = groups.find(g.name(v));
      if (it == groups.end()) {
        fail("/groups", "no group for vertex \"" + g.name(v) + "\"");
      }
      gs.push_back(group_from_json(*it, "/groups/" + g.name(v)));
    }
    return Presentation(std::move(g), std::move(gs));
  }

  ordered_json presentation_to_json(Presentation const& p) {
    ordered_json out = graph_to_json(p.graph());
    out["groups"]    = ordered_json::object();
    for (VertexId v = 0; v < p.size(); ++v) {
      out["groups"][p.graph().name(v)] = group_to_json(p.group(v));
    }
    return out;
  }

  Presentation load_presentation(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    json j;
    try {
      j = json::parse(in);
    } catch (json::parse_error const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
    try {
      return presentation_from_json(j);
    } catch (InputError const& e) {
      throw InputError(path.string() + ":" + e.what());
    }
  }

}  // namespace gp

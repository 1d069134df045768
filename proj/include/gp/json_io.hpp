#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gp/presentation.hpp"

namespace gp {

  // {"vertices":[{"id":"u1"},...],"edges":[["u1","u2"],...]}
  SimplicialGraph graph_from_json(nlohmann::json const& j);
  nlohmann::ordered_json graph_to_json(SimplicialGraph const& g);

  // {"type":"cyclic","order":4} | {"type":"cyclic","order":"inf"} |
  // {"type":"table","elements":[...],"table":[[...]]} |
  // {"type":"opaque","finite":false,"hyperbolic":true}
  // Table entries are either members of "elements" or indices into it.
  VertexGroup group_from_json(nlohmann::json const& j,
                              std::string const&    where = "group");
  nlohmann::ordered_json group_to_json(VertexGroup const& g);

  // Graph fields plus "groups": vertex id → group JSON, every vertex keyed.
  Presentation presentation_from_json(nlohmann::json const& j);
  nlohmann::ordered_json presentation_to_json(Presentation const& p);

  // Reads and parses a presentation file; all failures are InputError.
  Presentation load_presentation(std::filesystem::path const& path);

}  // namespace gp

#include "gp/presentation.hpp"

#include "gp/error.hpp"

namespace gp {

  Presentation::Presentation(SimplicialGraph graph, std::vector<VertexGroup> groups)
      : graph_(std::move(graph)), groups_(std::move(groups)) {
    if (groups_.size() != graph_.size()) {
      throw InputError("presentation has " + std::to_string(graph_.size())
                       + " vertices but " + std::to_string(groups_.size())
                       + " vertex groups");
    }
    for (auto const& g : groups_) {
      concrete_ = concrete_ && g.concrete();
    }
  }

  Presentation Presentation::uniform(SimplicialGraph graph, VertexGroup group) {
    std::vector<VertexGroup> groups(graph.size(), group);
    return Presentation(std::move(graph), std::move(groups));
  }

  void Presentation::require_concrete() const {
    for (VertexId v = 0; v < groups_.size(); ++v) {
      if (!groups_[v].concrete()) {
        throw UnsupportedOperation("vertex \"" + graph_.name(v)
                                   + "\" has an opaque group; word operations "
                                     "need element arithmetic");
      }
    }
  }

  std::pair<Presentation, VertexSet>
  Presentation::restrict_to(VertexSet subset) const {
    auto                     sub = induced_subgraph(graph_, std::move(subset));
    std::vector<VertexGroup> groups;
    for (VertexId v : sub.original) {
      groups.push_back(groups_[v]);
    }
    return {Presentation(std::move(sub.graph), std::move(groups)),
            std::move(sub.original)};
  }

}  // namespace gp

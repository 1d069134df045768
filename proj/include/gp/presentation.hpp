#pragma once

#include <vector>

#include "gp/graph.hpp"
#include "gp/vertex_group.hpp"

namespace gp {

  // The data of a graph product G(Γ; G_v): a graph plus one non-trivial
  // group per vertex. Word-level operations need every group concrete.
  class Presentation {
   public:
    Presentation(SimplicialGraph graph, std::vector<VertexGroup> groups);

    // Same group at every vertex.
    static Presentation uniform(SimplicialGraph graph, VertexGroup group);

    SimplicialGraph const& graph() const noexcept {
      return graph_;
    }
    VertexGroup const& group(VertexId v) const {
      return groups_.at(v);
    }
    std::vector<VertexGroup> const& groups() const noexcept {
      return groups_;
    }
    std::size_t size() const noexcept {
      return graph_.size();
    }
    bool commute(VertexId u, VertexId v) const {
      return graph_.adjacent(u, v);
    }
    bool concrete() const noexcept {
      return concrete_;
    }
    // Throws UnsupportedOperation naming the first opaque vertex.
    void require_concrete() const;

    // Graph product over the induced subgraph on `subset`, with the
    // corresponding vertex map (new id i ↦ original[i]).
    std::pair<Presentation, VertexSet> restrict_to(VertexSet subset) const;

   private:
    SimplicialGraph          graph_;
    std::vector<VertexGroup> groups_;
    bool                     concrete_ = true;
  };

}  // namespace gp

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gp {

  using VertexId  = std::uint32_t;
  using VertexSet = std::vector<VertexId>;  // sorted, duplicate free

  // Finite simplicial graph: vertices 0..n-1 carrying display names, with a
  // symmetric irreflexive adjacency relation.
  class SimplicialGraph {
   public:
    SimplicialGraph() = default;
    explicit SimplicialGraph(std::vector<std::string> names);

    // Builds a graph from names and edges; rejects loops and duplicate edges.
    static SimplicialGraph from_edges(
        std::vector<std::string>                          names,
        std::span<const std::pair<VertexId, VertexId>>    edges);

    std::size_t size() const noexcept {
      return names_.size();
    }

    std::string const& name(VertexId v) const;
    VertexId           id(std::string const& name) const;
    std::optional<VertexId> find(std::string const& name) const;

    bool adjacent(VertexId u, VertexId v) const {
      return adj_[static_cast<std::size_t>(u) * names_.size() + v] != 0;
    }

    // Throws InputError on loops, duplicates or unknown ids.
    void add_edge(VertexId u, VertexId v);

    std::vector<std::pair<VertexId, VertexId>> edges() const;
    std::size_t edge_count() const noexcept {
      return edge_count_;
    }

    void check_vertex(VertexId v) const;

    bool operator==(SimplicialGraph const&) const = default;

   private:
    std::vector<std::string>  names_;
    std::vector<std::uint8_t> adj_;
    std::size_t               edge_count_ = 0;
  };

  // Proper vertex colouring; color[v] in 0..num_colors-1.
  struct Coloring {
    std::vector<std::uint32_t> color;
    std::uint32_t              num_colors = 0;
  };

  enum class CycleLength { exactly_4, at_least_4 };

  // Result of restricting a graph: the subgraph plus the original id of each
  // of its vertices (new id i corresponds to original[i]).
  struct InducedSubgraph {
    SimplicialGraph graph;
    VertexSet       original;
  };

  InducedSubgraph induced_subgraph(SimplicialGraph const& g,
                                   VertexSet              subset);

  VertexSet link(SimplicialGraph const& g, VertexId v);

  bool is_clique(SimplicialGraph const& g, VertexSet const& subset);

  // An induced cycle of the requested kind, as a vertex sequence in its
  // lexicographically least rotation/reflection, or nullopt.
  std::optional<std::vector<VertexId>>
  has_induced_cycle_ge(SimplicialGraph const& g, CycleLength kind);

  // Chordality by exhaustive subset scan (graphs up to 24 vertices).
  bool is_chordal_brute_force(SimplicialGraph const& g);

  // Chordality via a lexicographic BFS order checked for being a perfect
  // elimination ordering.
  bool is_chordal_lex_bfs(SimplicialGraph const& g);

  // Lexicographic BFS visit order (first visited vertex first).
  std::vector<VertexId> lex_bfs_order(SimplicialGraph const& g);

  // Rotates/reflects a cycle into its lexicographically least form.
  std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

  bool is_proper(SimplicialGraph const& g, Coloring const& c);

  // Exact colouring with chr(g) colours.
  Coloring chromatic_coloring(SimplicialGraph const& g);

  // Small named graphs used by tests, fixtures and the CLI.
  namespace graphs {
    SimplicialGraph path(std::size_t n, std::string const& prefix = "p");
    SimplicialGraph cycle(std::size_t n, std::string const& prefix = "u");
    SimplicialGraph complete(std::size_t n, std::string const& prefix = "k");
    SimplicialGraph edgeless(std::size_t n, std::string const& prefix = "e");
  }  // namespace graphs

}  // namespace gp

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gp {

  // A vertex-group element. Cyclic groups use residues/exponents (0 is the
  // identity); table groups use the element's row index in the table.
  using Elem = std::int64_t;

  // Concrete or metadata-only description of a vertex group G_v together
  // with its generating set X_v: all non-identity elements for finite groups
  // and {+1, -1} for the infinite cyclic group.
  class VertexGroup {
   public:
    enum class Kind { finite_cyclic, finite_table, infinite_cyclic, opaque };

    static constexpr std::size_t max_table_order = 512;

    static VertexGroup cyclic(std::int64_t order);
    static VertexGroup infinite_cyclic();
    // Validates the group axioms; element names are optional.
    static VertexGroup table(std::vector<std::vector<std::int64_t>> table,
                             std::vector<std::string>               names = {});
    static VertexGroup opaque(std::optional<bool> finite,
                              std::optional<bool> hyperbolic);

    Kind kind() const noexcept {
      return kind_;
    }
    bool concrete() const noexcept {
      return kind_ != Kind::opaque;
    }
    // Throws MissingMetadata for an opaque group without the flag.
    bool is_finite() const;
    bool is_hyperbolic() const;
    // Order of a finite concrete group; 0 for the infinite cyclic group.
    std::int64_t order() const;

    Elem identity() const;
    bool is_identity(Elem a) const;
    Elem multiply(Elem a, Elem b) const;
    Elem inverse(Elem a) const;
    Elem power(Elem a, std::int64_t m) const;
    bool contains(Elem a) const;

    // Word length of a over X_v.
    std::int64_t geodesic_length(Elem a) const;
    // X_v in a fixed order.
    std::vector<Elem> generators() const;
    // Every element of a finite group, identity first.
    std::vector<Elem> elements() const;

    // Reads "x^m" style exponents; table groups take an element name instead.
    std::string element_name(Elem a) const;
    std::optional<Elem> element_by_name(std::string const& name) const;

    std::string describe() const;

    bool operator==(VertexGroup const&) const = default;

   private:
    void require_concrete(char const* what) const;

    Kind                                    kind_  = Kind::finite_cyclic;
    std::int64_t                            order_ = 2;
    std::vector<std::vector<std::int64_t>>  table_;
    std::vector<Elem>                       inverse_;
    Elem                                    identity_ = 0;
    std::vector<std::string>                names_;
    std::optional<bool>                     finite_flag_;
    std::optional<bool>                     hyperbolic_flag_;
  };

  // Symmetric group S3 as a multiplication table (used in fixtures/tests).
  VertexGroup symmetric_group_3();

}  // namespace gp

#ifndef DIFFPOSET_SIMPLICIAL_HPP
#define DIFFPOSET_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "diffposet/chain.hpp"
#include "diffposet/poset.hpp"

namespace diffposet {

using VertexIx = std::uint32_t;

/*
  Simplicial complex over a totally ordered vertex set. The vertex order is
  the declaration order and fixes the signs of the border operator; every
  simplex is stored sorted by it. The simplex list is kept sorted by
  (cardinality, vertex sequence), so iteration and diagnostics are
  deterministic.

  The stored family is exactly what the caller supplied (from_family) or the
  downward closure of the supplied generators (close_downward); validate()
  reports whether the family is downward closed.
*/
class SimplicialComplex {
 public:
  // The family as given, not closed. Unknown vertices, empty simplices and
  // repeated vertices inside a simplex are construction errors.
  static SimplicialComplex from_family(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& family);

  // Smallest downward-closed family containing the generators.
  static SimplicialComplex close_downward(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& generators,
      std::size_t max_simplices = Poset::kDefaultMaxElements);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<VertexIx>>& simplices() const {
    return simplices_;
  }
  std::size_t simplex_count() const { return simplices_.size(); }

  bool contains(const std::vector<VertexIx>& s) const;
  VertexIx vertex_index(std::string_view name) const;

  // "a,b,c": vertex names joined in vertex order.
  std::string simplex_name(const std::vector<VertexIx>& s) const;

  struct ValidationReport {
    bool ok = true;
    std::vector<VertexIx> missing;  // first missing face when !ok
    std::vector<VertexIx> parent;   // the simplex whose face is missing
  };
  ValidationReport validate() const;

  // Face poset: elements are the simplices (named as simplex_name), covers
  // are the codimension-1 inclusions. ValidationError if the family is not
  // downward closed.
  PosetPtr face_poset(
      std::size_t max_elements = Poset::kDefaultMaxElements) const;

  // Alternating-sign border operator on the chain space of face_poset:
  // d|s> = sum_i (-1)^i |s \ {v_i}| over the vertices of s in vertex order,
  // and d of a vertex is 0.
  LinearOperator border(const PosetPtr& face_poset) const;

 private:
  SimplicialComplex() = default;

  void init_vertices(std::vector<std::string> vertices);
  std::vector<VertexIx> to_indices(const std::vector<std::string>& s) const;
  void sort_family();

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, VertexIx> vertex_ix_;
  std::vector<std::vector<VertexIx>> simplices_;
};

// Dimension of a simplex: cardinality - 1. ValidationError on the empty set.
int dim(const std::vector<VertexIx>& s);

}  // namespace diffposet

#endif

#ifndef DIFFPOSET_GREECHIE_HPP
#define DIFFPOSET_GREECHIE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diffposet/chain.hpp"
#include "diffposet/poset.hpp"
#include "diffposet/simplicial.hpp"

namespace diffposet {

// One Boolean block of a pasting, given by its atoms.
struct Block {
  std::vector<std::string> atoms;
};

/*
  Atomic Greechie logic: a pasted family of Boolean blocks in which any two
  distinct blocks share at most one atom. Blocks are kept as sorted atom
  index sets over the atom universe; the atom order (lexicographic by
  default, or an explicit order) fixes border-operator signs downstream.

  2-atom blocks are legal but degenerate (their proper elements are both
  atoms, and pasting can then identify atoms across blocks); they are
  accepted with a warning.
*/
class GreechieLogic {
 public:
  static GreechieLogic validate(const std::vector<Block>& blocks,
                                std::vector<std::string> atom_order = {});

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom_name(VertexIx v) const { return atoms_[v]; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<VertexIx>& block(std::uint32_t i) const {
    return blocks_[i];
  }
  std::vector<std::string> block_atom_names(std::uint32_t i) const;
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  GreechieLogic() = default;

  std::vector<std::string> atoms_;
  std::unordered_map<std::string, VertexIx> atom_ix_;
  std::vector<std::vector<VertexIx>> blocks_;
  std::vector<std::string> warnings_;
};

// Canonical proper element of a logic: its display name plus every
// (block, atom subset) representation it has.
struct ProperElement {
  std::string canonical_id;
  std::vector<std::pair<std::uint32_t, std::vector<VertexIx>>> representations;
};

/*
  The poset of proper elements of a logic, with the two-way mapping between
  poset elements and their block representations.

  Proper elements are the nonempty proper atom subsets of each block, modulo
  identification: subsets equal in the same block, singletons of a shared
  atom, and the two block complements of a shared atom denote one element;
  the identification is closed transitively. The order is within-block
  inclusion, closed transitively across shared elements.
*/
class ProperPoset {
 public:
  explicit ProperPoset(GreechieLogic logic,
                       std::size_t max_elements = Poset::kDefaultMaxElements);

  const GreechieLogic& logic() const { return logic_; }
  const PosetPtr& poset() const { return poset_; }

  // Indexed by poset element index.
  const ProperElement& element(ElemIx e) const { return elements_[e]; }

  // The element whose representation in some block is exactly this vertex
  // set; IdentifierError if the set is not a simplex of the block complex.
  ElemIx f_map(const std::vector<VertexIx>& simplex) const;

  // Distinct vertex sets s with f(s) = e, sorted; one per block the element
  // lies in, except that a shared atom has a single preimage.
  std::vector<std::vector<VertexIx>> preimages(ElemIx e) const;

  // #_i e: size of e's atom subset in block i. PreconditionError if e has no
  // (or no unambiguous) representation there.
  int block_count(std::uint32_t block, ElemIx e) const;

  // #_i q - #_i p in a block containing both; checked equal across all such
  // blocks. IncomparableError if p is not <= q.
  int block_degree(ElemIx p, ElemIx q) const;

  // Border operator induced by the block complex: d|p> = sum over the
  // preimages s of p of f applied linearly to the simplicial border of s.
  LinearOperator border() const;

 private:
  GreechieLogic logic_;
  PosetPtr poset_;
  std::vector<ProperElement> elements_;
  std::map<std::vector<VertexIx>, ElemIx> by_subset_;
};

// The block complex K: vertices are all atoms, simplices are the nonempty
// proper subsets of each block's atom set; downward closed by construction.
SimplicialComplex block_complex(const GreechieLogic& logic);

}  // namespace diffposet

#endif

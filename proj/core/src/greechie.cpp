#include "diffposet/greechie.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace diffposet {

namespace {

constexpr std::size_t kMaxBlockAtoms = 20;

std::string join_names(const GreechieLogic& logic,
                       const std::vector<VertexIx>& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += "∨";  // the join sign
    out += logic.atom_name(subset[i]);
  }
  return out;
}

// Plain union-find over representation ids.
struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

GreechieLogic GreechieLogic::validate(const std::vector<Block>& blocks,
                                      std::vector<std::string> atom_order) {
  GreechieLogic logic;

  std::set<std::string> universe;
  for (const Block& b : blocks) {
    for (const std::string& a : b.atoms) universe.insert(a);
  }
  if (atom_order.empty()) {
    logic.atoms_.assign(universe.begin(), universe.end());
  } else {
    std::set<std::string> ordered(atom_order.begin(), atom_order.end());
    if (ordered.size() != atom_order.size()) {
      throw ValidationError("atom order lists an atom twice");
    }
    for (const std::string& a : universe) {
      if (!ordered.count(a)) {
        throw ValidationError("atom order is missing atom '" + a + "'");
      }
    }
    for (const std::string& a : atom_order) {
      if (!universe.count(a)) {
        throw ValidationError("atom order names '" + a +
                              "', which is not an atom of any block");
      }
    }
    logic.atoms_ = std::move(atom_order);
  }
  for (VertexIx i = 0; i < logic.atoms_.size(); ++i) {
    const std::string& a = logic.atoms_[i];
    if (a.empty()) throw ValidationError("empty atom name");
    if (a.find(',') != std::string::npos ||
        a.find("∨") != std::string::npos) {
      throw ValidationError("atom name '" + a +
                            "' contains a reserved character");
    }
    logic.atom_ix_[a] = i;
  }

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<VertexIx> ix;
    for (const std::string& a : blocks[i].atoms) {
      ix.push_back(logic.atom_ix_.at(a));
    }
    std::sort(ix.begin(), ix.end());
    if (std::adjacent_find(ix.begin(), ix.end()) != ix.end()) {
      throw ValidationError("block " + std::to_string(i + 1) +
                            " lists an atom twice");
    }
    if (ix.size() < 2) {
      throw ValidationError("block " + std::to_string(i + 1) +
                            " has fewer than 2 atoms");
    }
    if (ix.size() > kMaxBlockAtoms) {
      throw CapError("block " + std::to_string(i + 1) + " has " +
                     std::to_string(ix.size()) + " atoms (limit " +
                     std::to_string(kMaxBlockAtoms) + ")");
    }
    if (ix.size() == 2) {
      logic.warnings_.push_back(
          "block {" + join_names(logic, ix) +
          "} has only 2 atoms; its proper elements are atoms and pasting may "
          "identify atoms across blocks");
    }
    logic.blocks_.push_back(std::move(ix));
  }

  // Pairwise pasting condition: two distinct blocks share at most one atom.
  for (std::size_t i = 0; i < logic.blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < logic.blocks_.size(); ++j) {
      std::vector<VertexIx> shared;
      std::set_intersection(logic.blocks_[i].begin(), logic.blocks_[i].end(),
                            logic.blocks_[j].begin(), logic.blocks_[j].end(),
                            std::back_inserter(shared));
      if (logic.blocks_[i] == logic.blocks_[j]) {
        throw ValidationError("blocks " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " are duplicates");
      }
      if (shared.size() > 1) {
        std::string names;
        for (std::size_t k = 0; k < shared.size(); ++k) {
          if (k) names += ", ";
          names += logic.atom_name(shared[k]);
        }
        throw ValidationError("blocks " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " share atoms {" +
                              names + "}; a pasting allows at most one");
      }
    }
  }
  return logic;
}

std::vector<std::string> GreechieLogic::block_atom_names(
    std::uint32_t i) const {
  std::vector<std::string> out;
  for (VertexIx v : blocks_[i]) out.push_back(atoms_[v]);
  return out;
}

SimplicialComplex block_complex(const GreechieLogic& logic) {
  std::set<std::vector<VertexIx>> family;
  for (std::uint32_t i = 0; i < logic.block_count(); ++i) {
    const auto& atoms = logic.block(i);
    const std::uint32_t full = (1u << atoms.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {  // proper, nonempty
      std::vector<VertexIx> s;
      for (std::size_t b = 0; b < atoms.size(); ++b) {
        if (mask & (1u << b)) s.push_back(atoms[b]);
      }
      family.insert(std::move(s));
    }
  }
  std::vector<std::vector<std::string>> named;
  named.reserve(family.size());
  for (const auto& s : family) {
    std::vector<std::string> names;
    for (VertexIx v : s) names.push_back(logic.atom_name(v));
    named.push_back(std::move(names));
  }
  return SimplicialComplex::from_family(logic.atoms(), named);
}

ProperPoset::ProperPoset(GreechieLogic logic, std::size_t max_elements)
    : logic_(std::move(logic)) {
  // Enumerate all (block, proper nonempty subset) representations.
  std::vector<std::pair<std::uint32_t, std::vector<VertexIx>>> reps;
  std::map<std::pair<std::uint32_t, std::vector<VertexIx>>, std::uint32_t>
      rep_id;
  for (std::uint32_t i = 0; i < logic_.block_count(); ++i) {
    const auto& atoms = logic_.block(i);
    const std::uint32_t full = (1u << atoms.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::vector<VertexIx> s;
      for (std::size_t b = 0; b < atoms.size(); ++b) {
        if (mask & (1u << b)) s.push_back(atoms[b]);
      }
      rep_id[{i, s}] = static_cast<std::uint32_t>(reps.size());
      reps.emplace_back(i, std::move(s));
    }
    if (reps.size() > (std::size_t(1) << 22)) {
      throw CapError("logic has too many proper-element representations");
    }
  }

  UnionFind uf(reps.size());

  // Shared atoms: the singleton {v} denotes one element wherever it occurs.
  {
    std::map<VertexIx, std::uint32_t> first_rep;
    for (std::uint32_t r = 0; r < reps.size(); ++r) {
      if (reps[r].second.size() != 1) continue;
      VertexIx v = reps[r].second[0];
      auto [it, inserted] = first_rep.try_emplace(v, r);
      if (!inserted) uf.unite(it->second, r);
    }
  }

  // Shared orthocomplements: blocks i, j sharing atom v identify
  // atoms(B_i) \ {v} with atoms(B_j) \ {v}.
  for (std::uint32_t i = 0; i < logic_.block_count(); ++i) {
    for (std::uint32_t j = i + 1; j < logic_.block_count(); ++j) {
      std::vector<VertexIx> shared;
      std::set_intersection(logic_.block(i).begin(), logic_.block(i).end(),
                            logic_.block(j).begin(), logic_.block(j).end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      VertexIx v = shared[0];
      auto complement = [v](const std::vector<VertexIx>& atoms) {
        std::vector<VertexIx> out;
        for (VertexIx a : atoms) {
          if (a != v) out.push_back(a);
        }
        return out;
      };
      uf.unite(rep_id.at({i, complement(logic_.block(i))}),
               rep_id.at({j, complement(logic_.block(j))}));
    }
  }

  // Collect classes and name them: an atom class keeps the least atom name,
  // any other class takes the least representation name.
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (std::uint32_t r = 0; r < reps.size(); ++r) {
    classes[uf.find(r)].push_back(r);
  }
  std::vector<ProperElement> elements;
  std::vector<std::uint32_t> class_of_rep(reps.size());
  for (auto& [root, members] : classes) {
    ProperElement e;
    std::string atom_name, any_name;
    for (std::uint32_t r : members) {
      class_of_rep[r] = static_cast<std::uint32_t>(elements.size());
      e.representations.emplace_back(reps[r].first, reps[r].second);
      std::string n = join_names(logic_, reps[r].second);
      if (reps[r].second.size() == 1 &&
          (atom_name.empty() || n < atom_name)) {
        atom_name = n;
      }
      if (any_name.empty() || n < any_name) any_name = n;
    }
    std::sort(e.representations.begin(), e.representations.end());
    e.canonical_id = atom_name.empty() ? any_name : atom_name;
    elements.push_back(std::move(e));
  }

  // Order: within-block codimension-1 inclusions between classes, closed
  // transitively by the poset constructor. Antisymmetry violations (possible
  // only in degenerate pastings) surface there as validation errors.
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (const ProperElement& e : elements) names.push_back(e.canonical_id);
  std::vector<std::pair<std::string, std::string>> leq_pairs;
  for (const auto& [key, r] : rep_id) {
    const auto& [block, subset] = reps[r];
    const auto& atoms = logic_.block(block);
    if (subset.size() + 1 >= atoms.size()) continue;  // superset not proper
    for (VertexIx a : atoms) {
      if (std::binary_search(subset.begin(), subset.end(), a)) continue;
      std::vector<VertexIx> super(subset);
      super.insert(std::upper_bound(super.begin(), super.end(), a), a);
      std::uint32_t r2 = rep_id.at({block, super});
      leq_pairs.emplace_back(names[class_of_rep[r]], names[class_of_rep[r2]]);
    }
  }
  poset_ = Poset::from_relation(names, std::move(leq_pairs), max_elements);

  elements_.resize(elements.size());
  for (ProperElement& e : elements) {
    ElemIx ix = poset_->index(e.canonical_id);
    for (const auto& [block, subset] : e.representations) {
      by_subset_[subset] = ix;
    }
    elements_[ix] = std::move(e);
  }
}

ElemIx ProperPoset::f_map(const std::vector<VertexIx>& simplex) const {
  auto it = by_subset_.find(simplex);
  if (it == by_subset_.end()) {
    std::string names;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i) names += ",";
      names += simplex[i] < logic_.atoms().size()
                   ? logic_.atom_name(simplex[i])
                   : ("#" + std::to_string(simplex[i]));
    }
    throw IdentifierError("{" + names +
                          "} is not a simplex of the block complex");
  }
  return it->second;
}

std::vector<std::vector<VertexIx>> ProperPoset::preimages(ElemIx e) const {
  std::set<std::vector<VertexIx>> subsets;
  for (const auto& [block, subset] : elements_[e].representations) {
    subsets.insert(subset);
  }
  return {subsets.begin(), subsets.end()};
}

int ProperPoset::block_count(std::uint32_t block, ElemIx e) const {
  int card = -1;
  for (const auto& [b, subset] : elements_[e].representations) {
    if (b != block) continue;
    if (card >= 0 && card != static_cast<int>(subset.size())) {
      throw PreconditionError("'" + elements_[e].canonical_id +
                              "' has representations of different sizes in "
                              "block " +
                              std::to_string(block + 1));
    }
    card = static_cast<int>(subset.size());
  }
  if (card < 0) {
    throw PreconditionError("'" + elements_[e].canonical_id +
                            "' has no representation in block " +
                            std::to_string(block + 1));
  }
  return card;
}

int ProperPoset::block_degree(ElemIx p, ElemIx q) const {
  if (!poset_->leq(p, q)) {
    throw IncomparableError("'" + poset_->name(p) + "' is not below '" +
                            poset_->name(q) + "'");
  }
  std::set<std::uint32_t> p_blocks, q_blocks;
  for (const auto& [b, subset] : elements_[p].representations) {
    p_blocks.insert(b);
  }
  for (const auto& [b, subset] : elements_[q].representations) {
    q_blocks.insert(b);
  }
  bool have = false;
  int degree = 0;
  for (std::uint32_t b : p_blocks) {
    if (!q_blocks.count(b)) continue;
    int d = block_count(b, q) - block_count(b, p);
    if (have && d != degree) {
      throw PreconditionError(
          "degree of ('" + poset_->name(p) + "', '" + poset_->name(q) +
          "') differs across blocks containing both: " +
          std::to_string(degree) + " vs " + std::to_string(d));
    }
    degree = d;
    have = true;
  }
  if (!have) {
    throw PreconditionError("no block contains both '" + poset_->name(p) +
                            "' and '" + poset_->name(q) + "'");
  }
  return degree;
}

LinearOperator ProperPoset::border() const {
  LinearOperator d(poset_, poset_);
  for (ElemIx e = 0; e < poset_->size(); ++e) {
    Chain image(poset_);
    for (const auto& s : preimages(e)) {
      if (s.size() < 2) continue;  // border of a vertex is 0
      std::int64_t sign = 1;
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<VertexIx> face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != i) face.push_back(s[j]);
        }
        image.add_term(f_map(face), sign);
        sign = -sign;
      }
    }
    image.normalize();
    d.set_column(e, std::move(image));
  }
  return d;
}

}  // namespace diffposet

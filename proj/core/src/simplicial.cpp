#include "diffposet/simplicial.hpp"

#include <algorithm>
#include <set>

namespace diffposet {

namespace {

// (cardinality, vertex sequence) order; keeps small faces first.
bool simplex_less(const std::vector<VertexIx>& a,
                  const std::vector<VertexIx>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

int dim(const std::vector<VertexIx>& s) {
  if (s.empty()) throw ValidationError("the empty set is not a simplex");
  return static_cast<int>(s.size()) - 1;
}

void SimplicialComplex::init_vertices(std::vector<std::string> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string& v = vertices[i];
    if (v.empty()) throw ValidationError("empty vertex name");
    if (v.find(',') != std::string::npos ||
        v.find("∨") != std::string::npos) {
      throw ValidationError("vertex name '" + v +
                            "' contains a reserved character");
    }
    if (vertex_ix_.count(v)) {
      throw ValidationError("duplicate vertex '" + v + "'");
    }
    vertex_ix_[v] = static_cast<VertexIx>(i);
  }
  vertices_ = std::move(vertices);
}

VertexIx SimplicialComplex::vertex_index(std::string_view name) const {
  auto it = vertex_ix_.find(std::string(name));
  if (it == vertex_ix_.end()) {
    throw IdentifierError("unknown vertex '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<VertexIx> SimplicialComplex::to_indices(
    const std::vector<std::string>& s) const {
  if (s.empty()) throw ValidationError("the empty set is not a simplex");
  std::vector<VertexIx> ix;
  ix.reserve(s.size());
  for (const std::string& v : s) ix.push_back(vertex_index(v));
  std::sort(ix.begin(), ix.end());
  if (std::adjacent_find(ix.begin(), ix.end()) != ix.end()) {
    throw ValidationError("repeated vertex in simplex");
  }
  return ix;
}

void SimplicialComplex::sort_family() {
  std::sort(simplices_.begin(), simplices_.end(), simplex_less);
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()),
                   simplices_.end());
}

SimplicialComplex SimplicialComplex::from_family(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& family) {
  SimplicialComplex k;
  k.init_vertices(std::move(vertices));
  for (const auto& s : family) k.simplices_.push_back(k.to_indices(s));
  k.sort_family();
  return k;
}

SimplicialComplex SimplicialComplex::close_downward(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& generators,
    std::size_t max_simplices) {
  SimplicialComplex k;
  k.init_vertices(std::move(vertices));
  std::set<std::vector<VertexIx>> closed;
  for (const auto& g : generators) {
    std::vector<VertexIx> ix = k.to_indices(g);
    if (ix.size() > 24) {
      throw CapError("generator simplex with " + std::to_string(ix.size()) +
                     " vertices: downward closure would be too large");
    }
    for (std::uint32_t mask = 1; mask < (1u << ix.size()); ++mask) {
      std::vector<VertexIx> face;
      for (std::size_t i = 0; i < ix.size(); ++i) {
        if (mask & (1u << i)) face.push_back(ix[i]);
      }
      closed.insert(std::move(face));
      if (closed.size() > max_simplices) {
        throw CapError("downward closure exceeds the cap of " +
                       std::to_string(max_simplices) + " simplices");
      }
    }
  }
  k.simplices_.assign(closed.begin(), closed.end());
  k.sort_family();
  return k;
}

bool SimplicialComplex::contains(const std::vector<VertexIx>& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s,
                            simplex_less);
}

std::string SimplicialComplex::simplex_name(
    const std::vector<VertexIx>& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += vertices_[s[i]];
  }
  return out;
}

SimplicialComplex::ValidationReport SimplicialComplex::validate() const {
  for (const auto& s : simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<VertexIx> face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i) face.push_back(s[j]);
      }
      if (!contains(face)) return {false, std::move(face), s};
    }
  }
  return {};
}

PosetPtr SimplicialComplex::face_poset(std::size_t max_elements) const {
  ValidationReport report = validate();
  if (!report.ok) {
    throw ValidationError("family is not downward closed: face {" +
                          simplex_name(report.missing) + "} of {" +
                          simplex_name(report.parent) + "} is missing");
  }
  std::vector<std::string> elements;
  elements.reserve(simplices_.size());
  for (const auto& s : simplices_) elements.push_back(simplex_name(s));

  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& s : simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<VertexIx> face;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i) face.push_back(s[j]);
      }
      covers.emplace_back(simplex_name(face), simplex_name(s));
    }
  }
  return Poset::from_covers(std::move(elements), std::move(covers),
                            max_elements);
}

LinearOperator SimplicialComplex::border(const PosetPtr& face_poset) const {
  LinearOperator d(face_poset, face_poset);
  for (const auto& s : simplices_) {
    ElemIx col = face_poset->index(simplex_name(s));
    if (s.size() < 2) continue;  // d of a vertex is 0
    Chain image(face_poset);
    std::int64_t sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<VertexIx> face;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i) face.push_back(s[j]);
      }
      image.add_term(face_poset->index(simplex_name(face)), sign);
      sign = -sign;
    }
    image.normalize();
    d.set_column(col, std::move(image));
  }
  return d;
}

}  // namespace diffposet

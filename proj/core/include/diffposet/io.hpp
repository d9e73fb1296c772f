#ifndef DIFFPOSET_IO_HPP
#define DIFFPOSET_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "diffposet/differential.hpp"
#include "diffposet/greechie.hpp"
#include "diffposet/incidence.hpp"
#include "diffposet/poset.hpp"
#include "diffposet/simplicial.hpp"

namespace diffposet {

/*
  Text input formats, one declaration per line, '#' starts a comment:

    poset:    element <name>
              cover <lower> <upper>
    complex:  vertex <name>          (declaration order fixes the signs)
              simplex <v1> <v2> ...
    greechie: block <atom> <atom> ...

  Parsers stop with ParseError (carrying the line number) on anything they
  cannot read; semantic checks happen in the owning modules.
*/

struct PosetFile {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};
PosetFile parse_poset_text(std::istream& in);

struct ComplexFile {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> simplices;
};
ComplexFile parse_complex_text(std::istream& in);

struct GreechieFile {
  std::vector<Block> blocks;
};
GreechieFile parse_greechie_text(std::istream& in);

// One vertex name per whitespace-separated token; '#' comments.
std::vector<std::string> parse_vertex_order_text(std::istream& in);

// Hasse diagram as a DOT digraph, edges from lower to upper cover.
std::string to_dot_hasse(const Poset& poset);

// All JSON output is deterministic: stable key order, elements ascending.
std::string poset_to_json(const Poset& poset);
std::string proper_poset_to_json(const ProperPoset& pp);
std::string operator_to_json(const LinearOperator& op);
std::string algebra_element_to_json(const AlgebraElement& x);
std::string omega_to_json(const IncidenceBasis& basis);
std::string report_to_json(const AxiomReport& report);

std::string report_to_text(const AxiomReport& report);

}  // namespace diffposet

#endif

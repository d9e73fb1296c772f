#include "diffposet/io.hpp"

#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace diffposet {

namespace {

using json = nlohmann::ordered_json;

// Splits a line into tokens, dropping everything after '#'.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

template <class Handler>
void parse_lines(std::istream& in, Handler&& handle) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    handle(lineno, tokens);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json check_json(const CheckResult& c) { return c.pass; }

}  // namespace

PosetFile parse_poset_text(std::istream& in) {
  PosetFile out;
  parse_lines(in, [&](int lineno, const std::vector<std::string>& tokens) {
    if (tokens[0] == "element") {
      if (tokens.size() != 2) {
        throw ParseError(lineno, "expected: element <name>");
      }
      out.elements.push_back(tokens[1]);
    } else if (tokens[0] == "cover") {
      if (tokens.size() != 3) {
        throw ParseError(lineno, "expected: cover <lower> <upper>");
      }
      out.covers.emplace_back(tokens[1], tokens[2]);
    } else {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }
  });
  return out;
}

ComplexFile parse_complex_text(std::istream& in) {
  ComplexFile out;
  parse_lines(in, [&](int lineno, const std::vector<std::string>& tokens) {
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) {
        throw ParseError(lineno, "expected: vertex <name>");
      }
      out.vertices.push_back(tokens[1]);
    } else if (tokens[0] == "simplex") {
      if (tokens.size() < 2) {
        throw ParseError(lineno, "expected: simplex <v1> <v2> ...");
      }
      out.simplices.emplace_back(tokens.begin() + 1, tokens.end());
    } else {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }
  });
  return out;
}

GreechieFile parse_greechie_text(std::istream& in) {
  GreechieFile out;
  parse_lines(in, [&](int lineno, const std::vector<std::string>& tokens) {
    if (tokens[0] == "block") {
      if (tokens.size() < 2) {
        throw ParseError(lineno, "expected: block <atom> <atom> ...");
      }
      out.blocks.push_back(
          Block{std::vector<std::string>(tokens.begin() + 1, tokens.end())});
    } else {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }
  });
  return out;
}

std::vector<std::string> parse_vertex_order_text(std::istream& in) {
  std::vector<std::string> out;
  parse_lines(in, [&](int, const std::vector<std::string>& tokens) {
    out.insert(out.end(), tokens.begin(), tokens.end());
  });
  return out;
}

std::string to_dot_hasse(const Poset& poset) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  };
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (ElemIx e = 0; e < poset.size(); ++e) {
    os << "  " << quote(poset.name(e)) << ";\n";
  }
  for (auto [p, q] : poset.cover_pairs()) {
    os << "  " << quote(poset.name(p)) << " -> " << quote(poset.name(q))
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string poset_to_json(const Poset& poset) {
  json j;
  j["elements"] = json::array();
  for (ElemIx e = 0; e < poset.size(); ++e) j["elements"].push_back(poset.name(e));
  j["covers"] = json::array();
  for (auto [p, q] : poset.cover_pairs()) {
    j["covers"].push_back({poset.name(p), poset.name(q)});
  }
  return dump(j);
}

std::string proper_poset_to_json(const ProperPoset& pp) {
  const Poset& poset = *pp.poset();
  json j;
  j["elements"] = json::array();
  for (ElemIx e = 0; e < poset.size(); ++e) {
    json el;
    el["id"] = poset.name(e);
    el["representations"] = json::array();
    for (const auto& [block, subset] : pp.element(e).representations) {
      json rep;
      rep["block"] = block + 1;  // 1-based, input order
      rep["atoms"] = json::array();
      for (VertexIx v : subset) {
        rep["atoms"].push_back(pp.logic().atom_name(v));
      }
      el["representations"].push_back(std::move(rep));
    }
    j["elements"].push_back(std::move(el));
  }
  j["covers"] = json::array();
  for (auto [p, q] : poset.cover_pairs()) {
    j["covers"].push_back({poset.name(p), poset.name(q)});
  }
  return dump(j);
}

std::string operator_to_json(const LinearOperator& op) {
  const Poset& domain = *op.domain();
  const Poset& codomain = *op.codomain();
  json j;
  j["columns"] = json::array();
  for (ElemIx e = 0; e < domain.size(); ++e) {
    json col;
    col["element"] = domain.name(e);
    col["terms"] = json::array();
    for (auto [s, c] : op.column(e).terms()) {
      col["terms"].push_back({{"element", codomain.name(s)}, {"coeff", c}});
    }
    j["columns"].push_back(std::move(col));
  }
  return dump(j);
}

std::string algebra_element_to_json(const AlgebraElement& x) {
  const Poset& poset = *x.poset();
  json j = json::array();
  for (const auto& [key, c] : x.raw_terms()) {
    BasisPair p = AlgebraElement::unpack(key);
    j.push_back({{"ket", poset.name(p.ket)},
                 {"bra", poset.name(p.bra)},
                 {"coeff", c}});
  }
  return dump(j);
}

std::string omega_to_json(const IncidenceBasis& basis) {
  const Poset& poset = *basis.poset();
  json j;
  j["basis_size"] = basis.size();
  j["pairs"] = json::array();
  for (std::uint32_t i = 0; i < basis.size(); ++i) {
    BasisPair p = basis.pair(i);
    j["pairs"].push_back({{"ket", poset.name(p.ket)},
                          {"bra", poset.name(p.bra)},
                          {"grade", basis.grade(i)}});
  }
  return dump(j);
}

std::string report_to_json(const AxiomReport& report) {
  json j;
  j["grading_shift"] = check_json(report.grading_shift);
  j["d_squared"] = check_json(report.d_squared);
  j["D_squared"] = check_json(report.D_squared);
  j["unit_annihilated"] = check_json(report.unit_annihilated);
  j["leibniz"] = check_json(report.leibniz);
  j["basis_size"] = report.basis_size;
  j["grade_histogram"] = json::object();
  for (auto [grade, count] : report.grade_histogram) {
    j["grade_histogram"][std::to_string(grade)] = count;
  }
  j["counterexamples"] = json::array();
  auto add_witness = [&](const char* check, const CheckResult& c) {
    if (!c.pass) {
      j["counterexamples"].push_back({{"check", check}, {"witness", c.witness}});
    }
  };
  add_witness("grading_shift", report.grading_shift);
  add_witness("d_squared", report.d_squared);
  add_witness("D_squared", report.D_squared);
  add_witness("unit_annihilated", report.unit_annihilated);
  add_witness("leibniz", report.leibniz);
  j["notes"] = report.notes;
  return dump(j);
}

std::string report_to_text(const AxiomReport& report) {
  std::ostringstream os;
  auto line = [&](const char* label, const CheckResult& c) {
    os << label << (c.pass ? "PASS" : "FAIL") << "\n";
    if (!c.pass) os << "  counterexample: " << c.witness << "\n";
  };
  os << "basis size: " << report.basis_size << "\n";
  os << "grades:";
  for (auto [grade, count] : report.grade_histogram) {
    os << " " << grade << "×" << count;
  }
  os << "\n";
  line("grading shift     ", report.grading_shift);
  line("d² = 0            ", report.d_squared);
  line("D² = 0            ", report.D_squared);
  line("D1 = 0            ", report.unit_annihilated);
  line("graded Leibniz    ", report.leibniz);
  os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const std::string& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace diffposet

#include "diffposet/differential.hpp"

#include <algorithm>

namespace diffposet {

std::string format_pair(const Poset& poset, ElemIx ket, ElemIx bra) {
  return "|" + poset.name(ket) + "⟩⟨" + poset.name(bra) + "|";
}

DifferentialStructure::DifferentialStructure(PosetPtr poset,
                                             LinearOperator border)
    : poset_(poset), border_(std::move(border)), basis_(poset) {
  if (border_.domain() != poset_ || border_.codomain() != poset_) {
    throw DomainError("border operator is not an endomorphism of the "
                      "poset's chain space");
  }
  rows_ = transpose_rows(border_);
}

Chain DifferentialStructure::restrict_ket(const Chain& d_image,
                                          ElemIx q) const {
  Chain out(poset_);
  for (auto [s, c] : d_image.terms()) {
    if (poset_->leq(s, q)) out.add_term(s, c);
  }
  out.normalize();
  return out;
}

Cochain DifferentialStructure::restrict_bra(const Cochain& image,
                                            ElemIx p) const {
  Cochain out(poset_);
  for (auto [t, c] : image.terms()) {
    if (poset_->leq(p, t)) out.add_term(t, c);
  }
  out.normalize();
  return out;
}

Cochain DifferentialStructure::coborder(ElemIx q) const {
  Cochain out(poset_);
  for (auto [t, c] : rows_[q]) out.add_term(t, c);
  out.normalize();
  return out;
}

AlgebraElement DifferentialStructure::cartan_d_pair(ElemIx ket,
                                                    ElemIx bra) const {
  AlgebraElement out(poset_);
  const int m = poset_->chain_degree(ket, bra);
  const std::int64_t bra_sign = (m % 2 == 0) ? -1 : 1;  // -(-1)^m
  for (auto [s, c] : border_.column(ket).terms()) {
    if (poset_->leq(s, bra)) out.add_term(s, bra, c);
  }
  for (auto [t, c] : rows_[bra]) {
    if (poset_->leq(ket, t)) out.add_term(ket, t, checked_mul(bra_sign, c));
  }
  out.normalize();
  return out;
}

AlgebraElement DifferentialStructure::cartan_d(const AlgebraElement& x) const {
  if (x.poset() && x.poset() != poset_) {
    throw DomainError("algebra element is not over the structure's poset");
  }
  AlgebraElement out(poset_);
  for (const auto& [key, c] : x.raw_terms()) {
    BasisPair p = AlgebraElement::unpack(key);
    out += c * cartan_d_pair(p.ket, p.bra);
  }
  return out;
}

namespace {

// x . |r><s| for sparse x: keeps terms of x with bra == r, moving them to s.
AlgebraElement elem_times_pair(const AlgebraElement& x, ElemIx r, ElemIx s) {
  AlgebraElement out(x.poset());
  for (const auto& [key, c] : x.raw_terms()) {
    BasisPair p = AlgebraElement::unpack(key);
    if (p.bra == r) out.add_term(p.ket, s, c);
  }
  out.normalize();
  return out;
}

// |p><q| . x.
AlgebraElement pair_times_elem(ElemIx p, ElemIx q, const AlgebraElement& x) {
  AlgebraElement out(x.poset());
  for (const auto& [key, c] : x.raw_terms()) {
    BasisPair t = AlgebraElement::unpack(key);
    if (t.ket == q) out.add_term(p, t.bra, c);
  }
  out.normalize();
  return out;
}

std::string format_term(const Poset& poset, std::uint64_t key) {
  BasisPair p = AlgebraElement::unpack(key);
  return format_pair(poset, p.ket, p.bra);
}

}  // namespace

AxiomReport verify(const DifferentialStructure& structure) {
  const IncidenceBasis& basis = structure.basis();
  const Poset& poset = *structure.poset();
  AxiomReport report;
  report.basis_size = basis.size();
  report.grade_histogram = basis.grade_histogram();
  report.notes.push_back(
      "D|p⟩⟨q| = |dp⟩⟨q| - (-1)^m |p⟩⟨qd| with "
      "m the grade of the pair; both sides keep only legal pairs");
  report.notes.push_back(
      "Leibniz rule checked as D(xy) = Dx·y + (-1)^m x·Dy for x of "
      "grade m");

  std::vector<AlgebraElement> d_of(basis.size());
  for (std::uint32_t i = 0; i < basis.size(); ++i) {
    BasisPair p = basis.pair(i);
    d_of[i] = structure.cartan_d_pair(p.ket, p.bra);
  }

  // (1) grading shift: D raises the grade of every term by exactly one.
  for (std::uint32_t i = 0; i < basis.size() && report.grading_shift.pass;
       ++i) {
    const int m = basis.grade(i);
    for (const auto& [key, c] : d_of[i].raw_terms()) {
      BasisPair t = AlgebraElement::unpack(key);
      int g = poset.chain_degree(t.ket, t.bra);
      if (g != m + 1) {
        BasisPair p = basis.pair(i);
        report.grading_shift = {
            false, "D" + format_pair(poset, p.ket, p.bra) + " contains " +
                       format_term(poset, key) + " of grade " +
                       std::to_string(g) + ", expected " +
                       std::to_string(m + 1)};
        break;
      }
    }
  }

  // (2a) d.d = 0 on the chain space.
  for (ElemIx e = 0; e < poset.size() && report.d_squared.pass; ++e) {
    Chain dd = structure.border().apply(structure.border().column(e));
    if (!dd.is_zero()) {
      report.d_squared = {false,
                          "d²|" + poset.name(e) + "⟩ ≠ 0"};
    }
  }

  // (2b) D.D = 0 on the incidence basis.
  for (std::uint32_t i = 0; i < basis.size() && report.D_squared.pass; ++i) {
    AlgebraElement dd = structure.cartan_d(d_of[i]);
    if (!dd.is_zero()) {
      BasisPair p = basis.pair(i);
      report.D_squared = {false, "D²" +
                                     format_pair(poset, p.ket, p.bra) +
                                     " ≠ 0"};
    }
  }

  // (3) D1 = 0.
  {
    AlgebraElement sum(structure.poset());
    for (ElemIx p = 0; p < poset.size(); ++p) {
      sum += d_of[*basis.index_of(p, p)];
    }
    if (!sum.is_zero()) {
      report.unit_annihilated = {
          false, "D1 contains " + format_term(poset, sum.raw_terms()[0].first)};
    }
  }

  // (4) graded Leibniz rule, exhaustively over ordered pairs of basis pairs.
  for (std::uint32_t i = 0; i < basis.size() && report.leibniz.pass; ++i) {
    BasisPair x = basis.pair(i);
    const int m = basis.grade(i);
    for (std::uint32_t j = 0; j < basis.size(); ++j) {
      BasisPair y = basis.pair(j);
      AlgebraElement lhs(structure.poset());
      if (x.bra == y.ket) lhs = d_of[*basis.index_of(x.ket, y.bra)];
      AlgebraElement rhs = elem_times_pair(d_of[i], y.ket, y.bra);
      AlgebraElement xdy = pair_times_elem(x.ket, x.bra, d_of[j]);
      if (m % 2 == 0) {
        rhs += xdy;
      } else {
        rhs -= xdy;
      }
      if (!(lhs == rhs)) {
        report.leibniz = {false,
                          "x = " + format_pair(poset, x.ket, x.bra) +
                              ", y = " + format_pair(poset, y.ket, y.bra)};
        break;
      }
    }
  }

  return report;
}

}  // namespace diffposet

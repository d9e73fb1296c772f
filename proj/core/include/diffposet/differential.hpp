#ifndef DIFFPOSET_DIFFERENTIAL_HPP
#define DIFFPOSET_DIFFERENTIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "diffposet/chain.hpp"
#include "diffposet/incidence.hpp"
#include "diffposet/poset.hpp"

namespace diffposet {

/*
  A Jordan-Holder poset together with a candidate border operator d on its
  chain space. Construction does not certify anything: verify() is the
  certifier, and it must be able to run on broken operators and report the
  failure rather than refuse them.
*/
class DifferentialStructure {
 public:
  DifferentialStructure(PosetPtr poset, LinearOperator border);

  const PosetPtr& poset() const { return poset_; }
  const LinearOperator& border() const { return border_; }
  const IncidenceBasis& basis() const { return basis_; }

  // Keeps only the terms e_s|s> of a border image with s <= q, i.e. those
  // with |s><q| a legal pair.
  Chain restrict_ket(const Chain& d_image, ElemIx q) const;
  // Mirror on the bra side: keeps <t| with p <= t.
  Cochain restrict_bra(const Cochain& image, ElemIx p) const;

  // The coborder <q.d|: coefficient at t is the coefficient of q in d|t>.
  Cochain coborder(ElemIx q) const;

  // D|p><q| = |dp><q| - (-1)^m |p><q.d| with m the grade of the pair and
  // both sides restricted to legal pairs; extended linearly, term-wise on
  // homogeneous components.
  AlgebraElement cartan_d(const AlgebraElement& x) const;
  AlgebraElement cartan_d_pair(ElemIx ket, ElemIx bra) const;

 private:
  PosetPtr poset_;
  LinearOperator border_;
  IncidenceBasis basis_;
  std::vector<std::vector<std::pair<ElemIx, std::int64_t>>> rows_;
};

struct CheckResult {
  bool pass = true;
  std::string witness;  // nonempty iff !pass
};

// Outcome of the four-axiom certification, plus basis statistics. A failing
// check always carries a concrete counterexample.
struct AxiomReport {
  CheckResult grading_shift;
  CheckResult d_squared;
  CheckResult D_squared;
  CheckResult unit_annihilated;
  CheckResult leibniz;
  std::size_t basis_size = 0;
  std::map<int, std::size_t> grade_histogram;
  std::vector<std::string> notes;

  bool all_pass() const {
    return grading_shift.pass && d_squared.pass && D_squared.pass &&
           unit_annihilated.pass && leibniz.pass;
  }
};

// Exhaustive certification over the incidence basis:
//   (1) every term of D on a grade-m pair has grade m+1,
//   (2) d.d = 0 and D.D = 0,
//   (3) D applied to the unit vanishes,
//   (4) D(x.y) = Dx.y + (-1)^m x.Dy for all basis pairs x (grade m), y.
AxiomReport verify(const DifferentialStructure& structure);

// "|p><q|" with element names, used in reports and witnesses.
std::string format_pair(const Poset& poset, ElemIx ket, ElemIx bra);

}  // namespace diffposet

#endif

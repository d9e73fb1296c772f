#ifndef DIFFPOSET_INCIDENCE_HPP
#define DIFFPOSET_INCIDENCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "diffposet/chain.hpp"
#include "diffposet/poset.hpp"

namespace diffposet {

// The basis symbol |ket><bra|; exists only for ket <= bra.
struct BasisPair {
  ElemIx ket;
  ElemIx bra;

  friend bool operator==(const BasisPair&, const BasisPair&) = default;
};

/*
  Element of the incidence algebra: an exact-integer sparse combination of
  basis pairs, in canonical form (terms ascending in (ket, bra), no zero
  coefficients, every pair satisfying ket <= bra). Immutable in spirit:
  mutating ops exist for construction, all algebra goes through values.
*/
class AlgebraElement {
 public:
  // (ket << 32 | bra, coefficient), sorted by the packed key.
  using Term = std::pair<std::uint64_t, std::int64_t>;

  AlgebraElement() = default;
  explicit AlgebraElement(PosetPtr poset) : poset_(std::move(poset)) {}

  // IncomparableError unless ket <= bra.
  static AlgebraElement basis_pair(PosetPtr poset, ElemIx ket, ElemIx bra);
  static AlgebraElement basis_pair(PosetPtr poset, std::string_view ket,
                                   std::string_view bra);

  const PosetPtr& poset() const { return poset_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& raw_terms() const { return terms_; }

  static BasisPair unpack(std::uint64_t key) {
    return {static_cast<ElemIx>(key >> 32),
            static_cast<ElemIx>(key & 0xffffffffu)};
  }
  static std::uint64_t pack(ElemIx ket, ElemIx bra) {
    return (static_cast<std::uint64_t>(ket) << 32) | bra;
  }

  std::int64_t coeff(ElemIx ket, ElemIx bra) const;

  // Accumulate; callers normalize() after a batch. IncomparableError unless
  // ket <= bra (an illegal pair is a construction error, not a zero).
  void add_term(ElemIx ket, ElemIx bra, std::int64_t c);
  void normalize();

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(std::int64_t k);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(std::int64_t k, AlgebraElement x) {
    x *= k;
    return x;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  // True iff every term is diagonal (the element lies in the scalar
  // subalgebra A).
  bool is_scalar() const;

  // Splits into (diagonal part in A, strictly-increasing part in R).
  std::pair<AlgebraElement, AlgebraElement> split_scalar_differential() const;

  void require_same_poset(const AlgebraElement& other) const;

 private:
  PosetPtr poset_;
  std::vector<Term> terms_;
};

// Bilinear extension of |p><q| . |r><s| = delta_qr |p><s|.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// 1 = sum_p |p><p|, the two-sided identity of the incidence algebra.
AlgebraElement unit(PosetPtr poset);

// Exactly the pairs (p, q) with p <= q, ascending in (p, q).
std::vector<BasisPair> basis(const Poset& poset);

// Chain-length degree of a basis pair; requires a Jordan-Holder poset.
int grade(const Poset& poset, BasisPair pair);

struct GradedDecomposition {
  std::map<int, AlgebraElement> parts;
};

// Partition of the terms by grade; the parts sum back to the element.
GradedDecomposition decompose(const AlgebraElement& x);

/*
  Enumerated incidence basis of a Jordan-Holder poset with grades cached:
  pair index <-> (ket, bra), grade per pair, and the histogram of grades.
*/
class IncidenceBasis {
 public:
  explicit IncidenceBasis(PosetPtr poset);

  const PosetPtr& poset() const { return poset_; }
  std::size_t size() const { return pairs_.size(); }
  BasisPair pair(std::uint32_t i) const { return pairs_[i]; }
  int grade(std::uint32_t i) const { return grades_[i]; }
  std::optional<std::uint32_t> index_of(ElemIx ket, ElemIx bra) const;
  const std::map<int, std::size_t>& grade_histogram() const {
    return histogram_;
  }

 private:
  PosetPtr poset_;
  std::vector<BasisPair> pairs_;
  std::vector<int> grades_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::map<int, std::size_t> histogram_;
};

}  // namespace diffposet

#endif

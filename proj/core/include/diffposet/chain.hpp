#ifndef DIFFPOSET_CHAIN_HPP
#define DIFFPOSET_CHAIN_HPP

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

#include "diffposet/errors.hpp"
#include "diffposet/poset.hpp"

namespace diffposet {

// Exact 64-bit integer arithmetic; overflow throws instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

/*
  Sparse integer vector over a poset's elements, in canonical form: terms
  sorted by element index, no zero coefficients. Chain (ket) and Cochain
  (bra) share the representation but are distinct types.
*/
template <class Tag>
class SparseVector {
 public:
  using Term = std::pair<ElemIx, std::int64_t>;

  SparseVector() = default;
  explicit SparseVector(PosetPtr poset) : poset_(std::move(poset)) {}

  static SparseVector basis(PosetPtr poset, ElemIx e) {
    SparseVector v(std::move(poset));
    v.terms_.emplace_back(e, 1);
    return v;
  }

  const PosetPtr& poset() const { return poset_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::int64_t coeff(ElemIx e) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), e,
        [](const Term& t, ElemIx x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
  }

  // Accumulate a term; call normalize() once after a batch of adds.
  void add_term(ElemIx e, std::int64_t c) { terms_.emplace_back(e, c); }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      ElemIx e = terms_[i].first;
      std::int64_t c = 0;
      for (; i < terms_.size() && terms_[i].first == e; ++i) {
        c = checked_add(c, terms_[i].second);
      }
      if (c != 0) terms_[out++] = {e, c};
    }
    terms_.resize(out);
  }

  SparseVector& operator+=(const SparseVector& other) {
    require_same_poset(other);
    for (const Term& t : other.terms_) terms_.push_back(t);
    normalize();
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    require_same_poset(other);
    for (const Term& t : other.terms_) {
      terms_.emplace_back(t.first, checked_mul(t.second, -1));
    }
    normalize();
    return *this;
  }
  SparseVector& operator*=(std::int64_t k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (Term& t : terms_) t.second = checked_mul(t.second, k);
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a += b;
    return a;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    a -= b;
    return a;
  }
  friend SparseVector operator*(std::int64_t k, SparseVector v) {
    v *= k;
    return v;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.terms_ == b.terms_;
  }

  void require_same_poset(const SparseVector& other) const {
    if (poset_ && other.poset_ && poset_ != other.poset_) {
      throw DomainError("operands live over different posets");
    }
  }

 private:
  PosetPtr poset_;
  std::vector<Term> terms_;
};

struct KetTag {};
struct BraTag {};
using Chain = SparseVector<KetTag>;
using Cochain = SparseVector<BraTag>;

// Dirac pairing <b|k> = sum_p b[p] * k[p].
std::int64_t pairing(const Cochain& b, const Chain& k);

/*
  Integer linear operator between chain spaces, stored column-sparse: one
  Chain per basis ket of the domain. Build with set_column, then treat as
  immutable.
*/
class LinearOperator {
 public:
  LinearOperator(PosetPtr domain, PosetPtr codomain);

  static LinearOperator zero(PosetPtr domain, PosetPtr codomain) {
    return LinearOperator(std::move(domain), std::move(codomain));
  }
  static LinearOperator identity(PosetPtr poset);

  const PosetPtr& domain() const { return domain_; }
  const PosetPtr& codomain() const { return codomain_; }
  const Chain& column(ElemIx e) const { return columns_[e]; }

  void set_column(ElemIx e, Chain c);

  bool is_zero() const;

  Chain apply(const Chain& k) const;
  Cochain adjoint_apply(const Cochain& b) const;

 private:
  PosetPtr domain_;
  PosetPtr codomain_;
  std::vector<Chain> columns_;
};

// Rows of the matrix: for each codomain element q, the terms (p, c) with c
// the coefficient of q in column p. This is the coborder view.
std::vector<std::vector<std::pair<ElemIx, std::int64_t>>> transpose_rows(
    const LinearOperator& op);

// Columns of op2 . op1; used to assert d.d = 0.
LinearOperator compose(const LinearOperator& op2, const LinearOperator& op1);

}  // namespace diffposet

#endif

#include "diffposet/chain.hpp"

namespace diffposet {

std::int64_t pairing(const Cochain& b, const Chain& k) {
  if (b.poset() && k.poset() && b.poset() != k.poset()) {
    throw DomainError("pairing of a bra and a ket over different posets");
  }
  std::int64_t sum = 0;
  auto bi = b.terms().begin();
  auto ki = k.terms().begin();
  while (bi != b.terms().end() && ki != k.terms().end()) {
    if (bi->first < ki->first) {
      ++bi;
    } else if (ki->first < bi->first) {
      ++ki;
    } else {
      sum = checked_add(sum, checked_mul(bi->second, ki->second));
      ++bi;
      ++ki;
    }
  }
  return sum;
}

LinearOperator::LinearOperator(PosetPtr domain, PosetPtr codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  columns_.assign(domain_->size(), Chain(codomain_));
}

LinearOperator LinearOperator::identity(PosetPtr poset) {
  LinearOperator op(poset, poset);
  for (ElemIx e = 0; e < poset->size(); ++e) {
    op.set_column(e, Chain::basis(poset, e));
  }
  return op;
}

void LinearOperator::set_column(ElemIx e, Chain c) {
  if (c.poset() && c.poset() != codomain_) {
    throw DomainError("column chain lives over the wrong poset");
  }
  columns_[e] = std::move(c);
}

bool LinearOperator::is_zero() const {
  for (const Chain& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Chain LinearOperator::apply(const Chain& k) const {
  if (k.poset() && k.poset() != domain_) {
    throw DomainError("chain is not over the operator's domain");
  }
  Chain out(codomain_);
  for (auto [e, c] : k.terms()) {
    for (auto [s, cs] : columns_[e].terms()) {
      out.add_term(s, checked_mul(c, cs));
    }
  }
  out.normalize();
  return out;
}

Cochain LinearOperator::adjoint_apply(const Cochain& b) const {
  if (b.poset() && b.poset() != codomain_) {
    throw DomainError("cochain is not over the operator's codomain");
  }
  // <b.op|[p] = <b, column_p>, so that pairing(adjoint_apply(op, b), k)
  // equals pairing(b, apply(op, k)) for every k.
  Cochain out(domain_);
  for (ElemIx p = 0; p < domain_->size(); ++p) {
    std::int64_t c = 0;
    for (auto [q, cq] : columns_[p].terms()) {
      c = checked_add(c, checked_mul(b.coeff(q), cq));
    }
    if (c != 0) out.add_term(p, c);
  }
  return out;
}

std::vector<std::vector<std::pair<ElemIx, std::int64_t>>> transpose_rows(
    const LinearOperator& op) {
  std::vector<std::vector<std::pair<ElemIx, std::int64_t>>> rows(
      op.codomain()->size());
  for (ElemIx p = 0; p < op.domain()->size(); ++p) {
    for (auto [q, c] : op.column(p).terms()) rows[q].emplace_back(p, c);
  }
  return rows;
}

LinearOperator compose(const LinearOperator& op2, const LinearOperator& op1) {
  if (op1.codomain() != op2.domain()) {
    throw DomainError("compose: codomain of the inner operator differs from "
                      "the domain of the outer one");
  }
  LinearOperator out(op1.domain(), op2.codomain());
  for (ElemIx e = 0; e < op1.domain()->size(); ++e) {
    out.set_column(e, op2.apply(op1.column(e)));
  }
  return out;
}

}  // namespace diffposet

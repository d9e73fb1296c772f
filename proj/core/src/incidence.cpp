#include "diffposet/incidence.hpp"

#include <algorithm>

namespace diffposet {

AlgebraElement AlgebraElement::basis_pair(PosetPtr poset, ElemIx ket,
                                          ElemIx bra) {
  AlgebraElement x(std::move(poset));
  x.add_term(ket, bra, 1);
  return x;
}

AlgebraElement AlgebraElement::basis_pair(PosetPtr poset, std::string_view ket,
                                          std::string_view bra) {
  ElemIx k = poset->index(ket), b = poset->index(bra);
  return basis_pair(std::move(poset), k, b);
}

std::int64_t AlgebraElement::coeff(ElemIx ket, ElemIx bra) const {
  std::uint64_t key = pack(ket, bra);
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), key,
      [](const Term& t, std::uint64_t k) { return t.first < k; });
  return (it != terms_.end() && it->first == key) ? it->second : 0;
}

void AlgebraElement::add_term(ElemIx ket, ElemIx bra, std::int64_t c) {
  if (!poset_->leq(ket, bra)) {
    throw IncomparableError("|" + poset_->name(ket) + "><" +
                            poset_->name(bra) +
                            "| is not a basis pair: ket is not below bra");
  }
  terms_.emplace_back(pack(ket, bra), c);
}

void AlgebraElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::uint64_t key = terms_[i].first;
    std::int64_t c = 0;
    for (; i < terms_.size() && terms_[i].first == key; ++i) {
      c = checked_add(c, terms_[i].second);
    }
    if (c != 0) terms_[out++] = {key, c};
  }
  terms_.resize(out);
}

void AlgebraElement::require_same_poset(const AlgebraElement& other) const {
  if (poset_ && other.poset_ && poset_ != other.poset_) {
    throw DomainError("algebra elements over different posets");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_poset(other);
  if (!poset_) poset_ = other.poset_;
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_poset(other);
  if (!poset_) poset_ = other.poset_;
  for (const Term& t : other.terms_) {
    terms_.emplace_back(t.first, checked_mul(t.second, -1));
  }
  normalize();
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.second = checked_mul(t.second, k);
  return *this;
}

bool AlgebraElement::is_scalar() const {
  for (const Term& t : terms_) {
    BasisPair p = unpack(t.first);
    if (p.ket != p.bra) return false;
  }
  return true;
}

std::pair<AlgebraElement, AlgebraElement>
AlgebraElement::split_scalar_differential() const {
  AlgebraElement scalar(poset_), differential(poset_);
  for (const Term& t : terms_) {
    BasisPair p = unpack(t.first);
    if (p.ket == p.bra) {
      scalar.terms_.push_back(t);
    } else {
      differential.terms_.push_back(t);
    }
  }
  return {std::move(scalar), std::move(differential)};
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  x.require_same_poset(y);
  AlgebraElement out(x.poset() ? x.poset() : y.poset());
  const auto& yt = y.raw_terms();
  for (const auto& [xkey, xc] : x.raw_terms()) {
    BasisPair xp = AlgebraElement::unpack(xkey);
    // y is sorted ket-major: the terms with ket == xp.bra are contiguous.
    std::uint64_t lo = AlgebraElement::pack(xp.bra, 0);
    auto it = std::lower_bound(
        yt.begin(), yt.end(), lo,
        [](const AlgebraElement::Term& t, std::uint64_t k) {
          return t.first < k;
        });
    for (; it != yt.end(); ++it) {
      BasisPair yp = AlgebraElement::unpack(it->first);
      if (yp.ket != xp.bra) break;
      out.add_term(xp.ket, yp.bra, checked_mul(xc, it->second));
    }
  }
  out.normalize();
  return out;
}

AlgebraElement unit(PosetPtr poset) {
  AlgebraElement one(poset);
  for (ElemIx p = 0; p < poset->size(); ++p) one.add_term(p, p, 1);
  one.normalize();
  return one;
}

std::vector<BasisPair> basis(const Poset& poset) {
  std::vector<BasisPair> out;
  for (auto [p, q] : poset.all_leq_pairs()) out.push_back({p, q});
  return out;
}

int grade(const Poset& poset, BasisPair pair) {
  return poset.chain_degree(pair.ket, pair.bra);
}

GradedDecomposition decompose(const AlgebraElement& x) {
  GradedDecomposition d;
  const Poset& poset = *x.poset();
  for (const auto& [key, c] : x.raw_terms()) {
    BasisPair p = AlgebraElement::unpack(key);
    int n = poset.chain_degree(p.ket, p.bra);
    auto [it, inserted] = d.parts.try_emplace(n, AlgebraElement(x.poset()));
    it->second.add_term(p.ket, p.bra, c);
  }
  for (auto& [n, part] : d.parts) part.normalize();
  return d;
}

IncidenceBasis::IncidenceBasis(PosetPtr poset) : poset_(std::move(poset)) {
  const auto& jh = poset_->jordan_holder();
  if (!jh.holds) {
    throw PreconditionError(
        "incidence basis needs a Jordan-Holder poset; maximal chains from '" +
        poset_->name(jh.p) + "' to '" + poset_->name(jh.q) +
        "' have unequal lengths");
  }
  for (auto [p, q] : poset_->all_leq_pairs()) {
    index_[AlgebraElement::pack(p, q)] =
        static_cast<std::uint32_t>(pairs_.size());
    pairs_.push_back({p, q});
    int g = poset_->chain_degree(p, q);
    grades_.push_back(g);
    ++histogram_[g];
  }
}

std::optional<std::uint32_t> IncidenceBasis::index_of(ElemIx ket,
                                                      ElemIx bra) const {
  auto it = index_.find(AlgebraElement::pack(ket, bra));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace diffposet

#ifndef DIFFPOSET_POSET_HPP
#define DIFFPOSET_POSET_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diffposet/errors.hpp"

namespace diffposet {

using ElemIx = std::uint32_t;

/*
  Finite poset, stored as elements plus cover relation plus the precomputed
  reflexive-transitive closure of the covers (one bit row per element).

  Elements are identified by name; names are sorted lexicographically at
  construction and ElemIx values follow that order, so iteration by index is
  deterministic everywhere downstream.

  Immutable after construction; safe to share across concurrent readers.
  Chain degrees and the Jordan-Holder diagnosis are computed once on first
  use, under a once_flag.
*/
class Poset {
 public:
  static constexpr std::size_t kDefaultMaxElements = 4096;

  // Builds from an explicit cover relation. Rejects duplicate or empty
  // names, unknown endpoints, self-covers, cycles, and declared covers that
  // are not covers of the generated order.
  static std::shared_ptr<const Poset> from_covers(
      std::vector<std::string> elements,
      std::vector<std::pair<std::string, std::string>> covers,
      std::size_t max_elements = kDefaultMaxElements);

  // Builds from arbitrary order pairs p <= q: takes the reflexive-transitive
  // closure, rejects antisymmetry violations, and derives the cover relation.
  static std::shared_ptr<const Poset> from_relation(
      std::vector<std::string> elements,
      std::vector<std::pair<std::string, std::string>> leq_pairs,
      std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElemIx i) const { return names_[i]; }

  // Index of a named element; IdentifierError if absent.
  ElemIx index(std::string_view name) const;
  std::optional<ElemIx> find(std::string_view name) const;

  bool leq(ElemIx p, ElemIx q) const {
    return (closure_[p * words_ + (q >> 6)] >> (q & 63)) & 1u;
  }
  bool leq(std::string_view p, std::string_view q) const {
    return leq(index(p), index(q));
  }

  const std::vector<ElemIx>& covers_above(ElemIx p) const { return up_[p]; }
  const std::vector<ElemIx>& covers_below(ElemIx q) const { return down_[q]; }
  // All cover pairs (lower, upper), sorted.
  const std::vector<std::pair<ElemIx, ElemIx>>& cover_pairs() const {
    return cover_pairs_;
  }

  // Elements >= p (ascending, includes p).
  std::vector<ElemIx> up_set(ElemIx p) const;
  // All pairs (p, q) with p <= q, ascending in (p, q).
  std::vector<std::pair<ElemIx, ElemIx>> all_leq_pairs() const;

  // Every saturated chain p = r0 < r1 < ... < rk = q (cover steps only),
  // endpoints included. IncomparableError if p is not <= q.
  std::vector<std::vector<ElemIx>> maximal_chains(ElemIx p, ElemIx q) const;

  struct JordanHolder {
    bool holds = true;
    ElemIx p = 0, q = 0;  // first violating pair when !holds
  };
  const JordanHolder& jordan_holder() const;
  bool is_jordan_holder() const { return jordan_holder().holds; }

  // Common length of maximal chains from p to q. Requires a Jordan-Holder
  // poset (PreconditionError otherwise) and p <= q (IncomparableError).
  int chain_degree(ElemIx p, ElemIx q) const;
  int chain_degree(std::string_view p, std::string_view q) const {
    return chain_degree(index(p), index(q));
  }

 private:
  Poset() = default;

  void init_names(std::vector<std::string> elements, std::size_t max_elements);
  void topo_sort_and_close(const std::vector<std::vector<ElemIx>>& succ);
  void finish_covers(std::vector<std::pair<ElemIx, ElemIx>> pairs);
  void compute_degrees() const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElemIx> index_;
  std::vector<std::vector<ElemIx>> up_;
  std::vector<std::vector<ElemIx>> down_;
  std::vector<std::pair<ElemIx, ElemIx>> cover_pairs_;
  std::vector<ElemIx> topo_;

  std::size_t words_ = 0;
  std::vector<std::uint64_t> closure_;  // row-major bit matrix, leq(p, q)

  mutable std::once_flag degree_once_;
  mutable JordanHolder jh_;
  mutable std::unordered_map<std::uint64_t, int> degrees_;
};

using PosetPtr = std::shared_ptr<const Poset>;

}  // namespace diffposet

#endif

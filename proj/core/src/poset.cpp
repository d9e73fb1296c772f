#include "diffposet/poset.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace diffposet {

namespace {

std::uint64_t pair_key(ElemIx p, ElemIx q) {
  return (static_cast<std::uint64_t>(p) << 32) | q;
}

}  // namespace

ElemIx Poset::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw IdentifierError("unknown element '" + std::string(name) + "'");
  }
  return it->second;
}

std::optional<ElemIx> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Poset::init_names(std::vector<std::string> elements,
                       std::size_t max_elements) {
  if (elements.size() > max_elements) {
    throw CapError("poset has " + std::to_string(elements.size()) +
                   " elements, exceeding the cap of " +
                   std::to_string(max_elements));
  }
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].empty()) throw ValidationError("empty element name");
    if (i > 0 && elements[i] == elements[i - 1]) {
      throw ValidationError("duplicate element '" + elements[i] + "'");
    }
  }
  names_ = std::move(elements);
  for (ElemIx i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
}

// Kahn topological sort over the strict successor lists, then reachability
// closure by bit-row OR in reverse topological order.
void Poset::topo_sort_and_close(const std::vector<std::vector<ElemIx>>& succ) {
  const std::size_t n = names_.size();
  std::vector<std::uint32_t> indeg(n, 0);
  for (const auto& ss : succ)
    for (ElemIx q : ss) ++indeg[q];

  std::vector<ElemIx> queue;
  for (ElemIx i = 0; i < n; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  topo_.clear();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElemIx v = queue[head];
    topo_.push_back(v);
    for (ElemIx q : succ[v])
      if (--indeg[q] == 0) queue.push_back(q);
  }
  if (topo_.size() != n) {
    for (ElemIx i = 0; i < n; ++i) {
      if (indeg[i] > 0) {
        throw ValidationError("order relation has a cycle through '" +
                              names_[i] + "'");
      }
    }
  }

  words_ = (n + 63) / 64;
  closure_.assign(n * words_, 0);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    ElemIx p = *it;
    closure_[p * words_ + (p >> 6)] |= std::uint64_t(1) << (p & 63);
    for (ElemIx q : succ[p]) {
      for (std::size_t w = 0; w < words_; ++w)
        closure_[p * words_ + w] |= closure_[q * words_ + w];
    }
  }
}

void Poset::finish_covers(std::vector<std::pair<ElemIx, ElemIx>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  cover_pairs_ = std::move(pairs);
  up_.assign(names_.size(), {});
  down_.assign(names_.size(), {});
  for (auto [p, q] : cover_pairs_) {
    up_[p].push_back(q);
    down_[q].push_back(p);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
}

std::shared_ptr<const Poset> Poset::from_covers(
    std::vector<std::string> elements,
    std::vector<std::pair<std::string, std::string>> covers,
    std::size_t max_elements) {
  auto poset = std::shared_ptr<Poset>(new Poset());
  poset->init_names(std::move(elements), max_elements);

  std::vector<std::pair<ElemIx, ElemIx>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    ElemIx p = poset->index(lo), q = poset->index(hi);
    if (p == q) {
      throw ValidationError("cover relates '" + lo + "' to itself");
    }
    pairs.emplace_back(p, q);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<std::vector<ElemIx>> succ(poset->size());
  for (auto [p, q] : pairs) succ[p].push_back(q);
  poset->topo_sort_and_close(succ);

  // Every declared cover must be a cover of the generated order: nothing
  // strictly between its endpoints.
  for (auto [p, q] : pairs) {
    for (std::size_t w = 0; w < poset->words_; ++w) {
      std::uint64_t bits = poset->closure_[p * poset->words_ + w];
      while (bits) {
        ElemIx r = static_cast<ElemIx>(w * 64 + __builtin_ctzll(bits));
        bits &= bits - 1;
        if (r != p && r != q && poset->leq(r, q)) {
          throw ValidationError("'" + poset->names_[p] + "' < '" +
                                poset->names_[r] + "' < '" + poset->names_[q] +
                                "', so the declared cover " + poset->names_[p] +
                                " < " + poset->names_[q] + " is not a cover");
        }
      }
    }
  }

  poset->finish_covers(std::move(pairs));
  return poset;
}

std::shared_ptr<const Poset> Poset::from_relation(
    std::vector<std::string> elements,
    std::vector<std::pair<std::string, std::string>> leq_pairs,
    std::size_t max_elements) {
  auto poset = std::shared_ptr<Poset>(new Poset());
  poset->init_names(std::move(elements), max_elements);
  const std::size_t n = poset->size();

  std::vector<std::set<ElemIx>> succ_sets(n);
  for (const auto& [lo, hi] : leq_pairs) {
    ElemIx p = poset->index(lo), q = poset->index(hi);
    if (p != q) succ_sets[p].insert(q);
  }
  std::vector<std::vector<ElemIx>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    succ[i].assign(succ_sets[i].begin(), succ_sets[i].end());

  // A cycle among the strict pairs is exactly an antisymmetry violation.
  poset->topo_sort_and_close(succ);

  // Covers: q > p with nothing strictly between.
  std::vector<std::pair<ElemIx, ElemIx>> pairs;
  for (ElemIx p = 0; p < n; ++p) {
    for (ElemIx q : poset->up_set(p)) {
      if (q == p) continue;
      bool is_cover = true;
      for (ElemIx r : poset->up_set(p)) {
        if (r != p && r != q && poset->leq(r, q) && r != q) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) pairs.emplace_back(p, q);
    }
  }
  poset->finish_covers(std::move(pairs));
  return poset;
}

std::vector<ElemIx> Poset::up_set(ElemIx p) const {
  std::vector<ElemIx> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = closure_[p * words_ + w];
    while (bits) {
      out.push_back(static_cast<ElemIx>(w * 64 + __builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<ElemIx, ElemIx>> Poset::all_leq_pairs() const {
  std::vector<std::pair<ElemIx, ElemIx>> out;
  for (ElemIx p = 0; p < size(); ++p)
    for (ElemIx q : up_set(p)) out.emplace_back(p, q);
  return out;
}

std::vector<std::vector<ElemIx>> Poset::maximal_chains(ElemIx p,
                                                       ElemIx q) const {
  if (!leq(p, q)) {
    throw IncomparableError("'" + names_[p] + "' is not below '" + names_[q] +
                            "'");
  }
  std::vector<std::vector<ElemIx>> chains;
  std::vector<ElemIx> path{p};
  // DFS along covers inside the interval [p, q]; up_ lists are sorted, so
  // the output order is deterministic.
  auto dfs = [&](auto&& self, ElemIx r) -> void {
    if (r == q) {
      chains.push_back(path);
      return;
    }
    for (ElemIx s : up_[r]) {
      if (!leq(s, q)) continue;
      path.push_back(s);
      self(self, s);
      path.pop_back();
    }
  };
  dfs(dfs, p);
  return chains;
}

// Single pass per source element: min and max saturated-chain length to every
// reachable target, walking targets in topological order. Equal min and max
// for all pairs is exactly the Jordan-Holder condition.
void Poset::compute_degrees() const {
  const std::size_t n = size();
  degrees_.reserve(n * 4);
  std::vector<int> minlen(n), maxlen(n);
  for (ElemIx p = 0; p < n; ++p) {
    std::fill(minlen.begin(), minlen.end(), -1);
    std::fill(maxlen.begin(), maxlen.end(), -1);
    minlen[p] = maxlen[p] = 0;
    for (ElemIx v : topo_) {
      if (v == p || !leq(p, v)) continue;
      int mn = INT_MAX, mx = -1;
      for (ElemIx u : down_[v]) {
        if (minlen[u] < 0 || !leq(p, u)) continue;
        mn = std::min(mn, minlen[u] + 1);
        mx = std::max(mx, maxlen[u] + 1);
      }
      minlen[v] = mn;
      maxlen[v] = mx;
    }
    for (ElemIx q = 0; q < n; ++q) {
      if (maxlen[q] < 0) continue;
      if (minlen[q] != maxlen[q] && jh_.holds) {
        jh_.holds = false;
        jh_.p = p;
        jh_.q = q;
      }
      degrees_[pair_key(p, q)] = maxlen[q];
    }
  }
}

const Poset::JordanHolder& Poset::jordan_holder() const {
  std::call_once(degree_once_, [this] { compute_degrees(); });
  return jh_;
}

int Poset::chain_degree(ElemIx p, ElemIx q) const {
  const JordanHolder& jh = jordan_holder();
  if (!jh.holds) {
    throw PreconditionError(
        "poset is not Jordan-Holder: maximal chains from '" + names_[jh.p] +
        "' to '" + names_[jh.q] + "' have unequal lengths");
  }
  auto it = degrees_.find(pair_key(p, q));
  if (it == degrees_.end()) {
    throw IncomparableError("'" + names_[p] + "' is not below '" + names_[q] +
                            "'");
  }
  return it->second;
}

}  // namespace diffposet

#include "glc/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>

namespace glc {

namespace {

class CanonicalEnumerator {
 public:
  CanonicalEnumerator(std::size_t vertex_count, std::size_t k, const AssignmentVisitor& visit)
      : k_(k), visit_(visit), rows_(vertex_count) {}

  std::uint64_t run() {
    if (rows_.empty()) {
      ++count_;
      visit_(rows_);
      return count_;
    }
    next_vertex(0, 0);
    return count_;
  }

 private:
  void next_vertex(std::size_t v, Colour used) {
    if (v == rows_.size()) {
      ++count_;
      if (!visit_(rows_)) stopped_ = true;
      return;
    }
    rows_[v].clear();
    extend(v, used, 0, 0);
  }

  // Appends colours >= start to row v. Fresh colours must be used, used+1, ...
  void extend(std::size_t v, Colour used, Colour start, Colour fresh) {
    auto& row = rows_[v];
    if (row.size() == k_) {
      next_vertex(v + 1, used + fresh);
      return;
    }
    for (Colour x = start; !stopped_; ++x) {
      if (x >= used && x != used + fresh) break;
      row.push_back(x);
      extend(v, used, x + 1, fresh + (x >= used ? 1 : 0));
      row.pop_back();
    }
  }

  std::size_t k_;
  const AssignmentVisitor& visit_;
  ListRows rows_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

using MaskKey = std::vector<std::uint32_t>;

// Sorted colour incidence masks: a complete invariant under colour renaming.
MaskKey incidence_key(const ListRows& rows, std::span<const std::size_t> position) {
  Colour palette = 0;
  for (const auto& row : rows) {
    for (Colour c : row) palette = std::max(palette, c + 1);
  }
  MaskKey masks(palette, 0);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    for (Colour c : rows[v]) masks[c] |= 1u << position[v];
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

MaskKey orbit_key_under_permutations(const ListRows& rows) {
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  MaskKey best = incidence_key(rows, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, incidence_key(rows, perm));
  }
  return best;
}

class KmnOrbitEnumerator {
 public:
  KmnOrbitEnumerator(std::size_t m, std::size_t n, std::size_t k, const AssignmentVisitor& visit)
      : m_(m), n_(n), k_(k), visit_(visit), rows_(m + n), need_(n, 0) {}

  std::uint64_t run() {
    std::vector<ListRows> representatives;
    std::set<MaskKey> seen;
    for_each_canonical_assignment(m_, k_, [&](const ListRows& a_rows) {
      if (seen.insert(orbit_key_under_permutations(a_rows)).second) {
        representatives.push_back(a_rows);
      }
      return true;
    });
    for (const auto& rep : representatives) {
      if (stopped_) break;
      std::copy(rep.begin(), rep.end(), rows_.begin());
      Colour used = 0;
      for (const auto& row : rep) {
        for (Colour c : row) used = std::max(used, c + 1);
      }
      used_ = used;
      build_options();
      choose_old_parts(0, 0);
    }
    return count_;
  }

 private:
  // Subsets of the A-side colours of size <= k, ordered by (size, lex).
  void build_options() {
    options_.clear();
    std::vector<Colour> current;
    for (std::size_t size = 0; size <= k_; ++size) {
      collect_subsets(size, 0, current);
    }
  }

  void collect_subsets(std::size_t size, Colour start, std::vector<Colour>& current) {
    if (current.size() == size) {
      options_.push_back(current);
      return;
    }
    for (Colour c = start; c < used_; ++c) {
      current.push_back(c);
      collect_subsets(size, c + 1, current);
      current.pop_back();
    }
  }

  void choose_old_parts(std::size_t j, std::size_t min_option) {
    if (stopped_) return;
    if (j == n_) {
      fresh_masks_.clear();
      choose_fresh(1);
      return;
    }
    for (std::size_t o = min_option; o < options_.size() && !stopped_; ++o) {
      old_parts_.resize(j + 1);
      old_parts_[j] = o;
      need_[j] = k_ - options_[o].size();
      choose_old_parts(j + 1, o);
    }
  }

  // Fresh colours as a nondecreasing sequence of B-incidence masks.
  void choose_fresh(std::uint32_t min_mask) {
    if (stopped_) return;
    std::uint32_t needy = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (need_[j] > 0) needy |= 1u << j;
    }
    if (needy == 0) {
      emit();
      return;
    }
    for (std::uint32_t mask = min_mask; mask <= needy && !stopped_; ++mask) {
      if ((mask & ~needy) != 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (mask >> j & 1u) --need_[j];
      }
      fresh_masks_.push_back(mask);
      choose_fresh(mask);
      fresh_masks_.pop_back();
      for (std::size_t j = 0; j < n_; ++j) {
        if (mask >> j & 1u) ++need_[j];
      }
    }
  }

  void emit() {
    for (std::size_t j = 0; j < n_; ++j) {
      auto& row = rows_[m_ + j];
      row = options_[old_parts_[j]];
      for (std::size_t t = 0; t < fresh_masks_.size(); ++t) {
        if (fresh_masks_[t] >> j & 1u) row.push_back(used_ + static_cast<Colour>(t));
      }
    }
    ++count_;
    if (!visit_(rows_)) stopped_ = true;
  }

  std::size_t m_, n_, k_;
  const AssignmentVisitor& visit_;
  ListRows rows_;
  Colour used_ = 0;
  std::vector<std::vector<Colour>> options_;
  std::vector<std::size_t> old_parts_;
  std::vector<std::size_t> need_;
  std::vector<std::uint32_t> fresh_masks_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::uint64_t for_each_canonical_assignment(std::size_t vertex_count, std::size_t k,
                                            const AssignmentVisitor& visit) {
  if (k == 0) throw std::invalid_argument("list size must be positive");
  return CanonicalEnumerator(vertex_count, k, visit).run();
}

std::uint64_t count_canonical_assignments(std::size_t vertex_count, std::size_t k) {
  if (k == 0) throw std::invalid_argument("list size must be positive");
  // ways[u] = number of prefixes using colours 0..u-1.
  std::vector<std::uint64_t> ways(vertex_count * k + 1, 0);
  ways[0] = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t u = 0; u < ways.size(); ++u) {
      if (ways[u] == 0) continue;
      for (std::size_t old = 0; old <= k; ++old) {
        std::uint64_t choices = binomial(u, old);
        if (choices == 0) continue;
        std::size_t target = u + (k - old);
        if (ways[u] > kMax / choices) return kMax;
        std::uint64_t add = ways[u] * choices;
        next[target] = next[target] > kMax - add ? kMax : next[target] + add;
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = total > kMax - w ? kMax : total + w;
  return total;
}

std::uint64_t for_each_kmn_orbit_assignment(std::size_t m, std::size_t n, std::size_t k,
                                            const AssignmentVisitor& visit) {
  if (m == 0 || n == 0 || k == 0) throw std::invalid_argument("m, n and k must be positive");
  if (m > 8) throw std::invalid_argument("orbit enumeration supports m <= 8");
  if (n > 16) throw std::invalid_argument("orbit enumeration supports n <= 16");
  return KmnOrbitEnumerator(m, n, k, visit).run();
}

}  // namespace glc

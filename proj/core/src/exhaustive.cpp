#include <algorithm>
#include <vector>

#include "cabounds/verify.hpp"

namespace cabounds {

namespace {

using Column = std::vector<Symbol>;

struct BudgetExceeded {};

class Search {
 public:
  Search(const CAParams& params, std::size_t n, std::uint64_t budget, std::uint64_t& nodes)
      : t_(params.t()), k_(params.k()), v_(params.v()), n_(n), budget_(budget), nodes_(nodes) {
    min_count_ = 1;
    for (unsigned i = 1; i < t_; ++i) min_count_ *= v_;
    Column prefix;
    prefix.reserve(n_);
    std::vector<std::size_t> counts(v_, 0);
    enumerate(prefix, counts, 0);
  }

  bool run() {
    chosen_.clear();
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!is_sorted_first(candidates_[i])) continue;
      chosen_.push_back(i);
      if (extend(0)) return true;
      chosen_.pop_back();
    }
    return false;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded{};
  }

  // Restricted-growth strings: symbol s appears only after 0..s-1 have, so
  // the first row is all zeros and symbol renamings are factored out.
  void enumerate(Column& prefix, std::vector<std::size_t>& counts, unsigned used) {
    tick();
    const std::size_t left = n_ - prefix.size();
    std::size_t deficit = 0;
    for (unsigned s = 0; s < v_; ++s) deficit += counts[s] < min_count_ ? min_count_ - counts[s] : 0;
    if (deficit > left) return;
    if (left == 0) {
      candidates_.push_back(prefix);
      return;
    }
    for (unsigned s = 0; s <= std::min(used, v_ - 1); ++s) {
      prefix.push_back(static_cast<Symbol>(s));
      ++counts[s];
      enumerate(prefix, counts, std::max(used, s + 1));
      --counts[s];
      prefix.pop_back();
    }
  }

  // Rows may be permuted freely, so the first column can be taken sorted with
  // non-increasing symbol multiplicities.
  static bool is_sorted_first(const Column& c) {
    if (!std::is_sorted(c.begin(), c.end())) return false;
    std::size_t previous = c.size() + 1;
    for (std::size_t i = 0; i < c.size();) {
      std::size_t j = i;
      while (j < c.size() && c[j] == c[i]) ++j;
      if (j - i > previous) return false;
      previous = j - i;
      i = j;
    }
    return true;
  }

  // Every t-set whose largest member is the newest column is checked when it
  // is placed, so a complete assignment is a covering array.
  bool covers_with_last() {
    const unsigned m = static_cast<unsigned>(chosen_.size());
    if (m < t_) return true;
    std::vector<unsigned> sub(t_ - 1);
    for (unsigned i = 0; i + 1 < t_; ++i) sub[i] = i;
    std::vector<bool> seen;
    std::size_t tuples = min_count_ * v_;
    const Column& last = candidates_[chosen_.back()];
    for (;;) {
      seen.assign(tuples, false);
      std::size_t hit = 0;
      for (std::size_t r = 0; r < n_; ++r) {
        std::size_t x = 0;
        for (unsigned c : sub) x = x * v_ + candidates_[chosen_[c]][r];
        x = x * v_ + last[r];
        if (!seen[x]) {
          seen[x] = true;
          ++hit;
        }
      }
      if (hit < tuples) return false;
      // next (t-1)-subset of the first m-1 columns
      int i = static_cast<int>(t_) - 2;
      while (i >= 0 && sub[i] == m - 1 - (t_ - 1) + static_cast<unsigned>(i)) --i;
      if (i < 0) return true;
      ++sub[i];
      for (unsigned j = i + 1; j + 1 < t_; ++j) sub[j] = sub[j - 1] + 1;
    }
  }

  bool extend(std::size_t floor) {
    if (chosen_.size() == k_) return true;
    const std::size_t start = chosen_.size() == 1 ? 0 : floor;
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      if (i == chosen_.front()) continue;
      tick();
      chosen_.push_back(i);
      if (covers_with_last() && extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  unsigned t_;
  unsigned k_;
  unsigned v_;
  std::size_t n_;
  std::size_t min_count_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<Column> candidates_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

ExhaustiveResult exhaustive_can(const CAParams& params, std::uint64_t n_max, std::uint64_t node_budget) {
  ExhaustiveResult result;
  const std::uint64_t floor = to_u64_checked(params.tuples_per_column_set(), "v^t");
  for (std::uint64_t n = floor; n <= n_max; ++n) {
    try {
      Search search(params, n, node_budget, result.nodes);
      if (search.run()) {
        result.status = SearchStatus::found;
        result.size = n;
        return result;
      }
    } catch (const BudgetExceeded&) {
      result.status = SearchStatus::budget_exceeded;
      return result;
    }
  }
  result.status = SearchStatus::none;
  return result;
}

}  // namespace cabounds

#include "box_search.hpp"

#include <limits>
#include <unordered_set>
#include <vector>

namespace kgraph::detail {

namespace {

constexpr std::size_t kMaxMemoPerDepth = std::size_t{1} << 22;

// i-th value of a coordinate in search order: 0, -1, 1, -2, 2, ...
constexpr std::int64_t digit(std::int64_t i) { return i % 2 ? -(i + 1) / 2 : i / 2; }

class FastSearch {
 public:
  FastSearch(std::vector<std::vector<std::int64_t>> cols, std::vector<std::vector<std::int64_t>> reach,
             std::int64_t bound, BoxGoal goal, std::vector<std::int64_t> target)
      : cols_(std::move(cols)), reach_(std::move(reach)), bound_(bound), goal_(goal),
        target_(std::move(target)), rows_(reach_.front().size()), z_(cols_.size()),
        failed_(cols_.size() + 1) {
    // Mixed-radix key over the full reach of every row; memo disabled if
    // the key space does not fit in 64 bits.
    std::uint64_t space = 1;
    for (std::size_t r = 0; r < rows_; ++r) {
      stride_.push_back(space);
      const auto w = static_cast<std::uint64_t>(2 * reach_[0][r] + 1);
      if (space > std::numeric_limits<std::uint64_t>::max() / w) {
        memo_ = false;
        break;
      }
      space *= w;
    }
  }

  std::optional<IntVector> run() {
    std::vector<std::int64_t> s(rows_, 0);
    if (!dfs(0, s)) return std::nullopt;
    IntVector out;
    for (auto v : z_) out.emplace_back(static_cast<long>(v));
    return out;
  }

 private:
  bool viable(std::size_t d, const std::vector<std::int64_t>& s) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (goal_ == BoxGoal::Equals) {
        const std::int64_t gap = target_[r] - s[r];
        if (gap > reach_[d][r] || -gap > reach_[d][r]) return false;
      } else if (s[r] + reach_[d][r] < 0) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t key(const std::vector<std::int64_t>& s) const {
    std::uint64_t k = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      k += static_cast<std::uint64_t>(s[r] + reach_[0][r]) * stride_[r];
    return k;
  }

  bool dfs(std::size_t d, std::vector<std::int64_t>& s) {
    if (!viable(d, s)) return false;
    if (d == cols_.size()) {
      if (goal_ == BoxGoal::Equals) return true;
      for (auto v : s)
        if (v != 0) return true;
      return false;
    }
    std::uint64_t k = 0;
    if (memo_) {
      k = key(s);
      if (failed_[d].count(k)) return false;
    }
    const auto& col = cols_[d];
    std::int64_t prev = 0;
    for (std::int64_t i = 0; i <= 2 * bound_; ++i) {
      const std::int64_t v = digit(i);
      for (std::size_t r = 0; r < rows_; ++r) s[r] += (v - prev) * col[r];
      prev = v;
      z_[d] = v;
      if (dfs(d + 1, s)) return true;
    }
    for (std::size_t r = 0; r < rows_; ++r) s[r] -= prev * col[r];
    if (memo_ && failed_[d].size() < kMaxMemoPerDepth) failed_[d].insert(k);
    return false;
  }

  std::vector<std::vector<std::int64_t>> cols_;
  std::vector<std::vector<std::int64_t>> reach_;  // reach_[d][r] = bound * sum_{l >= d} |M(r,l)|
  std::int64_t bound_;
  BoxGoal goal_;
  std::vector<std::int64_t> target_;
  std::size_t rows_;
  std::vector<std::int64_t> z_;
  std::vector<std::unordered_set<std::uint64_t>> failed_;
  std::vector<std::uint64_t> stride_;
  bool memo_ = true;
};

// Arbitrary-precision fallback: same order and pruning, no memo.
class SlowSearch {
 public:
  SlowSearch(const IntMatrix& m, std::int64_t bound, BoxGoal goal, const IntVector& target)
      : m_(m), bound_(bound), goal_(goal), target_(target), z_(m.cols()),
        reach_(m.cols() + 1, IntVector(m.rows())) {
    for (std::size_t d = m.cols(); d-- > 0;)
      for (std::size_t r = 0; r < m.rows(); ++r)
        reach_[d][r] = reach_[d + 1][r] + bound * abs(m(r, d));
  }

  std::optional<IntVector> run() {
    IntVector s(m_.rows());
    if (!dfs(0, s)) return std::nullopt;
    return z_;
  }

 private:
  bool dfs(std::size_t d, IntVector& s) {
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (goal_ == BoxGoal::Equals) {
        if (abs(target_[r] - s[r]) > reach_[d][r]) return false;
      } else if (s[r] + reach_[d][r] < 0) {
        return false;
      }
    }
    if (d == m_.cols()) return goal_ == BoxGoal::Equals || !is_zero(s);
    for (std::int64_t i = 0; i <= 2 * bound_; ++i) {
      const std::int64_t v = digit(i);
      IntVector next = s;
      for (std::size_t r = 0; r < m_.rows(); ++r) next[r] += m_(r, d) * v;
      z_[d] = static_cast<long>(v);
      if (dfs(d + 1, next)) return true;
    }
    return false;
  }

  const IntMatrix& m_;
  std::int64_t bound_;
  BoxGoal goal_;
  const IntVector& target_;
  IntVector z_;
  std::vector<IntVector> reach_;
};

}  // namespace

std::optional<IntVector> box_search(const IntMatrix& m, std::int64_t bound, BoxGoal goal,
                                    const IntVector& target) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (cols == 0) {
    if (goal == BoxGoal::Equals) return is_zero(target) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
    return std::nullopt;
  }

  // Int64 fast path when every reachable partial sum and the target fit
  // comfortably (a factor 4 of headroom for the shifted loop arithmetic).
  bool fast = rows > 0;
  std::vector<std::vector<Integer>> reach(cols + 1, std::vector<Integer>(rows));
  for (std::size_t d = cols; d-- > 0;)
    for (std::size_t r = 0; r < rows; ++r) reach[d][r] = reach[d + 1][r] + bound * abs(m(r, d));
  const Integer limit = Integer(std::numeric_limits<std::int64_t>::max() / 4);
  for (std::size_t r = 0; r < rows && fast; ++r) {
    if (reach[0][r] > limit) fast = false;
    if (goal == BoxGoal::Equals && abs(target[r]) > limit) fast = false;
  }
  if (!fast) return SlowSearch(m, bound, goal, target).run();

  std::vector<std::vector<std::int64_t>> col_data(cols, std::vector<std::int64_t>(rows));
  std::vector<std::vector<std::int64_t>> reach64(cols + 1, std::vector<std::int64_t>(rows));
  for (std::size_t d = 0; d <= cols; ++d)
    for (std::size_t r = 0; r < rows; ++r) {
      reach64[d][r] = reach[d][r].get_si();
      if (d < cols) col_data[d][r] = m(r, d).get_si();
    }
  std::vector<std::int64_t> t64;
  if (goal == BoxGoal::Equals)
    for (const auto& t : target) t64.push_back(t.get_si());
  return FastSearch(std::move(col_data), std::move(reach64), bound, goal, std::move(t64)).run();
}

}  // namespace kgraph::detail

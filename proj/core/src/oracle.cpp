#include "kgraph/oracle.hpp"

#include <cmath>
#include <random>

#include "box_search.hpp"
#include "kgraph/errors.hpp"

namespace kgraph {

namespace {

// std::uniform_int_distribution is not specified bit-for-bit, so draws go
// through plain rejection on the engine output.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

void check_config(const GeneratorConfig& cfg) {
  if (cfg.n == 0 || cfg.k == 0 || cfg.max_entry == 0)
    throw Error(ErrorCode::InvalidInput, "generator needs n >= 1, k >= 1 and max_entry >= 1");
}

bool bounded(const IntMatrix& a, std::uint64_t max_entry) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > max_entry) return false;
  return true;
}

// Each row gets one or two nonzero entries in [1, max_entry].
IntMatrix sparse_rows(Draw& d, std::size_t n, std::uint64_t max_entry) {
  IntMatrix a(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t count = 1 + d.below(2);
    for (std::size_t t = 0; t < count; ++t)
      a(v, d.below(n)) = static_cast<unsigned long>(d.between(1, max_entry));
  }
  return a;
}

// Exactly one 1 per row; such a matrix always fixes the all-ones vector.
IntMatrix functional(Draw& d, std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t v = 0; v < n; ++v) a(v, d.below(n)) = 1;
  return a;
}

IntMatrix random_permutation(Draw& d, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[d.below(i)]);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, p[i]) = 1;
  return a;
}

std::vector<IntMatrix> polynomial_strategy(Draw& d, const GeneratorConfig& cfg) {
  const std::size_t n = cfg.n;
  const IntMatrix base = d.coin() ? functional(d, n) : sparse_rows(d, n, cfg.max_entry);
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix sq = base * base;
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < cfg.k; ++i) {
    IntMatrix a;
    bool ok = false;
    for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
      if (d.coin()) {
        // A single monomial: identity, C or C^2.
        const std::uint64_t which = d.below(3);
        a = which == 0 ? id : which == 1 ? base : sq;
      } else {
        Integer c0 = static_cast<unsigned long>(d.below(2));
        Integer c1 = static_cast<unsigned long>(d.below(2));
        Integer c2 = static_cast<unsigned long>(d.below(2));
        if (c0 == 0 && c1 == 0 && c2 == 0) c1 = 1;
        a = IntMatrix(n, n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) a(r, c) = c0 * id(r, c) + c1 * base(r, c) + c2 * sq(r, c);
      }
      ok = bounded(a, cfg.max_entry);
    }
    if (!ok) a = bounded(base, cfg.max_entry) ? base : id;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<IntMatrix> permutation_strategy(Draw& d, const GeneratorConfig& cfg) {
  const std::size_t n = cfg.n;
  const IntMatrix p = random_permutation(d, n);
  std::vector<IntMatrix> powers{IntMatrix::identity(n)};
  for (std::size_t j = 1; j < n; ++j) powers.push_back(powers.back() * p);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < cfg.k; ++i) {
    IntMatrix a = powers[d.below(powers.size())];
    if (d.coin()) {
      IntMatrix candidate = a + powers[d.below(powers.size())];
      const auto s = static_cast<unsigned long>(d.below(cfg.max_entry));
      for (std::size_t r = 0; r < n; ++r) candidate(r, r) += s;
      if (bounded(candidate, cfg.max_entry)) a = std::move(candidate);
    }
    out.push_back(std::move(a));
  }
  return out;
}

// Proposal for rejection sampling: each row is either a weighted loop or a
// sparse row. The loop-heavy mass makes commuting draws far more likely
// than sparse_rows alone while still reaching every sparse pattern.
IntMatrix rejection_proposal(Draw& d, std::size_t n, std::uint64_t max_entry) {
  IntMatrix a(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (d.coin()) {
      a(v, v) = static_cast<unsigned long>(d.between(1, max_entry));
      continue;
    }
    const std::size_t count = 1 + d.below(2);
    for (std::size_t t = 0; t < count; ++t)
      a(v, d.below(n)) = static_cast<unsigned long>(d.between(1, max_entry));
  }
  return a;
}

std::vector<IntMatrix> rejection_strategy(Draw& d, const GeneratorConfig& cfg) {
  // After kPatience consecutive rejections the most recently accepted matrix
  // is dropped, so one draw with a small commutant cannot stall the search.
  constexpr std::size_t kPatience = 32;
  std::vector<IntMatrix> out;
  std::size_t attempts = 0, stalled = 0;
  while (out.size() < cfg.k) {
    if (attempts++ >= cfg.max_attempts)
      throw Error(ErrorCode::GenerationFailed, "no commuting sample within " +
                                                   std::to_string(cfg.max_attempts) + " attempts");
    IntMatrix a = rejection_proposal(d, cfg.n, cfg.max_entry);
    bool commutes = true;
    for (const auto& b : out) commutes = commutes && a * b == b * a;
    if (commutes) {
      out.push_back(std::move(a));
      stalled = 0;
    } else if (++stalled == kPatience) {
      out.pop_back();
      stalled = 0;
    }
  }
  return out;
}

}  // namespace

std::optional<PositiveWitness> box_witness_search(const KGraph& g, std::int64_t bound,
                                                  const OracleOptions& options) {
  if (bound < 0) throw Error(ErrorCode::InvalidInput, "box bound must be nonnegative");
  const double vars = static_cast<double>(g.rank() * g.size());
  const double log_box = vars * std::log(2.0 * static_cast<double>(bound) + 1.0);
  if (log_box > std::log(options.max_box))
    throw Error(ErrorCode::BoxTooLarge, "box (2B+1)^" + std::to_string(g.rank() * g.size()) +
                                            " exceeds the configured cap");
  const std::size_t n = g.size();
  IntMatrix m(n, g.rank() * n);
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, i * n + c) = (r == c ? 1 : 0) - g.matrix(i)(c, r);
  const auto z = detail::box_search(m, bound, detail::BoxGoal::NonnegativeNonzero);
  if (!z) return std::nullopt;
  PositiveWitness w;
  for (std::size_t i = 0; i < g.rank(); ++i)
    w.x.emplace_back(z->begin() + static_cast<long>(i * n), z->begin() + static_cast<long>((i + 1) * n));
  w.c = m * *z;
  return w;
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Polynomial: return "polynomial";
    case Strategy::Permutation: return "permutation";
    case Strategy::Rejection: return "rejection";
  }
  return "polynomial";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  for (Strategy s : {Strategy::Polynomial, Strategy::Permutation, Strategy::Rejection})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

KGraph random_kgraph(const GeneratorConfig& cfg) {
  check_config(cfg);
  Draw d(cfg.seed);
  switch (cfg.strategy) {
    case Strategy::Polynomial: return make_kgraph(polynomial_strategy(d, cfg));
    case Strategy::Permutation: return make_kgraph(permutation_strategy(d, cfg));
    case Strategy::Rejection: return make_kgraph(rejection_strategy(d, cfg));
  }
  throw Error(ErrorCode::InvalidInput, "unknown strategy");
}

KGraph random_digraph(const GeneratorConfig& cfg) {
  check_config(cfg);
  Draw d(cfg.seed);
  const std::size_t n = cfg.n;
  IntMatrix a(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (d.coin()) {
      a(v, d.below(n)) = 1;
      continue;
    }
    const std::size_t count = 1 + d.below(2);
    for (std::size_t t = 0; t < count; ++t)
      a(v, d.below(n)) = static_cast<unsigned long>(d.between(1, cfg.max_entry));
  }
  return make_kgraph({a});
}

}  // namespace kgraph

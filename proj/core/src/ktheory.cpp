#include "kgraph/ktheory.hpp"

#include <limits>
#include <unordered_set>

#include "box_search.hpp"
#include "kgraph/errors.hpp"

namespace kgraph {

namespace {

bool support_is_acyclic(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (sgn(a(v, w)) != 0) ++indegree[w];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++done;
    for (std::size_t w = 0; w < n; ++w)
      if (sgn(a(v, w)) != 0 && --indegree[w] == 0) ready.push_back(w);
  }
  return done == n;
}

IntMatrix one_minus_transpose(const IntMatrix& a) {
  return IntMatrix::identity(a.rows()) - a.transpose();
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_rank_two(const KGraph& g, const char* what) {
  if (g.rank() != 2) throw Error(ErrorCode::InvalidInput, std::string(what) + " requires k = 2");
}

// Row index of U behind every canonical coordinate, torsion first.
std::vector<std::size_t> coordinate_rows(const CokerPresentation& p) {
  std::vector<std::size_t> torsion, free;
  const std::size_t n = p.source.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const bool has_factor = i < p.invariant_factors.size();
    if (has_factor && p.invariant_factors[i] == 1) continue;
    if (has_factor && sgn(p.invariant_factors[i]) != 0)
      torsion.push_back(i);
    else
      free.push_back(i);
  }
  torsion.insert(torsion.end(), free.begin(), free.end());
  return torsion;
}

}  // namespace

IntVector CokerPresentation::moduli() const {
  IntVector out = torsion;
  out.resize(torsion.size() + free_rank, 0);
  return out;
}

IntVector CokerPresentation::project(const IntVector& y) const {
  if (y.size() != source.rows())
    throw Error(ErrorCode::LengthMismatch, "cokernel projection: vector has wrong length");
  const IntVector uy = smith.U * y;
  const std::vector<std::size_t> rows = coordinate_rows(*this);
  const IntVector mods = moduli();
  IntVector out(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    out[j] = sgn(mods[j]) == 0 ? uy[rows[j]] : mod_floor(uy[rows[j]], mods[j]);
  return out;
}

IntVector CokerPresentation::lift(const IntVector& coords) const {
  if (coords.size() != dimension())
    throw Error(ErrorCode::LengthMismatch, "cokernel lift: wrong number of coordinates");
  const std::vector<std::size_t> rows = coordinate_rows(*this);
  IntVector e(source.rows());
  for (std::size_t j = 0; j < rows.size(); ++j) e[rows[j]] = coords[j];
  const auto y = lattice_member(smith.U, e);
  if (!y) throw Error(ErrorCode::Internal, "cokernel lift: U is not unimodular");
  return *y;
}

CokerPresentation cokernel(const IntMatrix& b) {
  CokerPresentation p;
  p.source = b;
  p.smith = smith_normal_form(b);
  p.invariant_factors = p.smith.invariant_factors;
  for (const auto& d : p.invariant_factors)
    if (d > 1) p.torsion.push_back(d);
  p.free_rank = b.rows() - p.smith.rank();
  for (std::size_t v = 0; v < b.rows(); ++v) {
    IntVector e(b.rows());
    e[v] = 1;
    p.generator_images.push_back(p.project(e));
  }
  return p;
}

CokerPresentation coker_presentation(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::InvalidInput, "coker_presentation requires a square matrix");
  CokerPresentation p = cokernel(one_minus_transpose(a));
  p.cone_is_exact = support_is_acyclic(a);
  return p;
}

CokerEndomorphism induced_coker_endo(const KGraph& g) {
  require_rank_two(g, "induced_coker_endo");
  const IntMatrix a1t = g.matrix(0).transpose();
  const IntMatrix b = one_minus_transpose(g.matrix(1));
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!lattice_member(b, a1t * b.column(j)))
      throw Error(ErrorCode::WellDefinednessFailure,
                  "A_1^t does not preserve im(1 - A_2^t) at column " + std::to_string(j));

  CokerEndomorphism out{cokernel(b), {}};
  const std::size_t dim = out.coker.dimension();
  out.action = IntMatrix(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    IntVector coords(dim);
    coords[j] = 1;
    const IntVector image = out.coker.project(a1t * out.coker.lift(coords));
    for (std::size_t i = 0; i < dim; ++i) out.action(i, j) = image[i];
  }
  return out;
}

bool limit_equal(const LimitElement& a, const LimitElement& b) {
  if (!(a.generator == b.generator))
    throw Error(ErrorCode::GeneratorMismatch, "limit elements use different generator matrices");
  const IntMatrix& m = a.generator;
  if (!m.square() || a.vec.size() != m.rows() || b.vec.size() != m.rows())
    throw Error(ErrorCode::LengthMismatch, "limit element vector does not match the generator");
  const LimitElement& early = a.stage <= b.stage ? a : b;
  const LimitElement& late = a.stage <= b.stage ? b : a;
  const StableKernel k = stable_kernel(m);
  const auto gap = static_cast<std::uint64_t>(late.stage - early.stage);
  const IntVector shifted = power(m, gap) * early.vec;
  const IntVector& other = late.vec;
  return k.contains(subtract(shifted, other));
}

std::optional<std::uint64_t> limit_positive_bounded(const LimitElement& a, std::uint64_t horizon) {
  if (!a.generator.square() || a.vec.size() != a.generator.rows())
    throw Error(ErrorCode::LengthMismatch, "limit element vector does not match the generator");
  IntVector v = a.vec;
  for (std::uint64_t m = 0;; ++m) {
    if (is_nonnegative(v)) return m;
    if (m == horizon) return std::nullopt;
    v = a.generator * v;
  }
}

struct HalphaSearcher::Impl {
  static constexpr std::size_t kMaxStates = std::size_t{1} << 21;

  std::size_t n = 0;
  std::int64_t bound = 0;
  IntMatrix m;  // (1 - A_1^t | 1 - A_2^t)
  CokerPresentation red;
  bool enumerated = false;
  std::vector<std::int64_t> lo, width;  // per-row key range
  std::unordered_set<std::uint64_t> finals;

  bool key(const IntVector& s, std::uint64_t& out) const {
    out = 0;
    std::uint64_t stride = 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (!s[r].fits_slong_p()) return false;
      const std::int64_t off = s[r].get_si() - lo[r];
      if (off < 0 || off >= width[r]) return false;
      out += static_cast<std::uint64_t>(off) * stride;
      stride *= static_cast<std::uint64_t>(width[r]);
    }
    return true;
  }

  // Forward enumeration of partial sums, dropping states that can no
  // longer end nonnegative.
  void enumerate() {
    const std::size_t cols = m.cols();
    if (bound > 1'000'000) return;
    std::vector<std::vector<std::int64_t>> reach(cols + 1, std::vector<std::int64_t>(n, 0));
    for (std::size_t d = cols; d-- > 0;)
      for (std::size_t r = 0; r < n; ++r) {
        if (!m(r, d).fits_slong_p() || abs(m(r, d)) > 1'000'000) return;
        reach[d][r] = reach[d + 1][r] + bound * std::abs(m(r, d).get_si());
      }
    std::uint64_t space = 1;
    lo.assign(n, 0);
    width.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      lo[r] = -reach[0][r];
      width[r] = 2 * reach[0][r] + 1;
      const auto w = static_cast<std::uint64_t>(width[r]);
      if (space > std::numeric_limits<std::uint64_t>::max() / w) return;
      space *= w;
    }
    std::vector<std::vector<std::int64_t>> layer{std::vector<std::int64_t>(n, 0)};
    for (std::size_t d = 0; d < cols; ++d) {
      std::unordered_set<std::uint64_t> seen;
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& s : layer)
        for (std::int64_t v = -bound; v <= bound; ++v) {
          std::vector<std::int64_t> t = s;
          bool ok = true;
          std::uint64_t k = 0, stride = 1;
          for (std::size_t r = 0; r < n; ++r) {
            t[r] += v * m(r, d).get_si();
            if (t[r] + reach[d + 1][r] < 0) ok = false;
            k += static_cast<std::uint64_t>(t[r] - lo[r]) * stride;
            stride *= static_cast<std::uint64_t>(width[r]);
          }
          if (!ok || !seen.insert(k).second) continue;
          next.push_back(std::move(t));
          if (next.size() > kMaxStates) return;
        }
      layer = std::move(next);
    }
    for (const auto& s : layer) {
      std::uint64_t k = 0, stride = 1;
      for (std::size_t r = 0; r < n; ++r) {
        k += static_cast<std::uint64_t>(s[r] - lo[r]) * stride;
        stride *= static_cast<std::uint64_t>(width[r]);
      }
      finals.insert(k);
    }
    enumerated = true;
  }
};

HalphaSearcher::HalphaSearcher(const KGraph& g, std::int64_t bound) : impl_(new Impl) {
  require_rank_two(g, "halpha_class_test");
  if (bound < 0) {
    delete impl_;
    throw Error(ErrorCode::InvalidInput, "box bound must be nonnegative");
  }
  impl_->n = g.size();
  impl_->bound = bound;
  const IntMatrix b1 = one_minus_transpose(g.matrix(0));
  const IntMatrix b2 = one_minus_transpose(g.matrix(1));
  impl_->m = IntMatrix(g.size(), 2 * g.size());
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g.size(); ++c) {
      impl_->m(r, c) = b1(r, c);
      impl_->m(r, g.size() + c) = b2(r, c);
    }
  impl_->red = cokernel(b2);
  impl_->enumerate();
}

HalphaSearcher::~HalphaSearcher() { delete impl_; }

std::optional<HalphaDecomposition> HalphaSearcher::test(const IntVector& c) const {
  const Impl& s = *impl_;
  if (c.size() != s.n) throw Error(ErrorCode::LengthMismatch, "class test vector has wrong length");
  if (!is_nonnegative(c)) throw Error(ErrorCode::InvalidInput, "class test vector must be nonnegative");
  if (is_zero(s.red.project(c))) return std::nullopt;
  if (s.enumerated) {
    std::uint64_t k = 0;
    if (!s.key(c, k) || !s.finals.count(k)) return std::nullopt;
  }
  const auto z = detail::box_search(s.m, s.bound, detail::BoxGoal::Equals, c);
  if (!z) return std::nullopt;
  HalphaDecomposition out;
  out.x.assign(z->begin(), z->begin() + static_cast<long>(s.n));
  out.y.assign(z->begin() + static_cast<long>(s.n), z->end());
  return out;
}

std::optional<HalphaDecomposition> halpha_class_test(const KGraph& g, const IntVector& c,
                                                     std::int64_t bound) {
  require_rank_two(g, "halpha_class_test");
  if (c.size() != g.size()) throw Error(ErrorCode::LengthMismatch, "class test vector has wrong length");
  if (!is_nonnegative(c)) throw Error(ErrorCode::InvalidInput, "class test vector must be nonnegative");
  if (bound < 0) throw Error(ErrorCode::InvalidInput, "box bound must be nonnegative");
  const IntMatrix b2 = one_minus_transpose(g.matrix(1));
  if (lattice_member(b2, c)) return std::nullopt;
  const IntMatrix b1 = one_minus_transpose(g.matrix(0));
  IntMatrix m(g.size(), 2 * g.size());
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t col = 0; col < g.size(); ++col) {
      m(r, col) = b1(r, col);
      m(r, g.size() + col) = b2(r, col);
    }
  const auto z = detail::box_search(m, bound, detail::BoxGoal::Equals, c);
  if (!z) return std::nullopt;
  HalphaDecomposition out;
  out.x.assign(z->begin(), z->begin() + static_cast<long>(g.size()));
  out.y.assign(z->begin() + static_cast<long>(g.size()), z->end());
  return out;
}

}  // namespace kgraph

// Finite-stage K-theory data: cokernels of 1 - A^t with canonical
// coordinates, the induced endomorphism of coker(1 - A_2^t) for 2-graphs,
// and stationary direct limits lim(Z^N, A^t) at integer stages.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/hermite.hpp"
#include "kgraph/integer.hpp"

namespace kgraph {

/// coker B = Z^N / im B  ~  (+)_{d_i > 1} Z/d_i  (+)  Z^{free_rank}, via the
/// Smith form D = U B V. Canonical coordinates of y are (U y)_i reduced into
/// [0, d_i) for every torsion index, followed by (U y)_i for every free one.
struct CokerPresentation {
  IntMatrix source;  // B
  SmithForm smith;
  IntVector invariant_factors;
  std::size_t free_rank = 0;
  IntVector torsion;  // the factors d_i > 1, in order
  /// Images of the standard basis vectors. For a cycle-free graph these
  /// generate the image of the positive cone; otherwise they are only
  /// formal generators.
  std::vector<IntVector> generator_images;
  bool cone_is_exact = false;

  /// Number of canonical coordinates (torsion + free).
  std::size_t dimension() const { return torsion.size() + free_rank; }
  /// Modulus of each coordinate; 0 marks a free coordinate.
  IntVector moduli() const;
  IntVector project(const IntVector& y) const;
  /// A vector of Z^N whose class has the given canonical coordinates.
  IntVector lift(const IntVector& coords) const;
};

/// Presentation of coker B for an arbitrary integer matrix B.
CokerPresentation cokernel(const IntMatrix& b);

/// Presentation of coker(1 - A^t); cone_is_exact iff A has no cycle.
CokerPresentation coker_presentation(const IntMatrix& a);

struct CokerEndomorphism {
  CokerPresentation coker;  // coker(1 - A_2^t)
  IntMatrix action;         // dimension x dimension, columns are images of coordinate generators
};

/// Action of A_1^t on coker(1 - A_2^t). Requires k = 2.
/// Throws Error(WellDefinednessFailure) if A_1^t does not preserve im(1 - A_2^t).
CokerEndomorphism induced_coker_endo(const KGraph& g);

/// An element of lim(Z^N, A^t): vec placed at stage `stage`, where the map
/// from stage m to m + 1 is the generator matrix.
struct LimitElement {
  std::int64_t stage = 0;
  IntVector vec;
  IntMatrix generator;
};

/// Throws Error(GeneratorMismatch) when the generators differ and
/// Error(LengthMismatch) when a vector has the wrong length.
bool limit_equal(const LimitElement& a, const LimitElement& b);

/// Least m <= horizon with generator^m vec >= 0. No answer means
/// undetermined, never "not positive".
std::optional<std::uint64_t> limit_positive_bounded(const LimitElement& a, std::uint64_t horizon);

struct HalphaDecomposition {
  IntVector x;
  IntVector y;
};

/// First (x, y) in [-B, B]^{2N}, in the box-search order of
/// box_witness_search, with
/// c = (1 - A_1^t) x + (1 - A_2^t) y, provided c has a nonzero class in
/// coker(1 - A_2^t). Requires k = 2 and c >= 0.
std::optional<HalphaDecomposition> halpha_class_test(const KGraph& g, const IntVector& c,
                                                     std::int64_t bound);

/// Reusable form of halpha_class_test for many c over one graph and box:
/// precomputes every reachable value of (1 - A_1^t) x + (1 - A_2^t) y when
/// that set stays below a cap, and falls back to search otherwise.
class HalphaSearcher {
 public:
  HalphaSearcher(const KGraph& g, std::int64_t bound);
  ~HalphaSearcher();
  HalphaSearcher(const HalphaSearcher&) = delete;
  HalphaSearcher& operator=(const HalphaSearcher&) = delete;

  std::optional<HalphaDecomposition> test(const IntVector& c) const;

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace kgraph

// The Stiemke alternative for an integer matrix M (N x P): exactly one of
//   Witness:        x in Z^P with M x >= 0 and M x != 0
//   PositiveKernel: xi in Q^N with xi > 0 and M^t xi = 0
// is solvable. Decided by exact rational linear programming.
#pragma once

#include <variant>

#include "kgraph/integer.hpp"
#include "kgraph/lp.hpp"

namespace kgraph {

struct Witness {
  IntVector x;
  IntVector image;  // M x
};

struct PositiveKernel {
  RatVector xi;
};

using Alternative = std::variant<Witness, PositiveKernel>;

/// maximize t  s.t.  M^t xi = 0,  xi_v - t >= 0,  sum xi = 1.
/// Variables: xi_0..xi_{N-1}, then t; all free.
LpProblem positive_kernel_program(const IntMatrix& m);

/// Feasibility of  M x >= 0 (per row),  1^t M x >= 1;  x free, objective 0.
LpProblem witness_program(const IntMatrix& m);

/// Throws Error(EmptyDimension) when M has no rows.
Alternative stiemke_alternative(const IntMatrix& m);

bool verify_witness(const IntMatrix& m, const Witness& w);
bool verify_positive_kernel(const IntMatrix& m, const PositiveKernel& k);

/// The certificate of the opposite branch being impossible, read off the LP
/// that was not used: for a PositiveKernel answer this is a Farkas vector of
/// witness_program; for a Witness answer it is the optimal value t* <= 0 of
/// positive_kernel_program. Returns true iff that exclusivity check holds.
bool opposite_branch_infeasible(const IntMatrix& m, const Alternative& a);

}  // namespace kgraph

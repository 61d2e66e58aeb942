#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "covg/rational.hpp"

namespace covg {

/// a . x + constant over an ambient space of fixed dimension.
struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;

  std::size_t dimension() const { return coeffs.size(); }
  Rational operator()(std::span<const Rational> x) const;
  AffineForm operator-() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase primal simplex on a dense tableau over exact rationals with
/// Bland's rule for both entering and leaving variables (terminates without
/// cycling; no tolerances anywhere).
LpResult solve_lp(const LinearProgram& lp);

/// Open system: strict(x) > 0 for every strict form, eq(x) = 0 for every equality.
struct StrictSystem {
  std::size_t dimension = 0;
  std::vector<AffineForm> strict;
  std::vector<AffineForm> equalities;
};

struct Feasibility {
  bool feasible = false;
  std::optional<std::vector<Rational>> witness;
};

/// Decides strict feasibility by maximizing a slack t with strict(x) >= t,
/// 0 <= t <= 1, equalities exact. Feasible iff the optimal t is positive;
/// the witness then satisfies every strict form with margin t.
Feasibility lp_strict_feasible(const StrictSystem& system);

}  // namespace covg

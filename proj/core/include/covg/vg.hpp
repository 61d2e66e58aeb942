#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "covg/hilbert.hpp"
#include "covg/ideals.hpp"

namespace covg {

struct NbcStratum {
  ElementSet flat;
  std::size_t codim = 0;
  std::size_t size = 0;  // #NBC(M^F)
};

struct NbcBasis {
  /// prod_{i in N} y_i^+ over N in NBC(M), small variables.
  std::vector<Monomial> small;
  /// z_{B(F)} * prod_{i in N} y_i^+ over flats F and N in NBC(M^F), big variables.
  std::vector<Monomial> big;
  /// One entry per flat, in flat order; the big list is their concatenation.
  std::vector<NbcStratum> strata;
};

NbcBasis nbc_basis(const COM& m, const TotalOrder& order, const BasicChoice& basic);
NbcBasis nbc_basis(const COM& m, const TotalOrder& order);

struct NbcHilbert {
  HilbertSeries small;  // sum over N in NBC(M) of q^|N|
  HilbertSeries big;    // sum over flats of q^codim(F) * small(M^F)
};

NbcHilbert hilbert_via_nbc(const COM& m, const TotalOrder& order);

struct VerifyOptions {
  FieldSpec field;
  /// Exhaust every admissible J on symmetric circuits with at most this support size.
  std::size_t exhaustive_j_support = 5;
};

struct TheoremReport : CheckReport {
  std::size_t generators_checked = 0;
  std::size_t j_variants_checked = 0;
  HilbertSeries rank_series;
  HilbertSeries nbc_series;
};

/// Membership of every tilde and big generator in gr I of the big locus,
/// N-hat a basis of the big locus, rank and NBC Hilbert series equal, and
/// membership of the family (5) generator for every admissible J. The N-hat
/// list and the Hilbert series do not depend on J, so the basis and series
/// checks cover every J at once.
TheoremReport verify_theorem_big(const COM& m, const TotalOrder& order, const VerifyOptions& options = {});

/// Graded small generators lie in gr I of the small locus, affine generators
/// vanish on it, small NBC monomials form a basis, rank series equals the NBC
/// series. Requires a coloop-free COM (nonempty small locus).
TheoremReport verify_small_generators(const COM& m, const TotalOrder& order, const VerifyOptions& options = {});

}  // namespace covg

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covg/signed_vector.hpp"

namespace covg {

/// Outcome of checking face symmetry and strong elimination on a family.
struct AxiomReport {
  struct FaceSymmetryWitness {
    SignedVector x, y;  // X o -Y is missing
  };
  struct EliminationWitness {
    SignedVector x, y;
    std::size_t element;  // i in Sep(X,Y) with no eliminating Z
  };

  bool face_symmetry = true;
  std::optional<FaceSymmetryWitness> face_symmetry_witness;
  bool strong_elimination = true;
  std::optional<EliminationWitness> elimination_witness;

  bool ok() const { return face_symmetry && strong_elimination; }
};

/// Brute-force axiom check, O(|family|^2 * (|family| + |I|)).
/// All vectors must share one length. The family is deduplicated first.
AxiomReport check_axioms(std::span<const SignedVector> family, unsigned threads = 1);

/// A conditional oriented matroid: ground set plus a sorted, deduplicated covector family.
class COM {
 public:
  /// Validates the axioms; throws Errc::AxiomViolation on failure.
  COM(GroundSet ground, std::vector<SignedVector> covectors);

  /// Skips axiom validation. Only for negative tests and internal derived
  /// constructions whose validity is already known.
  static COM unchecked(GroundSet ground, std::vector<SignedVector> covectors);

  const GroundSet& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  const std::vector<SignedVector>& covectors() const { return covectors_; }
  std::size_t size() const { return covectors_.size(); }
  bool contains(const SignedVector& x) const;
  /// Position of `x` in covectors(), or npos.
  std::size_t index_of(const SignedVector& x) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const COM&, const COM&) = default;

 private:
  struct Unchecked {};
  COM(Unchecked, GroundSet ground, std::vector<SignedVector> covectors);

  GroundSet ground_;
  std::vector<SignedVector> covectors_;
};

std::vector<SignedVector> topes(const COM& m);
ElementSet coloops(const COM& m);

/// The flats of M ordered by mask value, with the covering relation.
class FlatPoset {
 public:
  explicit FlatPoset(std::vector<ElementSet> flats);

  const std::vector<ElementSet>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  bool contains(ElementSet f) const;
  std::size_t index_of(ElementSet f) const;
  ElementSet minimum() const { return minimum_; }
  /// Pairs (a, b) of indices with flats()[a] covered by flats()[b].
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

 private:
  std::vector<ElementSet> flats_;
  ElementSet minimum_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

FlatPoset flat_poset(const COM& m);

/// M|_F on the ground set F. Throws Errc::NotAFlat.
COM restrict(const COM& m, ElementSet flat);
/// M^F on the ground set I - F. Throws Errc::NotAFlat.
COM contract(const COM& m, ElementSet flat);

/// A signed permutation of the ground indices: element i goes to perm[i]
/// and its sign is multiplied by signs[i].
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<std::size_t> perm, std::vector<Sign> signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t size() const { return perm_.size(); }
  std::size_t image(std::size_t i) const { return perm_[i]; }
  Sign sign(std::size_t i) const { return signs_[i]; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Sign>& signs() const { return signs_; }

  bool is_identity() const;
  SignedPermutation inverse() const;
  ElementSet image(ElementSet s) const;

  /// Restriction to a subset mapped onto itself, re-indexed; throws
  /// Errc::InvalidChoice if the subset is not stable.
  SignedPermutation restrict_to(ElementSet stable) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<Sign> signs_;
};

/// (a * b) . X = a . (b . X)
SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

SignedVector act(const SignedPermutation& w, const SignedVector& x);
bool verify_automorphism(const COM& m, const SignedPermutation& w);

}  // namespace covg

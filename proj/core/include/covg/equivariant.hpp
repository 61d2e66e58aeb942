#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covg/com.hpp"
#include "covg/field.hpp"
#include "covg/hilbert.hpp"
#include "covg/locus.hpp"
#include "covg/matroidal.hpp"

namespace covg {

/// A finite group of signed permutations, closed from generators by
/// breadth-first multiplication. Elements are sorted; the identity comes first.
class GroupSpec {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  /// Throws Errc::LengthMismatch, Errc::CapExceeded.
  static GroupSpec generate(std::size_t ground_size, std::vector<SignedPermutation> generators,
                            std::size_t cap = kDefaultCap);
  /// A group given by its full element list; throws Errc::NotASubgroup unless closed.
  static GroupSpec from_elements(std::size_t ground_size, std::vector<SignedPermutation> elements);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<SignedPermutation>& generators() const { return generators_; }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const SignedPermutation& w) const;
  /// Position in elements(); throws Errc::NotASubgroup when absent.
  std::size_t index_of(const SignedPermutation& w) const;

  /// Throws Errc::NotAnAutomorphism naming the first failing generator.
  void require_automorphisms(const COM& m) const;

 private:
  std::size_t ground_size_ = 0;
  std::vector<SignedPermutation> generators_;
  std::vector<SignedPermutation> elements_;
};

/// sigma (0-based one-line notation) acting on the pairs (i, j), i < j, of the
/// braid ground set: (i, j) goes to the sorted pair of (sigma(i), sigma(j)),
/// with sign + when sigma(i) < sigma(j) and - otherwise.
SignedPermutation braid_action(const std::vector<std::size_t>& sigma);

/// S_n on the braid ground set, generated by the adjacent transpositions.
GroupSpec braid_symmetric_group(std::size_t n);

/// Every signed permutation of the ground set preserving M. Test utility for
/// |I| <= 6; throws Errc::CapExceeded beyond.
std::vector<SignedPermutation> automorphisms_bruteforce(const COM& m);

/// The point permutation induced by w on a covector-labeled locus: entry j
/// is the index of the point labeled w . X_j. Throws Errc::NotAnAutomorphism
/// when the image label is missing.
std::vector<std::uint32_t> locus_action(const PointLocus& locus, const SignedPermutation& w);

/// values[g][d] = trace of elements[g] on the degree-d piece F_d / F_{d-1}.
struct GradedCharacter {
  std::vector<SignedPermutation> elements;
  std::vector<std::vector<Rational>> values;

  std::size_t degrees() const;
  /// Value at element index g and degree d, 0 past the stored degrees.
  Rational at(std::size_t g, std::size_t d) const;
  /// Multiplication by q^k.
  GradedCharacter shifted(std::size_t k) const;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);
};

/// Traces of every element of G on the filtration pieces of the locus.
/// Over F_p the field must have p > max(|G|, 2 #points), and traces are lifted
/// to the symmetric residue range. Throws Errc::InvalidChoice for a small p.
GradedCharacter graded_character(const PointLocus& locus, const GroupSpec& g, const FieldSpec& field = {},
                                 unsigned threads = 1);

/// Same, for a locus acted on by G through `action` (point permutations per element).
GradedCharacter graded_character(const PointLocus& locus, const std::vector<SignedPermutation>& elements,
                                 const std::vector<std::vector<std::uint32_t>>& actions, const FieldSpec& field = {},
                                 unsigned threads = 1);

/// (Ind chi)(g) = (1/|H|) sum over x in G with x^-1 g x in H of chi(x^-1 g x),
/// degree by degree. chi.elements lists H. Throws Errc::NotASubgroup.
GradedCharacter induced_character(const GroupSpec& g, const GradedCharacter& chi);

struct ModuleReport : CheckReport {
  std::size_t flat_orbits = 0;
  GradedCharacter big;
  GradedCharacter induced_sum;
};

/// Compares the graded character of the big locus with the sum over flat
/// orbits (representative = lexicographically smallest flat) of the
/// character of the stabilizer on the small locus of the contraction,
/// shifted by codim(F) and induced to G.
ModuleReport verify_graded_module_structure(const COM& m, const GroupSpec& g, const FieldSpec& field = {},
                                            unsigned threads = 1);

}  // namespace covg

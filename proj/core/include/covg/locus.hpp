#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covg/com.hpp"
#include "covg/rational.hpp"

namespace covg {

enum class LabelKind { Covector, Permutation, OrderedSetPartition, Raw };

const char* to_string(LabelKind kind);

struct LocusPoint {
  std::string label;
  std::vector<Rational> coords;

  friend bool operator==(const LocusPoint&, const LocusPoint&) = default;
};

/// A finite labeled point set with named coordinates.
struct PointLocus {
  std::vector<std::string> variables;
  std::vector<LocusPoint> points;
  LabelKind kind = LabelKind::Raw;
  /// Set for loci whose theory assumes characteristic 0; engines refuse F_p.
  bool requires_char0 = false;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  /// Throws Errc::LengthMismatch or Errc::InvalidChoice (duplicate points or labels).
  void validate() const;
  /// Position of the point with this label; throws Errc::InvalidChoice if absent.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const PointLocus&, const PointLocus&) = default;
};

/// Variable names y<label>+ and y<label>- per element, in ground order.
std::vector<std::string> small_variable_names(const GroundSet& ground);
/// Variable names y<label>+, y<label>-, z<label> per element, in ground order.
std::vector<std::string> big_variable_names(const GroundSet& ground);

/// Index of y_i^s (s = + or -) in the small variable list.
inline std::uint32_t small_var(std::size_t i, Sign s) { return static_cast<std::uint32_t>(2 * i + (s == Sign::Plus ? 0 : 1)); }
/// Index of y_i^+, y_i^- (s = + or -) or z_i (s = 0) in the big variable list.
inline std::uint32_t big_var(std::size_t i, Sign s) {
  return static_cast<std::uint32_t>(3 * i + (s == Sign::Plus ? 0 : s == Sign::Minus ? 1 : 2));
}

/// One 0/1 point per tope, labeled by the tope.
PointLocus small_locus(const COM& m);
/// One 0/1 point per covector, labeled by the covector.
PointLocus big_locus(const COM& m);

/// Permutations of [n] as the points (w(1), ..., w(n)).
PointLocus kostant_locus(std::size_t n);
/// Coordinates indexed by nonempty proper subsets I of [n] (by size, then
/// lexicographic): (x_w)_I = w(j) - w(j+1) when I = {w(1), ..., w(j)}, else 0.
PointLocus permutohedral_locus(std::size_t n);
/// Permutation matrices flattened row by row: x_{ij} = 1 iff w(i) = j.
PointLocus permmatrix_locus(std::size_t n);

/// Largest n accepted by the permutation loci.
inline constexpr std::size_t kMaxPermutationLocus = 7;

/// All permutations of [n] in lexicographic order, 1-based one-line notation.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);
std::string one_line(const std::vector<std::size_t>& w);

}  // namespace covg

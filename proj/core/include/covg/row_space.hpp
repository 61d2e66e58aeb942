#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "covg/error.hpp"
#include "covg/field.hpp"

namespace covg {

/// Span of vectors in K^n kept in reduced row echelon form. Rows are stored
/// sparsely; every pivot column is zero in all rows but its own, where it is 1.
template <class K>
class RowSpace {
 public:
  using Element = typename K::Element;
  using SparseRow = std::vector<std::pair<std::uint32_t, Element>>;

  explicit RowSpace(std::size_t ambient = 0, K field = {})
      : ambient_(ambient), field_(std::move(field)), pivot_row_(ambient, kNoRow) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const K& field() const { return field_; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along the pivot coordinates.
  /// Zero iff v is in the span.
  std::vector<Element> residual(std::span<const Element> v) const {
    require_length(v.size());
    std::vector<Element> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Element c = v[pivots_[k]];
      if (K::is_zero(c)) continue;
      for (const auto& [j, x] : rows_[k]) r[j] -= c * x;
    }
    return r;
  }

  bool in_span(std::span<const Element> v) const {
    const auto r = residual(v);
    for (const auto& x : r) {
      if (!K::is_zero(x)) return false;
    }
    return true;
  }

  /// Adds v to the span; returns true iff the rank grew.
  bool insert(std::span<const Element> v) {
    auto r = residual(v);
    std::size_t pivot = ambient_;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!K::is_zero(r[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == ambient_) return false;
    const Element inv = field_.one() / r[pivot];
    SparseRow row;
    for (std::size_t j = pivot; j < r.size(); ++j) {
      if (!K::is_zero(r[j])) row.emplace_back(static_cast<std::uint32_t>(j), r[j] * inv);
    }
    // Clear the new pivot column from the existing rows.
    for (auto& other : rows_) {
      Element c = field_.zero();
      for (const auto& [j, x] : other) {
        if (j == pivot) {
          c = x;
          break;
        }
      }
      if (K::is_zero(c)) continue;
      other = axpy(other, c, row);
    }
    pivot_row_[pivot] = static_cast<std::uint32_t>(rows_.size());
    pivots_.push_back(static_cast<std::uint32_t>(pivot));
    rows_.push_back(std::move(row));
    return true;
  }

  /// Coordinates of v in the row basis; v must lie in the span.
  std::vector<Element> coordinates(std::span<const Element> v) const {
    std::vector<Element> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// Trace of the coordinate permutation (g f)[perm[j]] = f[j] restricted
  /// to this subspace. Throws Errc::NotInvariant when the image of a basis row
  /// leaves the span.
  Element trace_on_subspace(std::span<const std::uint32_t> perm) const {
    if (perm.size() != ambient_) throw Error(Errc::LengthMismatch, "permutation length");
    Element trace = field_.zero();
    std::vector<Element> image(ambient_, field_.zero());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::fill(image.begin(), image.end(), field_.zero());
      for (const auto& [j, x] : rows_[k]) image[perm[j]] = x;
      if (!in_span(image)) throw Error(Errc::NotInvariant, "subspace is not invariant under the permutation");
      trace += image[pivots_[k]];
    }
    return trace;
  }

 private:
  static constexpr std::uint32_t kNoRow = 0xFFFFFFFFU;

  void require_length(std::size_t n) const {
    if (n != ambient_) throw Error(Errc::LengthMismatch, "vector length differs from ambient dimension");
  }

  /// a - c * b on sparse rows.
  SparseRow axpy(const SparseRow& a, const Element& c, const SparseRow& b) const {
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
      if (j == b.end() || (i != a.end() && i->first < j->first)) {
        out.push_back(*i++);
      } else if (i == a.end() || j->first < i->first) {
        out.emplace_back(j->first, -(c * j->second));
        ++j;
      } else {
        Element x = i->second - c * j->second;
        if (!K::is_zero(x)) out.emplace_back(i->first, std::move(x));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t ambient_;
  K field_;
  std::vector<SparseRow> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint32_t> pivot_row_;
};

}  // namespace covg

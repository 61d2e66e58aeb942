#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covg/com.hpp"

namespace covg {

struct Circuit {
  SignedVector vector;
  bool symmetric = false;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// A total order on the ground indices, listed smallest first.
class TotalOrder {
 public:
  /// The ground-set label order.
  static TotalOrder natural(std::size_t n);
  explicit TotalOrder(std::vector<std::size_t> sequence);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  std::size_t rank(std::size_t element) const { return rank_[element]; }
  /// The smallest element of a nonempty subset under this order.
  std::size_t smallest(ElementSet s) const;
  /// The order induced on `subset`, re-indexed to 0..|subset|-1.
  TotalOrder restrict_to(ElementSet subset) const;

  friend bool operator==(const TotalOrder&, const TotalOrder&) = default;

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> rank_;
};

struct CircuitOptions {
  std::size_t max_ground = 14;
};

/// Direct check of both circuit conditions against M (corank-1 minimality).
bool is_circuit(const COM& m, const SignedVector& x);

/// All circuits, in canonical signed-vector order. Brute force over
/// {+,-,0}^I: X is a circuit iff no covector conforms to X while every
/// corank-1 signed subset of X has a conforming covector. Throws Errc::CapExceeded.
std::vector<Circuit> circuits(const COM& m, const CircuitOptions& options = {});

/// The NBC family for `order`, sorted by mask value.
std::vector<ElementSet> nbc_sets(const COM& m, const TotalOrder& order);
std::vector<ElementSet> nbc_sets(const COM& m, const TotalOrder& order, const std::vector<Circuit>& circuit_list);

/// Smallest flat containing `c`, or nullopt when no flat contains it.
std::optional<ElementSet> closure(const FlatPoset& flats, ElementSet c);
std::optional<ElementSet> closure(const COM& m, ElementSet c);

/// Basic sets of a flat, sorted by mask value. Throws Errc::NotAFlat.
std::vector<ElementSet> basic_sets(const FlatPoset& flats, ElementSet flat);
std::vector<ElementSet> basic_sets(const COM& m, ElementSet flat);

/// True iff `c` is basic for no flat.
bool nonbasic(const FlatPoset& flats, ElementSet c);
bool nonbasic(const COM& m, ElementSet c);

/// Inclusion-minimal nonbasic subsets of the ground set, sorted by mask value.
std::vector<ElementSet> minimal_nonbasic_sets(const COM& m);
std::vector<ElementSet> minimal_nonbasic_sets(const FlatPoset& flats, std::size_t ground_size);

/// Common size of the basic sets of a flat. Throws Errc::Internal if they
/// disagree, Errc::NotAFlat for non-flats.
std::size_t codim(const FlatPoset& flats, ElementSet flat);
std::size_t codim(const COM& m, ElementSet flat);

/// Report shared by the counting-lemma checks.
struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(std::string message) {
    pass = false;
    failures.push_back(std::move(message));
  }
  void merge(const CheckReport& other) {
    if (!other.pass) pass = false;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// #M = sum over flats of #topes(M^F), with X -> X|_(I-F) injective per flat.
struct TopeCountReport : CheckReport {
  std::size_t covectors = 0;
  std::vector<std::pair<ElementSet, std::size_t>> topes_per_flat;
};
TopeCountReport check_tope_contraction_count(const COM& m);

/// The ytilde values of the two-values lemma on one covector of M^F:
/// ytilde_i = y_i^{X(i)} (+ z_i when i in J), as 0/1.
struct TwoValuesReport : CheckReport {
  std::size_t covectors_checked = 0;
};
/// `x` is a symmetric circuit of contract(m, flat) (indices relative to I - F)
/// and `j` a nonempty proper subset of its support. Throws Errc::InvalidChoice.
TwoValuesReport check_two_values(const COM& m, ElementSet flat, const SignedVector& x, ElementSet j);
/// Every flat, every symmetric circuit of every contraction, every admissible J.
TwoValuesReport check_two_values_exhaustive(const COM& m);

/// Basic-set lemma: one cardinality per flat, and for nested flats F' in F
/// some basic B' of F' sits inside some basic B of F.
CheckReport check_basic_lemma(const COM& m);

/// #NBC(order) == #topes.
CheckReport check_nbc_tope_count(const COM& m, const TotalOrder& order);

}  // namespace covg

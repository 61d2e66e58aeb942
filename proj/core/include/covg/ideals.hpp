#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covg/com.hpp"
#include "covg/matroidal.hpp"
#include "covg/polynomial.hpp"

namespace covg {

enum class IdealKind { SmallAffine, SmallGraded, Tilde, Big };

const char* to_string(IdealKind kind);

struct Generator {
  QPolynomial poly;
  /// Which family of the presentation produced it, e.g. "circuit" or "flat-symmetric".
  std::string family;
};

/// B(F) for every flat F.
using BasicChoice = std::map<ElementSet, ElementSet>;

/// J(F, X) for a symmetric circuit X of M^F; both X and J are indexed on I - F.
using JChooser = std::function<ElementSet(ElementSet flat, const SignedVector& circuit)>;

struct JRecord {
  ElementSet flat;
  SignedVector circuit;
  ElementSet j;
};

struct IdealPresentation {
  IdealKind kind = IdealKind::SmallGraded;
  VariableList variables;
  std::vector<Generator> generators;
  std::optional<TotalOrder> order;
  BasicChoice basic_choice;
  std::vector<JRecord> j_choices;

  std::vector<QPolynomial> polynomials() const;
};

struct SmallIdealPresentations {
  IdealPresentation affine;
  IdealPresentation graded;
};

/// Generators of I(Y) (affine) and gr I(Y) (graded) on the small variables.
/// The lists involve circuits only; `order` is recorded for provenance.
SmallIdealPresentations small_ideal_generators(const COM& m, const TotalOrder& order);

/// Products over the minimal nonbasic sets (every nonbasic product is a
/// multiple of one), then differences over pairs of basic sets of each flat.
IdealPresentation tilde_ideal_generators(const COM& m);

/// B(F) = the basic set of F whose sorted element list is lexicographically smallest.
BasicChoice default_basic_choice(const COM& m);

/// J = { smallest element of Supp(X) under `order` restricted to I - F }.
JChooser default_j_chooser(const COM& m, const TotalOrder& order);

/// Generators of the big ideal: the tilde generators followed by families
/// (1) quadratic, (2) sum, (3) flat-linear, (4) flat-circuit, (5) flat-symmetric,
/// with z_F realized as the product of z_b over b in B(F).
/// Throws Errc::InvalidChoice for a B(F) that is not basic or a J outside
/// the nonempty proper subsets of Supp(X).
IdealPresentation big_ideal_generators(const COM& m, const TotalOrder& order, const BasicChoice& basic,
                                       const JChooser& j);
IdealPresentation big_ideal_generators(const COM& m, const TotalOrder& order);

/// z_F * e_{s-1}(ytilde_i : i in Supp(X)) for one flat, symmetric circuit and J.
QPolynomial flat_symmetric_generator(const COM& m, ElementSet flat, ElementSet basic, const SignedVector& circuit,
                                     ElementSet j, const VariableList& vars);

/// Ground indices of I - F in increasing order, i.e. the map from contraction
/// indices back to M.
std::vector<std::size_t> complement_indices(std::size_t ground_size, ElementSet flat);

}  // namespace covg

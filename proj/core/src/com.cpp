#include "covg/com.hpp"

#include <algorithm>
#include <unordered_set>

#include "covg/parallel.hpp"

namespace covg {
namespace {

std::vector<SignedVector> canonical(std::vector<SignedVector> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

void require_same_length(std::span<const SignedVector> family, std::size_t n) {
  for (const auto& x : family) {
    if (x.size() != n) throw Error(Errc::LengthMismatch, "covector " + x.to_string() + " has wrong length");
  }
}

}  // namespace

AxiomReport check_axioms(std::span<const SignedVector> input, unsigned threads) {
  AxiomReport report;
  if (input.empty()) return report;
  require_same_length(input, input.front().size());
  const auto family = canonical({input.begin(), input.end()});
  const std::unordered_set<SignedVector, SignedVectorHash> members(family.begin(), family.end());
  const std::size_t n = family.size();
  const std::uint64_t full = ElementSet::full(family.front().size()).bits();

  // Per-X first failure, merged in canonical order afterwards.
  std::vector<std::optional<AxiomReport::FaceSymmetryWitness>> face(n);
  std::vector<std::optional<AxiomReport::EliminationWitness>> elim(n);

  parallel_for(n, threads, [&](std::size_t a) {
    const auto& x = family[a];
    for (const auto& y : family) {
      if (!face[a] && !members.contains(compose(x, -y))) face[a] = {x, y};

      if (elim[a]) continue;
      const std::uint64_t sep = separator(x, y).bits();
      if (sep == 0) continue;
      const auto target = compose(x, y);
      const std::uint64_t outside = full & ~sep;
      const std::uint64_t want_plus = target.plus_bits() & outside;
      const std::uint64_t want_minus = target.minus_bits() & outside;
      std::uint64_t eliminated = 0;
      for (const auto& z : family) {
        if ((z.plus_bits() & outside) != want_plus || (z.minus_bits() & outside) != want_minus) continue;
        eliminated |= ~(z.plus_bits() | z.minus_bits()) & sep;
        if (eliminated == sep) break;
      }
      if (eliminated != sep) {
        elim[a] = AxiomReport::EliminationWitness{x, y, ElementSet(sep & ~eliminated).first()};
      }
    }
  });

  for (std::size_t a = 0; a < n; ++a) {
    if (face[a] && report.face_symmetry) {
      report.face_symmetry = false;
      report.face_symmetry_witness = face[a];
    }
    if (elim[a] && report.strong_elimination) {
      report.strong_elimination = false;
      report.elimination_witness = elim[a];
    }
  }
  return report;
}

COM::COM(GroundSet ground, std::vector<SignedVector> covectors)
    : COM(Unchecked{}, std::move(ground), std::move(covectors)) {
  const auto report = check_axioms(covectors_);
  if (!report.face_symmetry) {
    const auto& w = *report.face_symmetry_witness;
    throw Error(Errc::AxiomViolation, "face symmetry fails for X=" + w.x.to_string() +
                                          ", Y=" + w.y.to_string());
  }
  if (!report.strong_elimination) {
    const auto& w = *report.elimination_witness;
    throw Error(Errc::AxiomViolation, "strong elimination fails for X=" + w.x.to_string() +
                                          ", Y=" + w.y.to_string() + " at " +
                                          ground_.label(w.element));
  }
}

COM::COM(Unchecked, GroundSet ground, std::vector<SignedVector> covectors)
    : ground_(std::move(ground)), covectors_(canonical(std::move(covectors))) {
  if (covectors_.empty()) throw Error(Errc::AxiomViolation, "a COM needs at least one covector");
  require_same_length(covectors_, ground_.size());
}

COM COM::unchecked(GroundSet ground, std::vector<SignedVector> covectors) {
  return COM(Unchecked{}, std::move(ground), std::move(covectors));
}

std::size_t COM::index_of(const SignedVector& x) const {
  auto it = std::lower_bound(covectors_.begin(), covectors_.end(), x);
  if (it == covectors_.end() || *it != x) return npos;
  return static_cast<std::size_t>(it - covectors_.begin());
}

bool COM::contains(const SignedVector& x) const { return index_of(x) != npos; }

std::vector<SignedVector> topes(const COM& m) {
  std::vector<SignedVector> out;
  for (const auto& x : m.covectors()) {
    if (x.is_tope()) out.push_back(x);
  }
  return out;
}

ElementSet coloops(const COM& m) {
  ElementSet zero = ElementSet::full(m.ground_size());
  for (const auto& x : m.covectors()) zero = zero & x.zero_set();
  return zero;
}

FlatPoset::FlatPoset(std::vector<ElementSet> flats) : flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end());
  flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
  if (flats_.empty()) throw Error(Errc::Internal, "empty flat poset");

  ElementSet meet = flats_.front();
  for (auto f : flats_) meet = meet & f;
  for (std::size_t a = 0; a < flats_.size(); ++a) {
    for (std::size_t b = a + 1; b < flats_.size(); ++b) {
      if (!contains(flats_[a] & flats_[b])) {
        throw Error(Errc::Internal, "flats are not closed under intersection");
      }
    }
  }
  minimum_ = meet;

  for (std::size_t a = 0; a < flats_.size(); ++a) {
    for (std::size_t b = 0; b < flats_.size(); ++b) {
      if (a == b || !flats_[a].subset_of(flats_[b])) continue;
      bool covered = true;
      for (std::size_t c = 0; c < flats_.size() && covered; ++c) {
        if (c != a && c != b && flats_[a].subset_of(flats_[c]) && flats_[c].subset_of(flats_[b])) {
          covered = false;
        }
      }
      if (covered) covers_.emplace_back(a, b);
    }
  }
}

bool FlatPoset::contains(ElementSet f) const { return std::binary_search(flats_.begin(), flats_.end(), f); }

std::size_t FlatPoset::index_of(ElementSet f) const {
  auto it = std::lower_bound(flats_.begin(), flats_.end(), f);
  if (it == flats_.end() || *it != f) throw Error(Errc::NotAFlat, "not a flat");
  return static_cast<std::size_t>(it - flats_.begin());
}

FlatPoset flat_poset(const COM& m) {
  std::vector<ElementSet> flats;
  flats.reserve(m.size());
  for (const auto& x : m.covectors()) flats.push_back(x.zero_set());
  return FlatPoset(std::move(flats));
}

namespace {

void require_flat(const COM& m, ElementSet flat) {
  for (const auto& x : m.covectors()) {
    if (x.zero_set() == flat) return;
  }
  throw Error(Errc::NotAFlat, m.ground().format(flat) + " is not a flat");
}

}  // namespace

COM restrict(const COM& m, ElementSet flat) {
  require_flat(m, flat);
  std::vector<SignedVector> out;
  out.reserve(m.size());
  for (const auto& x : m.covectors()) out.push_back(x.restrict_to(flat));
  auto result = COM::unchecked(m.ground().subset(flat), std::move(out));
  if (!result.contains(SignedVector(flat.size()))) {
    throw Error(Errc::Internal, "restriction to a flat lacks the zero covector");
  }
  return result;
}

COM contract(const COM& m, ElementSet flat) {
  require_flat(m, flat);
  const ElementSet rest = ElementSet::full(m.ground_size()) - flat;
  std::vector<SignedVector> out;
  for (const auto& x : m.covectors()) {
    if (flat.subset_of(x.zero_set())) out.push_back(x.restrict_to(rest));
  }
  auto result = COM::unchecked(m.ground().subset(rest), std::move(out));
  if (!coloops(result).empty()) throw Error(Errc::Internal, "contraction has a coloop");
  return result;
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<Sign> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw Error(Errc::LengthMismatch, "perm and signs differ in length");
  std::vector<bool> hit(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || hit[p]) throw Error(Errc::InvalidChoice, "perm is not a bijection");
    hit[p] = true;
  }
  for (auto s : signs_) {
    if (s == Sign::Zero) throw Error(Errc::InvalidChoice, "signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return SignedPermutation(std::move(perm), std::vector<Sign>(n, Sign::Plus));
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i || signs_[i] != Sign::Plus) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<std::size_t> perm(size());
  std::vector<Sign> signs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return SignedPermutation(std::move(perm), std::move(signs));
}

ElementSet SignedPermutation::image(ElementSet s) const {
  ElementSet out;
  for (auto i : s.elements()) out.insert(perm_[i]);
  return out;
}

SignedPermutation SignedPermutation::restrict_to(ElementSet stable) const {
  if (image(stable) != stable) throw Error(Errc::InvalidChoice, "subset is not stable under the permutation");
  const auto elems = stable.elements();
  std::vector<std::size_t> position(size(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) position[elems[k]] = k;
  std::vector<std::size_t> perm;
  std::vector<Sign> signs;
  for (auto i : elems) {
    perm.push_back(position[perm_[i]]);
    signs.push_back(signs_[i]);
  }
  return SignedPermutation(std::move(perm), std::move(signs));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "signed permutation product");
  std::vector<std::size_t> perm(a.size());
  std::vector<Sign> signs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    perm[i] = a.image(b.image(i));
    signs[i] = b.sign(i) * a.sign(b.image(i));
  }
  return SignedPermutation(std::move(perm), std::move(signs));
}

SignedVector act(const SignedPermutation& w, const SignedVector& x) {
  if (w.size() != x.size()) throw Error(Errc::LengthMismatch, "act");
  SignedVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.set(w.image(i), w.sign(i) * x[i]);
  return out;
}

bool verify_automorphism(const COM& m, const SignedPermutation& w) {
  if (w.size() != m.ground_size()) return false;
  for (const auto& x : m.covectors()) {
    if (!m.contains(act(w, x))) return false;
  }
  return true;
}

}  // namespace covg

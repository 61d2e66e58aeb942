#include "covg/error.hpp"

namespace covg {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LengthMismatch: return "length mismatch";
    case Errc::AxiomViolation: return "axiom violation";
    case Errc::NotAFlat: return "not a flat";
    case Errc::CapExceeded: return "cap exceeded";
    case Errc::EmptyRegion: return "empty region";
    case Errc::EmptyLocus: return "empty locus";
    case Errc::UnknownFixture: return "unknown fixture";
    case Errc::InvalidChoice: return "invalid choice";
    case Errc::NotHomogeneous: return "not homogeneous";
    case Errc::NotInvariant: return "subspace not invariant";
    case Errc::NotAnAutomorphism: return "not an automorphism";
    case Errc::NotASubgroup: return "not a subgroup";
    case Errc::SizeMismatch: return "size mismatch";
    case Errc::Parse: return "parse error";
    case Errc::NonTermination: return "non-termination";
    case Errc::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace covg

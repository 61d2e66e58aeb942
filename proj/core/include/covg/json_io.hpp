#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "covg/arrangement.hpp"
#include "covg/com.hpp"
#include "covg/equivariant.hpp"
#include "covg/hilbert.hpp"
#include "covg/locus.hpp"

namespace covg {

/// Object keys keep insertion order, so output is stable and round-trips.
using Json = nlohmann::ordered_json;

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);
/// Throws Errc::Parse.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// {"ground": [...], "covectors": ["0+-+", ...]}
Json to_json(const COM& m);
/// Validates the axioms unless `check` is false. Throws Errc::Parse,
/// Errc::LengthMismatch, Errc::AxiomViolation.
COM com_from_json(const Json& j, bool check = true);

/// {"dimension": d, "forms": {"<label>": {"coeffs": [...], "const": "..."}}, "region": [...]}
Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

/// {"generators": [{"perm": [<image labels>], "signs": [1, -1, ...]}]}
Json to_json(const GroupSpec& g, const GroundSet& ground);
GroupSpec group_from_json(const Json& j, const GroundSet& ground);

/// {"variables": [...], "points": [{"label": "...", "coords": [...]}]}
Json to_json(const PointLocus& locus);
PointLocus locus_from_json(const Json& j);

/// {"coeffs": [1, 6, 6]}
Json to_json(const HilbertSeries& h);
HilbertSeries hilbert_from_json(const Json& j);

Json to_json(const SignedPermutation& w, const GroundSet& ground);

}  // namespace covg

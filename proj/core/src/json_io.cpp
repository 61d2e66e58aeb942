#include "covg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace covg {
namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, std::string(what) + ": " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

Json form_to_json(const AffineForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(format_rational(c));
  return Json{{"coeffs", coeffs}, {"const", format_rational(f.constant)}};
}

AffineForm form_from_json(const Json& j) {
  AffineForm f;
  for (const auto& c : member(j, "coeffs")) f.coeffs.push_back(parse_rational(c.get<std::string>()));
  f.constant = j.contains("const") ? parse_rational(j.at("const").get<std::string>()) : Rational(0);
  return f;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) { return parse_json(read_text_file(path)); }

Json to_json(const COM& m) {
  Json covectors = Json::array();
  for (const auto& x : m.covectors()) covectors.push_back(x.to_string());
  return Json{{"ground", m.ground().labels()}, {"covectors", covectors}};
}

COM com_from_json(const Json& j, bool check) {
  return guarded("COM", [&] {
    GroundSet ground(member(j, "ground").get<std::vector<std::string>>());
    std::vector<SignedVector> covectors;
    for (const auto& c : member(j, "covectors")) covectors.push_back(SignedVector::parse(c.get<std::string>()));
    return check ? COM(std::move(ground), std::move(covectors)) : COM::unchecked(std::move(ground), std::move(covectors));
  });
}

Json to_json(const Arrangement& a) {
  Json forms = Json::object();
  for (std::size_t k = 0; k < a.forms.size(); ++k) forms[a.labels[k]] = form_to_json(a.forms[k]);
  Json region = Json::array();
  for (const auto& f : a.region) region.push_back(form_to_json(f));
  return Json{{"dimension", a.dimension}, {"forms", forms}, {"region", region}};
}

Arrangement arrangement_from_json(const Json& j) {
  return guarded("arrangement", [&] {
    Arrangement a;
    a.dimension = member(j, "dimension").get<std::size_t>();
    for (const auto& [label, f] : member(j, "forms").items()) {
      a.labels.push_back(label);
      a.forms.push_back(form_from_json(f));
    }
    if (j.contains("region")) {
      for (const auto& f : j.at("region")) a.region.push_back(form_from_json(f));
    }
    a.validate();
    return a;
  });
}

Json to_json(const SignedPermutation& w, const GroundSet& ground) {
  Json perm = Json::array(), signs = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    perm.push_back(ground.label(w.image(i)));
    signs.push_back(static_cast<int>(w.sign(i)));
  }
  return Json{{"perm", perm}, {"signs", signs}};
}

Json to_json(const GroupSpec& g, const GroundSet& ground) {
  Json gens = Json::array();
  for (const auto& w : g.generators()) gens.push_back(to_json(w, ground));
  return Json{{"generators", gens}};
}

GroupSpec group_from_json(const Json& j, const GroundSet& ground) {
  return guarded("group", [&] {
    std::vector<SignedPermutation> gens;
    for (const auto& g : member(j, "generators")) {
      std::vector<std::size_t> perm;
      for (const auto& label : member(g, "perm")) perm.push_back(ground.index_of(label.get<std::string>()));
      std::vector<Sign> signs;
      if (g.contains("signs")) {
        for (const auto& s : g.at("signs")) {
          const int v = s.get<int>();
          if (v != 1 && v != -1) throw Error(Errc::Parse, "signs must be 1 or -1");
          signs.push_back(v == 1 ? Sign::Plus : Sign::Minus);
        }
      } else {
        signs.assign(perm.size(), Sign::Plus);
      }
      if (perm.size() != ground.size()) throw Error(Errc::LengthMismatch, "perm length differs from the ground set");
      gens.emplace_back(std::move(perm), std::move(signs));
    }
    return GroupSpec::generate(ground.size(), std::move(gens));
  });
}

Json to_json(const PointLocus& locus) {
  Json points = Json::array();
  for (const auto& p : locus.points) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(format_rational(c));
    points.push_back(Json{{"label", p.label}, {"coords", coords}});
  }
  return Json{{"variables", locus.variables}, {"points", points}};
}

PointLocus locus_from_json(const Json& j) {
  return guarded("locus", [&] {
    PointLocus locus;
    locus.variables = member(j, "variables").get<std::vector<std::string>>();
    for (const auto& p : member(j, "points")) {
      LocusPoint point{member(p, "label").get<std::string>(), {}};
      for (const auto& c : member(p, "coords")) {
        point.coords.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
      }
      locus.points.push_back(std::move(point));
    }
    locus.validate();
    return locus;
  });
}

Json to_json(const HilbertSeries& h) { return Json{{"coeffs", h.coeffs}}; }

HilbertSeries hilbert_from_json(const Json& j) {
  return guarded("hilbert series", [&] { return HilbertSeries{member(j, "coeffs").get<std::vector<std::uint64_t>>()}; });
}

}  // namespace covg

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covg/arrangement.hpp"
#include "covg/equivariant.hpp"
#include "covg/fixtures.hpp"
#include "covg/json_io.hpp"
#include "covg/matroidal.hpp"
#include "covg/permstats.hpp"
#include "covg/vg.hpp"

using namespace covg;

namespace {

constexpr std::size_t kStreamThreshold = 10000;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::Internal, "SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int k = 0; k < length; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[k]};
  return out.str();
}

struct Config {
  std::string format = "json";
  std::string field_text;
  unsigned threads = 1;
  bool timing = false;
  std::uint64_t seed = 0;

  FieldSpec field() const {
    if (!field_text.empty()) return FieldSpec::parse(field_text);
    if (const char* env = std::getenv("COVG_FIELD"); env != nullptr && *env != '\0') return FieldSpec::parse(env);
    return {};
  }
};

class Report {
 public:
  Report(std::string command, const Config& config) : command_(std::move(command)), config_(config) {
    start_ = std::chrono::steady_clock::now();
  }

  Json& results() { return results_; }
  void add_input(Json input) { inputs_.push_back(std::move(input)); }
  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    Json a{{"name", name}, {"pass", pass}};
    if (!detail.empty()) a["detail"] = detail;
    assertions_.push_back(std::move(a));
    pass_ = pass_ && pass;
  }
  bool pass() const { return pass_; }
  /// Large list moved out of the results and printed one JSON value per line.
  void stream(const std::string& key) { stream_key_ = key; }

  int emit() {
    Json config{{"field", config_.field().to_string()}, {"threads", config_.threads}, {"format", config_.format}};
    Json report{{"command", command_}, {"config", config}, {"inputs", inputs_}, {"results", results_},
                {"assertions", assertions_}, {"pass", pass_}};
    if (config_.timing) {
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      report["timing"] = Json{{"seconds", s}};
    }
    if (config_.format == "table") {
      print_table(report);
    } else if (!stream_key_.empty() && results_.contains(stream_key_) &&
               results_[stream_key_].size() > kStreamThreshold) {
      Json lines = std::move(report["results"][stream_key_]);
      report["results"][stream_key_] = Json{{"streamed", lines.size()}};
      std::cout << report.dump() << "\n";
      for (const auto& line : lines) std::cout << line.dump() << "\n";
    } else {
      std::cout << dump(report);
    }
    return pass_ ? 0 : 1;
  }

 private:
  static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static void print_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      std::cout << line << "\n";
    }
  }

  static void flatten(const std::string& prefix, const Json& v, std::vector<std::vector<std::string>>& rows,
                      std::vector<std::pair<std::string, Json>>& tables) {
    if (v.is_object()) {
      for (const auto& [k, x] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, x, rows, tables);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      tables.emplace_back(prefix, v);
    } else if (v.is_array()) {
      std::string joined;
      bool spaced = false;
      for (const auto& x : v) spaced = spaced || (x.is_string() && x.get<std::string>().find(' ') != std::string::npos);
      for (const auto& x : v) joined += (joined.empty() ? "" : spaced ? "; " : " ") + (x.is_array() ? x.dump() : scalar(x));
      rows.push_back({prefix, joined.empty() ? "(none)" : joined});
    } else {
      rows.push_back({prefix, scalar(v)});
    }
  }

  static void print_table(const Json& report) {
    std::vector<std::vector<std::string>> rows{{"command", report["command"].get<std::string>()},
                                               {"field", report["config"]["field"].get<std::string>()}};
    for (const auto& in : report["inputs"]) rows.push_back({"input", scalar(in["source"]) + "  sha256:" + scalar(in["sha256"])});
    std::vector<std::pair<std::string, Json>> tables;
    flatten("", report["results"], rows, tables);
    print_rows(rows);
    for (const auto& [name, list] : tables) {
      std::cout << "\n[" << name << "]\n";
      std::vector<std::string> header;
      for (const auto& [k, x] : list.front().items()) header.push_back(k);
      std::vector<std::vector<std::string>> t{header};
      for (const auto& item : list) {
        std::vector<std::string> r;
        for (const auto& k : header) r.push_back(item.contains(k) ? (item[k].is_array() || item[k].is_object() ? item[k].dump() : scalar(item[k])) : "");
        t.push_back(std::move(r));
      }
      print_rows(t);
    }
    if (!report["assertions"].empty()) {
      std::cout << "\n[assertions]\n";
      std::vector<std::vector<std::string>> t;
      for (const auto& a : report["assertions"]) {
        t.push_back({a["pass"].get<bool>() ? "PASS" : "FAIL", a["name"].get<std::string>(),
                     a.contains("detail") ? a["detail"].get<std::string>() : ""});
      }
      print_rows(t);
    }
    std::cout << "\noverall: " << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    if (report.contains("timing")) std::cout << "seconds: " << report["timing"]["seconds"].dump() << "\n";
  }

  std::string command_;
  const Config& config_;
  Json inputs_ = Json::array();
  Json results_ = Json::object();
  Json assertions_ = Json::array();
  bool pass_ = true;
  std::string stream_key_;
  std::chrono::steady_clock::time_point start_;
};

/// A path to COM JSON, or "fixture:<name>" or "braid:<n>".
COM load_com(const std::string& source, Report& report, bool check = true) {
  if (source.starts_with("fixture:")) {
    auto m = fixture(source.substr(8));
    report.add_input(Json{{"source", source}, {"sha256", sha256_hex(dump(to_json(m)))}});
    return m;
  }
  if (source.starts_with("braid:")) {
    auto m = braid_com(std::stoul(source.substr(6)));
    report.add_input(Json{{"source", source}, {"sha256", sha256_hex(dump(to_json(m)))}});
    return m;
  }
  const auto text = read_text_file(source);
  report.add_input(Json{{"source", source}, {"sha256", sha256_hex(text)}});
  return com_from_json(parse_json(text), check);
}

Json labels_of(const GroundSet& ground, ElementSet s) {
  Json out = Json::array();
  for (auto i : s.elements()) out.push_back(ground.label(i));
  return out;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (c != '{' && c != '}') {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

ElementSet parse_subset(const GroundSet& ground, const std::string& text) {
  ElementSet s;
  for (const auto& l : split_labels(text)) s.insert(ground.index_of(l));
  return s;
}

TotalOrder parse_order(const GroundSet& ground, const std::string& text) {
  if (text.empty()) return TotalOrder::natural(ground.size());
  std::vector<std::size_t> seq;
  for (const auto& l : split_labels(text)) seq.push_back(ground.index_of(l));
  if (seq.size() != ground.size()) throw Error(Errc::InvalidChoice, "--order must list every ground element once");
  return TotalOrder(std::move(seq));
}

Json order_json(const GroundSet& ground, const TotalOrder& order) {
  Json out = Json::array();
  for (auto i : order.sequence()) out.push_back(ground.label(i));
  return out;
}

Json com_results(const COM& m) {
  Json covectors = Json::array();
  for (const auto& x : m.covectors()) covectors.push_back(x.to_string());
  return Json{{"ground", m.ground().labels()},
              {"count", m.size()},
              {"topes", topes(m).size()},
              {"covectors", covectors}};
}

Json failures_json(const CheckReport& r) {
  Json out = Json::array();
  for (const auto& f : r.failures) out.push_back(f);
  return out;
}

GroupSpec load_group(const std::string& source, const COM& m, Report& report) {
  if (source == "builtin:braid") {
    std::size_t n = 1;
    while (n * (n - 1) / 2 < m.ground_size()) ++n;
    if (n * (n - 1) / 2 != m.ground_size()) throw Error(Errc::InvalidChoice, "ground size is not a braid ground size");
    report.add_input(Json{{"source", source}, {"sha256", sha256_hex(source)}});
    return braid_symmetric_group(n);
  }
  if (source == "builtin:aut") {
    report.add_input(Json{{"source", source}, {"sha256", sha256_hex(source)}});
    return GroupSpec::from_elements(m.ground_size(), automorphisms_bruteforce(m));
  }
  const auto text = read_text_file(source);
  report.add_input(Json{{"source", source}, {"sha256", sha256_hex(text)}});
  return group_from_json(parse_json(text), m.ground());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covg: conditional oriented matroids and Varchenko-Gelfand orbit harmonics"};
  app.require_subcommand(1);
  Config config;
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--field", config.field_text, "rational or fp:<p> (overrides COVG_FIELD)");
  app.add_option("--threads", config.threads, "Worker cap")->check(CLI::PositiveNumber);
  app.add_flag("--timing", config.timing, "Include wall-clock timing in the report");
  app.add_option("--seed", config.seed, "Reserved; all computations are deterministic");

  std::string input, arrangement_path, order_text, flat_text, which = "big", method = "rank", what, family,
                                                                     group_source, fixture_name, locus_kind = "big";
  std::size_t n = 0, max_forms = 14;
  bool with_hilbert = false, verify_decomposition = false;

  auto* check = app.add_subcommand("check", "Check the COM axioms");
  check->add_option("com", input, "COM JSON, fixture:<name> or braid:<n>")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Covectors of an arrangement in a polyhedral region");
  enumerate->add_option("arrangement", arrangement_path, "Arrangement JSON")->required();
  enumerate->add_option("--max-forms", max_forms, "Cap on the number of forms");

  auto* braid = app.add_subcommand("braid", "Braid arrangement COM from ordered set partitions");
  braid->add_option("--n", n, "Number of coordinates")->required()->check(CLI::Range(1, 9));

  auto* fixture_cmd = app.add_subcommand("fixture", "Built-in fixture COM");
  fixture_cmd->add_option("--name", fixture_name, "figure1 or figure1-rectangle")->required();

  auto* circuits_cmd = app.add_subcommand("circuits", "Circuits with symmetry flags");
  circuits_cmd->add_option("com", input)->required();

  auto* nbc = app.add_subcommand("nbc", "No-broken-circuit sets");
  nbc->add_option("com", input)->required();
  nbc->add_option("--order", order_text, "Total order as comma-separated labels, smallest first");

  auto* flats = app.add_subcommand("flats", "Poset of flats");
  flats->add_option("com", input)->required();

  auto* basic = app.add_subcommand("basic", "Basic sets and codimension of a flat");
  basic->add_option("com", input)->required();
  basic->add_option("--flat", flat_text, "Flat as comma-separated labels (empty for the empty set)")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the small or big locus");
  hilbert->add_option("com", input)->required();
  hilbert->add_option("--which", which)->check(CLI::IsMember({"small", "big"}));
  hilbert->add_option("--method", method)->check(CLI::IsMember({"rank", "nbc"}));
  hilbert->add_option("--order", order_text);

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every assertion passes");
  verify->add_option("com", input)->required();
  verify->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"big-theorem", "small-generators", "two-values", "tope-count", "basic-lemma", "nbc-count"}));
  verify->add_option("--order", order_text);

  auto* loci = app.add_subcommand("loci", "Permutation loci");
  loci->add_option("--family", family)->required()->check(CLI::IsMember({"kostant", "permutohedral", "permmatrix"}));
  loci->add_option("--n", n)->required()->check(CLI::Range(1, static_cast<int>(kMaxPermutationLocus)));
  loci->add_flag("--hilbert", with_hilbert, "Compute the Hilbert series and compare with the statistic");

  auto* character = app.add_subcommand("character", "Graded character of a group of automorphisms");
  character->add_option("com", input)->required();
  character->add_option("--group", group_source, "Group JSON, builtin:braid or builtin:aut")->required();
  character->add_option("--locus", locus_kind)->check(CLI::IsMember({"small", "big"}));
  character->add_flag("--verify-decomposition", verify_decomposition);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto* sub = app.get_subcommands().front();
    Report report(sub->get_name(), config);
    auto& res = report.results();
    const FieldSpec field = config.field();

    if (sub == check) {
      const auto m = load_com(input, report, false);
      const auto axioms = check_axioms(m.covectors(), config.threads);
      res["covectors"] = m.size();
      Json face{{"pass", axioms.face_symmetry}};
      if (axioms.face_symmetry_witness) {
        face["x"] = axioms.face_symmetry_witness->x.to_string();
        face["y"] = axioms.face_symmetry_witness->y.to_string();
      }
      Json elim{{"pass", axioms.strong_elimination}};
      if (axioms.elimination_witness) {
        elim["x"] = axioms.elimination_witness->x.to_string();
        elim["y"] = axioms.elimination_witness->y.to_string();
        elim["element"] = m.ground().label(axioms.elimination_witness->element);
      }
      res["face_symmetry"] = face;
      res["strong_elimination"] = elim;
      report.check("face_symmetry", axioms.face_symmetry);
      report.check("strong_elimination", axioms.strong_elimination);
    } else if (sub == enumerate) {
      const auto text = read_text_file(arrangement_path);
      report.add_input(Json{{"source", arrangement_path}, {"sha256", sha256_hex(text)}});
      const auto m = enumerate_covectors(arrangement_from_json(parse_json(text)), EnumerationOptions{max_forms});
      res = com_results(m);
      report.stream("covectors");
    } else if (sub == braid) {
      res = com_results(braid_com(n));
      report.stream("covectors");
    } else if (sub == fixture_cmd) {
      res = com_results(fixture(fixture_name));
      report.stream("covectors");
    } else if (sub == circuits_cmd) {
      const auto m = load_com(input, report);
      Json list = Json::array();
      std::size_t symmetric = 0;
      for (const auto& c : circuits(m)) {
        list.push_back(Json{{"vector", c.vector.to_string()}, {"symmetric", c.symmetric}});
        symmetric += c.symmetric ? 1 : 0;
      }
      res["count"] = list.size();
      res["symmetric"] = symmetric;
      res["circuits"] = list;
    } else if (sub == nbc) {
      const auto m = load_com(input, report);
      const auto order = parse_order(m.ground(), order_text);
      Json sets = Json::array();
      const auto found = nbc_sets(m, order);
      for (auto s : found) sets.push_back(labels_of(m.ground(), s));
      res["order"] = order_json(m.ground(), order);
      res["count"] = found.size();
      res["topes"] = topes(m).size();
      res["sets"] = sets;
      report.check("nbc_count_equals_topes", found.size() == topes(m).size());
    } else if (sub == flats) {
      const auto m = load_com(input, report);
      const auto poset = flat_poset(m);
      Json list = Json::array(), covers = Json::array();
      for (auto f : poset.flats()) list.push_back(labels_of(m.ground(), f));
      for (const auto& [a, b] : poset.covers()) {
        covers.push_back(Json{{"lower", labels_of(m.ground(), poset.flats()[a])},
                              {"upper", labels_of(m.ground(), poset.flats()[b])}});
      }
      res["count"] = poset.size();
      res["coloops"] = labels_of(m.ground(), coloops(m));
      res["flats"] = list;
      res["covers"] = covers;
    } else if (sub == basic) {
      const auto m = load_com(input, report);
      const auto poset = flat_poset(m);
      const auto f = parse_subset(m.ground(), flat_text);
      Json list = Json::array();
      for (auto b : basic_sets(poset, f)) list.push_back(labels_of(m.ground(), b));
      res["flat"] = labels_of(m.ground(), f);
      res["codim"] = codim(poset, f);
      res["basic_sets"] = list;
    } else if (sub == hilbert) {
      const auto m = load_com(input, report);
      const auto order = parse_order(m.ground(), order_text);
      HilbertSeries h;
      if (method == "rank") {
        h = hilbert_series(which == "big" ? big_locus(m) : small_locus(m), field);
      } else {
        const auto both = hilbert_via_nbc(m, order);
        h = which == "big" ? both.big : both.small;
        res["order"] = order_json(m.ground(), order);
      }
      res["which"] = which;
      res["method"] = method;
      res["coeffs"] = h.normalized().coeffs;
      res["series"] = h.normalized().to_string();
      res["dimension"] = h.total();
      if (which == "small" && input.starts_with("braid:")) {
        const auto n = std::stoul(input.substr(6));
        const bool stirling = h == stirling_product(n);
        const bool rising = h == rising_factorial(n);
        res["closed_form"] = Json{{"prod_1_plus_iq", stirling_product(n).normalized().coeffs},
                                  {"rising_factorial", rising_factorial(n).normalized().coeffs},
                                  {"matches_prod_1_plus_iq", stirling},
                                  {"matches_rising_factorial", rising}};
        if (!rising) res["flag"] = "the form q(q+1)...(q+n-1) disagrees with the computed series";
        report.check("small_series_equals_prod_1_plus_iq", stirling);
      }
      const std::size_t expected = which == "big" ? m.size() : topes(m).size();
      report.check("dimension_equals_point_count", h.total() == expected,
                   std::to_string(h.total()) + " vs " + std::to_string(expected));
    } else if (sub == verify) {
      const auto m = load_com(input, report);
      const auto order = parse_order(m.ground(), order_text);
      res["what"] = what;
      if (what == "big-theorem" || what == "small-generators") {
        const auto r = what == "big-theorem" ? verify_theorem_big(m, order, {field, 5})
                                             : verify_small_generators(m, order, {field, 5});
        res["order"] = order_json(m.ground(), order);
        res["generators_checked"] = r.generators_checked;
        if (what == "big-theorem") res["j_variants_checked"] = r.j_variants_checked;
        res["rank_series"] = r.rank_series.normalized().coeffs;
        res["nbc_series"] = r.nbc_series.normalized().coeffs;
        res["failures"] = failures_json(r);
        report.check(what, r.pass, r.pass ? "" : r.failures.front());
      } else if (what == "two-values") {
        const auto r = check_two_values_exhaustive(m);
        res["covectors_checked"] = r.covectors_checked;
        res["failures"] = failures_json(r);
        report.check("two_values", r.pass, r.pass ? "" : r.failures.front());
      } else if (what == "tope-count") {
        const auto r = check_tope_contraction_count(m);
        Json per = Json::array();
        for (const auto& [f, t] : r.topes_per_flat) per.push_back(Json{{"flat", labels_of(m.ground(), f)}, {"topes", t}});
        res["covectors"] = r.covectors;
        res["per_flat"] = per;
        res["failures"] = failures_json(r);
        report.check("tope_contraction_count", r.pass, r.pass ? "" : r.failures.front());
      } else if (what == "basic-lemma") {
        const auto r = check_basic_lemma(m);
        res["failures"] = failures_json(r);
        report.check("basic_lemma", r.pass, r.pass ? "" : r.failures.front());
      } else {
        const auto r = check_nbc_tope_count(m, order);
        res["order"] = order_json(m.ground(), order);
        res["failures"] = failures_json(r);
        report.check("nbc_count", r.pass, r.pass ? "" : r.failures.front());
      }
    } else if (sub == loci) {
      PointLocus locus;
      HilbertSeries statistic;
      std::string statistic_name;
      if (family == "kostant") {
        locus = kostant_locus(n);
        statistic = inversion_distribution(n);
        statistic_name = "inv";
      } else if (family == "permutohedral") {
        locus = permutohedral_locus(n);
        statistic = descent_distribution(n);
        statistic_name = "des";
      } else {
        locus = permmatrix_locus(n);
        statistic = lis_complement_distribution(n);
        statistic_name = "n-lis";
      }
      res["family"] = family;
      res["n"] = n;
      res["points"] = locus.size();
      res["variables"] = locus.variables;
      if (with_hilbert) {
        const auto h = hilbert_series(locus, field);
        res["coeffs"] = h.normalized().coeffs;
        res["series"] = h.normalized().to_string();
        res["statistic"] = statistic_name;
        res["statistic_coeffs"] = statistic.normalized().coeffs;
        report.check("hilbert_equals_statistic", h == statistic);
      } else {
        res["locus"] = to_json(locus);
      }
    } else if (sub == character) {
      const auto m = load_com(input, report);
      const auto g = load_group(group_source, m, report);
      g.require_automorphisms(m);
      const auto locus = locus_kind == "big" ? big_locus(m) : small_locus(m);
      const auto chi = graded_character(locus, g, field, config.threads);
      const auto h = hilbert_series(locus, field);
      Json rows = Json::array();
      bool sums_ok = true;
      for (std::size_t e = 0; e < g.order(); ++e) {
        const auto& w = g.elements()[e];
        std::size_t fixed = 0;
        for (const auto& p : locus.points) fixed += act(w, SignedVector::parse(p.label)).to_string() == p.label ? 1 : 0;
        Rational sum = 0;
        Json values = Json::array();
        for (const auto& v : chi.values[e]) {
          sum += v;
          values.push_back(format_rational(v));
        }
        sums_ok = sums_ok && sum == static_cast<long>(fixed);
        rows.push_back(Json{{"element", to_json(w, m.ground())}, {"fixed_points", fixed}, {"values", values}});
      }
      bool identity_ok = chi.values[0].size() >= h.normalized().coeffs.size();
      for (std::size_t d = 0; d < chi.values[0].size(); ++d) {
        identity_ok = identity_ok && chi.at(0, d) == static_cast<long>(d < h.coeffs.size() ? h.coeffs[d] : 0);
      }
      res["locus"] = locus_kind;
      res["group_order"] = g.order();
      res["hilbert"] = h.normalized().coeffs;
      res["characters"] = rows;
      report.check("identity_row_equals_hilbert", identity_ok);
      report.check("row_sums_equal_fixed_points", sums_ok);
      if (verify_decomposition) {
        const auto r = verify_graded_module_structure(m, g, field, config.threads);
        res["flat_orbits"] = r.flat_orbits;
        res["decomposition_notes"] = r.notes;
        res["decomposition_failures"] = failures_json(r);
        report.check("graded_module_structure", r.pass, r.pass ? "" : r.failures.front());
      }
    }
    return report.emit();
  } catch (const Error& e) {
    std::cerr << "covg: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "covg: error: " << e.what() << "\n";
    return 2;
  }
}

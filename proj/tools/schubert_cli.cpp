// Census and query front end for Schubert-variety combinatorics: per-element
// classification, whole-group censuses, Bruhat interval dumps, torus-kernel
// reports, and the prescribed-descent constructor.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "schubert/bruhat.hpp"
#include "schubert/cartan.hpp"
#include "schubert/classify.hpp"
#include "schubert/lattice.hpp"
#include "schubert/weyl.hpp"

namespace {

using namespace schubert;
using nlohmann::json;

struct Config {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t interval_cap = 1000000;
  int boolean_rank_cap = 12;
  int oracle_length_cap = 20;
  std::string output_format = "json";  // json | csv
};

void load_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "enumeration_cap") cfg.enumeration_cap = std::stoull(value);
    else if (key == "interval_cap") cfg.interval_cap = std::stoull(value);
    else if (key == "boolean_rank_cap") cfg.boolean_rank_cap = std::stoi(value);
    else if (key == "oracle_length_cap") cfg.oracle_length_cap = std::stoi(value);
    else if (key == "output_format") cfg.output_format = value;
    else throw ParseError("unknown config key: " + key);
  }
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::string t = s;
  for (char& ch : t)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream is(t);
  int v;
  while (is >> v) out.push_back(v);
  if (!is.eof() && is.fail()) throw ParseError("cannot parse index list: '" + s + "'");
  return out;
}

LeviSubset parse_levi(const std::string& s) {
  auto v = parse_index_list(s);
  return LeviSubset(v.begin(), v.end());
}

/// Word grammar: "1 2 1" or "1,2,1"; "w0" for the longest element;
/// "w0(J)" with a bracketed index list for w_{0,J}; empty for the identity.
WeylElement parse_word(const RootSystem& rs, const std::string& s) {
  std::string t = s;
  auto b = t.find_first_not_of(" \t");
  if (b == std::string::npos) return WeylElement::identity(rs);
  t = t.substr(b, t.find_last_not_of(" \t") - b + 1);
  if (t == "w0") {
    LeviSubset full;
    for (int i = 1; i <= rs.rank(); ++i) full.insert(i);
    return longest_element(rs, full);
  }
  if (t.rfind("w0(", 0) == 0 && t.back() == ')')
    return longest_element(rs, parse_levi(t.substr(3, t.size() - 4)));
  return WeylElement::from_word(rs, parse_index_list(t));
}

std::string csv_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(v[k]);
  }
  return out;
}

const std::vector<std::string> kFlagNames = {
    "toric",         "spherical",      "horospherical", "nearly_toric",
    "doubly_spherical", "simple",      "wonderful"};

bool flag_value(const Classification& c, const std::string& name) {
  if (name == "toric") return c.is_toric;
  if (name == "spherical") return c.is_spherical;
  if (name == "horospherical") return c.is_horospherical;
  if (name == "nearly_toric") return c.is_nearly_toric;
  if (name == "doubly_spherical") return c.is_doubly_spherical;
  if (name == "simple") return c.is_simple_variety;
  if (name == "wonderful") return c.is_wonderful;
  throw ParseError("unknown flag: " + name);
}

json census_row(const RootSystem& rs, const WeylElement& w, const Classification& c) {
  json j;
  j["schema"] = 1;
  j["type"] = rs.type().str();
  j["word"] = c.word;
  j["length"] = w.length();
  LeviSubset supp = support(w);
  j["support"] = std::vector<int>(supp.begin(), supp.end());
  j["descents"] = std::vector<int>(c.levi.begin(), c.levi.end());
  j["is_toric"] = c.is_toric;
  j["is_spherical"] = c.is_spherical;
  j["is_horospherical"] = c.is_horospherical;
  j["is_nearly_toric"] = c.is_nearly_toric;
  j["is_doubly_spherical"] = c.is_doubly_spherical;
  j["is_simple_variety"] = c.is_simple_variety;
  j["is_wonderful"] = c.is_wonderful;
  if (c.closed_orbit_count) j["closed_orbit_count"] = *c.closed_orbit_count;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Root-system and Weyl-group combinatorics for Schubert varieties"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");
  auto* enum_opt = app.add_option("--enumeration-cap", cfg.enumeration_cap,
                                  "group enumeration cap");
  auto* interval_opt = app.add_option("--interval-cap", cfg.interval_cap,
                                      "Bruhat interval size cap");
  auto* format_opt = app.add_option("--format", cfg.output_format,
                                    "output format: json (lines) or csv");

  std::string type_str, word_str, levi_str, only_flag, isogeny_str = "adjoint";
  int max_length = -1;

  auto* classify_cmd = app.add_subcommand("classify", "classify one (w, J)");
  classify_cmd->add_option("type", type_str, "Cartan type, e.g. A3")->required();
  classify_cmd->add_option("word", word_str, "word in simple reflections")->required();
  classify_cmd->add_option("--levi", levi_str, "Levi subset J (defaults to the descent set)");

  auto* census_cmd = app.add_subcommand("census", "classify every group element");
  census_cmd->add_option("type", type_str)->required();
  census_cmd->add_option("--only", only_flag, "keep rows where this flag is true");
  census_cmd->add_option("--max-length", max_length, "restrict to elements of length <= L");

  auto* orbits_cmd = app.add_subcommand("closed-orbits", "count closed Levi orbits");
  orbits_cmd->add_option("type", type_str)->required();
  orbits_cmd->add_option("word", word_str)->required();
  orbits_cmd->add_option("--levi", levi_str)->required();

  auto* kernel_cmd = app.add_subcommand("kernel", "torus-kernel report for a reduced word");
  kernel_cmd->add_option("type", type_str)->required();
  kernel_cmd->add_option("word", word_str)->required();
  kernel_cmd->add_option("--isogeny", isogeny_str, "adjoint | sc");

  auto* construct_cmd = app.add_subcommand("construct", "element with prescribed descent set");
  construct_cmd->add_option("type", type_str)->required();
  construct_cmd->add_option("--levi", levi_str)->required();

  auto* interval_cmd = app.add_subcommand("interval", "dump a Bruhat interval as JSON");
  interval_cmd->add_option("type", type_str)->required();
  interval_cmd->add_option("word", word_str, "top element")->required();
  interval_cmd->add_option("--bottom", levi_str, "bottom element word (default identity)");

  CLI11_PARSE(app, argc, argv);
  if (!config_path.empty()) {
    // flags given on the command line take precedence over the config file
    Config file_cfg;
    load_config_file(file_cfg, config_path);
    if (enum_opt->count() == 0) cfg.enumeration_cap = file_cfg.enumeration_cap;
    if (interval_opt->count() == 0) cfg.interval_cap = file_cfg.interval_cap;
    if (format_opt->count() == 0) cfg.output_format = file_cfg.output_format;
    cfg.boolean_rank_cap = file_cfg.boolean_rank_cap;
    cfg.oracle_length_cap = file_cfg.oracle_length_cap;
  }

  RootSystem rs(CartanType::parse(type_str));

  if (classify_cmd->parsed()) {
    WeylElement w = parse_word(rs, word_str);
    std::optional<LeviSubset> J;
    if (!levi_str.empty()) J = parse_levi(levi_str);
    Classification c = classify_full(w, J, cfg.interval_cap);
    std::cout << classification_to_json(c).dump() << "\n";
    return 0;
  }

  if (census_cmd->parsed()) {
    auto elements = enumerate_group(rs, std::nullopt, cfg.enumeration_cap);
    std::map<std::string, long long> counts;
    for (const auto& name : kFlagNames) counts[name] = 0;
    bool csv = cfg.output_format == "csv";
    if (csv)
      std::cout << "word,length,support,descents,is_toric,is_spherical,is_horospherical,"
                   "is_nearly_toric,is_doubly_spherical,is_simple_variety,is_wonderful,"
                   "closed_orbit_count\n";
    long long rows = 0;
    for (const WeylElement& w : elements) {
      if (max_length >= 0 && w.length() > max_length) continue;
      Classification c = classify_full(w, std::nullopt, cfg.interval_cap);
      for (const auto& name : kFlagNames)
        if (flag_value(c, name)) ++counts[name];
      if (!only_flag.empty() && !flag_value(c, only_flag)) continue;
      ++rows;
      if (csv) {
        LeviSubset supp = support(w);
        std::cout << '"' << csv_list(c.word) << "\"," << w.length() << ",\""
                  << csv_list(std::vector<int>(supp.begin(), supp.end())) << "\",\""
                  << csv_list(std::vector<int>(c.levi.begin(), c.levi.end())) << "\","
                  << c.is_toric << ','
                  << c.is_spherical << ',' << c.is_horospherical << ',' << c.is_nearly_toric
                  << ',' << c.is_doubly_spherical << ',' << c.is_simple_variety << ','
                  << c.is_wonderful << ',' << (c.closed_orbit_count ? *c.closed_orbit_count : -1)
                  << "\n";
      } else {
        std::cout << census_row(rs, w, c).dump() << "\n";
      }
    }
    json footer;
    footer["schema"] = 1;
    footer["summary"] = {{"type", rs.type().str()},
                         {"rows", rows},
                         {"group_order", static_cast<long long>(elements.size())},
                         {"counts", counts}};
    if (!csv) std::cout << footer.dump() << "\n";
    return 0;
  }

  if (orbits_cmd->parsed()) {
    WeylElement w = parse_word(rs, word_str);
    std::cout << count_closed_orbits(w, parse_levi(levi_str), cfg.interval_cap) << "\n";
    return 0;
  }

  if (kernel_cmd->parsed()) {
    IsogenyType iso;
    if (isogeny_str == "adjoint") iso = IsogenyType::adjoint;
    else if (isogeny_str == "sc" || isogeny_str == "simply_connected")
      iso = IsogenyType::simply_connected;
    else throw ParseError("unknown isogeny type: " + isogeny_str);
    Word word = parse_index_list(word_str);
    CharacterLattice lat{iso, &rs};
    KernelReport report = kernel_report(lat, beta_sequence(rs, word));
    json j;
    j["schema"] = 1;
    j["torus_dim"] = report.torus_dimension;
    j["components"] = json::array();
    for (const auto& d : report.component_group)
      j["components"].push_back(d.convert_to<long long>());
    j["connected"] = report.connected;
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (construct_cmd->parsed()) {
    WeylElement w = construct_prescribed(rs, parse_levi(levi_str));
    json j;
    j["schema"] = 1;
    j["word"] = w.canonical_word();
    LeviSubset desc = left_descents(w);
    j["descents"] = std::vector<int>(desc.begin(), desc.end());
    j["is_horospherical"] = true;
    j["is_nonsingular_horospherical"] = true;
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (interval_cmd->parsed()) {
    WeylElement top = parse_word(rs, word_str);
    WeylElement bottom =
        levi_str.empty() ? WeylElement::identity(rs) : parse_word(rs, levi_str);
    std::cout << interval_to_json(interval(bottom, top, cfg.interval_cap)).dump() << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "error (cap exceeded): " << e.what() << "\n";
    return 4;
  } catch (const InternalInconsistency& e) {
    std::cerr << "error (internal inconsistency): " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

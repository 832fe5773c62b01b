#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON encodings, the key = value config file, and the JSON-lines
 * amplitude cache used by the command-line tool.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "vertexcalc/bracket_fraction.hpp"
#include "vertexcalc/cremona.hpp"
#include "vertexcalc/gv.hpp"
#include "vertexcalc/novikov_series.hpp"
#include "vertexcalc/vertex.hpp"

namespace vertexcalc {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Text rendering

/// Factors the denominator into brackets when it is such a product, e.g.
/// "-1/[1]^2" or "(x^2 + 1)/([1]*[2])"; otherwise the raw quotient.
inline std::string render(const QRational& v) {
  if (v.den() == HalfLaurent(1)) return to_string(v.num());
  BracketFraction f;
  if (!BracketFraction::from_qrational(v, f)) return to_string(v);
  std::vector<std::string> factors;
  const auto& e = f.bracket_exponents();
  for (std::size_t n = 0; n < e.size(); ++n) {
    if (e[n] == 0) continue;
    std::string s = "[" + std::to_string(n + 1) + "]";
    if (e[n] > 1) s += "^" + std::to_string(e[n]);
    factors.push_back(s);
  }
  if (factors.empty()) return to_string(f.numerator());
  // clear rational coefficients into an integer factor of the denominator
  BigInt scale = 1;
  for (const auto& [k, c] : f.numerator().terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  HalfLaurent numerator = f.numerator() * BigRational(scale);
  if (scale != 1) factors.insert(factors.begin(), scale.get_str());
  std::string den;
  for (std::size_t i = 0; i < factors.size(); ++i) den += (i ? "*" : "") + factors[i];
  if (factors.size() > 1) den = "(" + den + ")";
  std::string num = to_string(numerator);
  if (numerator.terms().size() > 1) num = "(" + num + ")";
  return num + "/" + den;
}

/// "Q1,1^2*Q2,1" style monomial; "1" for the empty exponent.
inline std::string render_monomial(const std::vector<EdgeLabel>& edges, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "Q" + edges[i].str();
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

/// One line per term, in degree-lexicographic order.
inline std::string render(const QSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) out += render_monomial(s.edges(), e) + " : " + render(c) + "\n";
  return out.empty() ? "0\n" : out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json laurent_to_json(const HalfLaurent& p) {
  Json a = Json::array();
  for (const auto& [k, c] : p.terms()) a.push_back(Json::array({k, c.get_str()}));
  return a;
}

inline HalfLaurent laurent_from_json(const Json& a) {
  std::map<int, BigRational> t;
  for (const auto& term : a) {
    BigRational c;
    if (c.set_str(term.at(1).get<std::string>(), 10) != 0) throw DomainError("bad rational in JSON");
    c.canonicalize();
    t[term.at(0).get<int>()] += c;
  }
  return HalfLaurent::from_terms(t);
}

inline Json to_json(const QRational& v) { return Json{{"num", laurent_to_json(v.num())}, {"den", laurent_to_json(v.den())}}; }

inline QRational qrational_from_json(const Json& j) {
  return QRational(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

inline EdgeLabel edge_from_string(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("bad edge label '" + s + "'");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

inline Json to_json(const QSeries& s) {
  Json edges = Json::array();
  for (const auto& e : s.edges()) edges.push_back(e.str());
  Json j{{"edges", edges}, {"max_degree", s.max_total_degree()}};
  if (!s.truncation().caps.empty()) j["caps"] = s.truncation().caps;
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json ex = Json::array();
    for (std::size_t i = 0; i < s.edges().size(); ++i) ex.push_back(static_cast<int>(e[i]));
    terms.push_back(Json{{"exp", ex}, {"coeff", to_json(c)}});
  }
  j["terms"] = terms;
  return j;
}

inline QSeries qseries_from_json(const Json& j) {
  std::vector<EdgeLabel> edges;
  for (const auto& e : j.at("edges")) edges.push_back(edge_from_string(e.get<std::string>()));
  Truncation t{j.at("max_degree").get<int>(), j.contains("caps") ? j.at("caps").get<std::vector<int>>() : std::vector<int>{}};
  QSeries s(edges, t);
  for (const auto& term : j.at("terms")) {
    Exponent e{};
    const auto ex = term.at("exp").get<std::vector<int>>();
    if (ex.size() != edges.size()) throw DomainError("exponent length does not match edges");
    for (std::size_t i = 0; i < ex.size(); ++i) e[i] = static_cast<std::uint8_t>(ex[i]);
    s.add_term(e, qrational_from_json(term.at("coeff")));
  }
  return s;
}

inline Json to_json(const GvTable& t) {
  Json classes = Json::array();
  for (const auto& [d, n] : t.entries) {
    Json dj = Json::object(), nj = Json::object();
    for (std::size_t i = 0; i < t.edges.size(); ++i)
      if (d[i] != 0) dj[t.edges[i].str()] = d[i];
    for (std::size_t g = 0; g < n.size(); ++g)
      nj[std::to_string(g)] = n[g].fits_slong_p() ? Json(n[g].get_si()) : Json(n[g].get_str());
    classes.push_back(Json{{"d", dj}, {"n", nj}});
  }
  return Json{{"classes", classes}};
}

inline Json to_json(const ReductionStep& s, bool one_based = true) {
  Json idx = Json::array();
  for (int i : s.indices) idx.push_back(one_based && s.tag != "pad" ? i + 1 : i);
  Json j{{"step", s.tag}, {"indices", idx}, {"class", s.result.str()}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

// ---------------------------------------------------------------------------
// Configuration

struct CliConfig {
  std::string cache_path;
  int default_max_degree = 3;
  int default_max_genus = 3;
  int jobs = 1;
  bool json = false;

  void validate() const {
    if (jobs < 1) throw DomainError("jobs must be at least 1");
    if (default_max_degree < 0 || default_max_genus < 0) throw DomainError("degrees must be non-negative");
  }
};

/// Applies "key = value" lines; '#' starts a comment. Unknown keys are errors.
inline void apply_config_text(CliConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    auto integer = [&] {
      try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used == value.size()) return v;
      } catch (const std::exception&) {
      }
      throw DomainError("config line " + std::to_string(lineno) + ": '" + key + "' needs an integer");
    };
    if (key == "cache" || key == "cache_path") {
      cfg.cache_path = value;
    } else if (key == "max_degree" || key == "default_max_degree") {
      cfg.default_max_degree = integer();
    } else if (key == "max_genus" || key == "default_max_genus") {
      cfg.default_max_genus = integer();
    } else if (key == "jobs") {
      cfg.jobs = integer();
    } else if (key == "output") {
      if (value != "text" && value != "json") throw DomainError("config: output must be text or json");
      cfg.json = value == "json";
    } else {
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
}

inline void apply_config_file(CliConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str());
}

/// Values given explicitly on the command line.
struct CliOverrides {
  std::optional<std::string> cache_path;
  std::optional<int> jobs;
  std::optional<bool> json;
};

/// defaults < config file < VERTEXCALC_CACHE (cache path only) < flags.
inline CliConfig resolve_config(const std::string& config_file, const char* env_cache, const CliOverrides& flags) {
  CliConfig cfg;
  if (!config_file.empty()) apply_config_file(cfg, config_file);
  if (env_cache && *env_cache) cfg.cache_path = env_cache;
  if (flags.cache_path) cfg.cache_path = *flags.cache_path;
  if (flags.jobs) cfg.jobs = *flags.jobs;
  if (flags.json) cfg.json = *flags.json;
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// Amplitude cache

inline constexpr int kCacheVersion = 1;

inline Json cache_record(const AmplitudeKey& key, const QRational& value) {
  return Json{{"flavor", to_string(key.flavor)}, {"triple", key.triple.str()}, {"value", to_json(value)}, {"version", kCacheVersion}};
}

/// Append-only JSON-lines file. Loading preloads the process amplitude store;
/// attaching records every freshly computed amplitude through a single writer.
class AmplitudeCache {
 public:
  explicit AmplitudeCache(std::string path, std::ostream& warn = std::cerr) : path_(std::move(path)), warn_(warn) {}
  ~AmplitudeCache() { detach(); }
  AmplitudeCache(const AmplitudeCache&) = delete;
  AmplitudeCache& operator=(const AmplitudeCache&) = delete;

  /// Returns the number of records loaded; corrupt lines are skipped with a warning.
  std::size_t load() {
    std::ifstream in(path_);
    if (!in) return 0;
    std::string line;
    std::size_t loaded = 0, lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const Json j = Json::parse(line);
        if (!j.contains("version") || j.at("version") != kCacheVersion) continue;
        const AmplitudeKey key{parse_flavor(j.at("flavor").get<std::string>()),
                               PartitionTriple::parse(j.at("triple").get<std::string>())};
        amplitude_store().preload(key, qrational_from_json(j.at("value")));
        ++loaded;
      } catch (const std::exception& e) {
        warn_ << "warning: skipping corrupt cache line " << lineno << " in " << path_ << ": " << e.what() << "\n";
      }
    }
    return loaded;
  }

  void attach() {
    out_.open(path_, std::ios::app);
    if (!out_) throw DomainError("cannot open cache file " + path_ + " for writing");
    amplitude_store().set_listener([this](const AmplitudeKey& key, const QRational& value) {
      std::lock_guard lock(mu_);
      out_ << cache_record(key, value).dump() << "\n";
      out_.flush();
    });
  }

  void detach() {
    amplitude_store().set_listener(nullptr);
    std::lock_guard lock(mu_);
    if (out_.is_open()) out_.close();
  }

 private:
  std::string path_;
  std::ostream& warn_;
  std::ofstream out_;
  std::mutex mu_;
};

}  // namespace vertexcalc

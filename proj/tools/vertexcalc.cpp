// vertexcalc: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 computation error,
// 3 verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vertexcalc/acceptance.hpp"
#include "vertexcalc/io.hpp"

using namespace vertexcalc;

namespace {

constexpr int kOk = 0, kUsage = 1, kCompute = 2, kVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

/// Shape and truncation flags shared by zfun, gv and cremona from-degrees.
struct ShapeArgs {
  std::string shape = "trivalent";
  std::string lengths;
  std::optional<int> max_degree;
  std::string caps;

  void add_to(CLI::App* cmd, bool with_degree = true) {
    cmd->add_option("--shape,--config", shape, "closed-vertex, chain, two-leg or trivalent");
    cmd->add_option("--lengths", lengths, "edges per leg, e.g. 2,2,2 (chain: N; two-leg: N1,N2)");
    if (with_degree) {
      cmd->add_option("--max-degree", max_degree, "total Novikov degree bound");
      cmd->add_option("--caps", caps, "per-edge degree caps in edge order, -1 for none");
    }
  }

  ConfigSpec build(int default_degree) const {
    const int D = max_degree.value_or(default_degree);
    try {
      const Shape s = parse_shape(shape);
      const auto l = lengths.empty() ? std::vector<int>{} : int_list(lengths);
      auto need = [&](std::size_t n) {
        if (l.size() != n) throw UsageError("--lengths for " + shape + " needs " + std::to_string(n) + " value(s)");
      };
      ConfigSpec cfg;
      switch (s) {
        case Shape::closed_vertex:
          if (!l.empty() && l != std::vector<int>{1, 1, 1}) throw UsageError("closed-vertex has lengths 1,1,1");
          cfg = ConfigSpec::closed_vertex(D);
          break;
        case Shape::chain:
          need(1);
          cfg = ConfigSpec::chain(l[0], D);
          break;
        case Shape::two_leg:
          need(2);
          cfg = ConfigSpec::two_leg(l[0], l[1], D);
          break;
        case Shape::trivalent:
          need(3);
          cfg = ConfigSpec::trivalent({l[0], l[1], l[2]}, D);
          break;
      }
      if (!caps.empty()) cfg.caps = int_list(caps);
      cfg.validate();
      return cfg;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
};

QSeries partition_function(const ConfigSpec& cfg, Flavor flavor, const std::string& method, int jobs) {
  QSeries z;
  switch (cfg.shape) {
    case Shape::closed_vertex:
      z = cfg.caps.empty() ? z_closed_vertex(cfg.max_total_degree) : z_trivalent(cfg, flavor, jobs);
      break;
    case Shape::chain:
      z = method == "closed" ? z_chain_closed(cfg) : z_chain_direct(cfg);
      break;
    case Shape::two_leg:
      z = z_two_leg(cfg);
      break;
    case Shape::trivalent:
      z = z_trivalent(cfg, flavor, jobs);
      break;
  }
  return z.truncated(cfg.truncation());
}

std::string join(const std::vector<BigRational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact topological-vertex amplitudes, formal GW partition functions, GV invariants and Cremona reduction"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = false;
  std::optional<int> jobs_flag;
  std::optional<std::string> cache_flag;
  std::string config_file;
  app.add_flag("--json", json_flag, "JSON output");
  app.add_option("--jobs", jobs_flag, "worker threads");
  app.add_option("--cache", cache_flag, "amplitude cache file (JSON lines)");
  app.add_option("--config", config_file, "config file of key = value lines");

  // amplitude
  auto* amp = app.add_subcommand("amplitude", "one vertex amplitude");
  std::string flavor_name = "physical", mu1, mu2, mu3, triple_text;
  amp->add_option("--flavor", flavor_name, "physical or math");
  amp->add_option("--mu1", mu1, "first partition, e.g. 2,1");
  amp->add_option("--mu2", mu2, "second partition");
  amp->add_option("--mu3", mu3, "third partition");
  amp->add_option("--triple", triple_text, "all three as 'mu1|mu2|mu3'");

  // check-vertex-equality
  auto* cve = app.add_subcommand("check-vertex-equality", "compare both vertex flavors on all small triples");
  int max_size = 3;
  cve->add_option("--max-size", max_size, "bound on each |mu^i|")->check(CLI::NonNegativeNumber);

  // zfun
  auto* zfun = app.add_subcommand("zfun", "partition function of a configuration");
  ShapeArgs zargs;
  zargs.add_to(zfun);
  std::string zflavor = "math", method = "direct", output;
  bool log_flag = false;
  zfun->add_option("--flavor", zflavor, "vertex flavor for trivalent sums");
  zfun->add_option("--method", method, "chain: direct or closed")->check(CLI::IsMember({"direct", "closed"}));
  zfun->add_flag("--free-energy", log_flag, "print log Z instead of Z");
  zfun->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));

  // gv
  auto* gv = app.add_subcommand("gv", "Gopakumar-Vafa invariants of a configuration");
  ShapeArgs gargs;
  gargs.add_to(gv);
  std::optional<int> max_genus;
  gv->add_option("--max-genus", max_genus, "highest genus to report");
  gv->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));

  // cremona
  auto* cremona = app.add_subcommand("cremona", "curve classes on blowups of P^3");
  cremona->require_subcommand(1);
  auto* red = cremona->add_subcommand("reduce", "reduce a class by Cremona moves");
  std::string class_text;
  std::optional<int> red_genus;
  red->add_option("--class", class_text, "class 'd;a1,a2,...'")->required();
  red->add_option("--max-genus", red_genus, "also print local invariants up to this genus");
  auto* fdeg = cremona->add_subcommand("from-degrees", "class of a configuration curve");
  ShapeArgs fargs;
  fargs.add_to(fdeg, false);
  std::string degrees;
  bool also_reduce = false;
  fdeg->add_option("--degrees", degrees, "degree vector 'd11,d12|d21|...'")->required();
  fdeg->add_flag("--reduce", also_reduce, "also reduce the class");

  // selftest
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  bool extended = false;
  self->add_flag("--extended", extended, "vertex identity up to four boxes per leg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CliConfig cfg;
  try {
    CliOverrides o;
    o.cache_path = cache_flag;
    o.jobs = jobs_flag;
    if (json_flag) o.json = true;
    if (!output.empty()) o.json = output == "json";
    cfg = resolve_config(config_file, std::getenv("VERTEXCALC_CACHE"), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::optional<AmplitudeCache> cache;
  auto open_cache = [&] {
    if (cfg.cache_path.empty()) return;
    cache.emplace(cfg.cache_path);
    cache->load();
    cache->attach();
  };

  try {
    if (*amp) {
      PartitionTriple t;
      Flavor f;
      try {
        f = parse_flavor(flavor_name);
        t = triple_text.empty() ? PartitionTriple{Partition::parse(mu1), Partition::parse(mu2), Partition::parse(mu3)}
                                : PartitionTriple::parse(triple_text);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      open_cache();
      const QRational v = amplitude(f, t);
      if (cfg.json)
        std::cout << Json{{"flavor", to_string(f)}, {"triple", t.str()}, {"value", to_json(v)}, {"text", render(v)}}.dump()
                  << "\n";
      else
        std::cout << render(v) << "\n";
      return kOk;
    }

    if (*cve) {
      open_cache();
      const auto triples = triples_with_leg_bound(max_size);
      const auto equal = parallel_map(triples, cfg.jobs, [](const PartitionTriple& t) {
        return w_three_physical(t) == w_three_math(t) ? 1 : 0;
      });
      std::vector<std::string> failures;
      Json results = Json::array();
      for (std::size_t i = 0; i < triples.size(); ++i) {
        if (!equal[i]) failures.push_back(triples[i].str());
        if (cfg.json)
          results.push_back(Json{{"triple", triples[i].str()}, {"equal", equal[i] == 1}});
        else
          std::cout << (equal[i] ? "pass " : "FAIL ") << triples[i].str() << "\n";
      }
      if (cfg.json)
        std::cout << Json{{"max_size", max_size}, {"checked", triples.size()}, {"failures", failures}, {"results", results}}.dump()
                  << "\n";
      else
        std::cout << triples.size() << " triples checked, " << failures.size() << " failures\n";
      for (const auto& f : failures) std::cerr << "vertex flavors differ on " << f << "\n";
      return failures.empty() ? kOk : kVerify;
    }

    if (*zfun) {
      const ConfigSpec c = zargs.build(cfg.default_max_degree);
      Flavor f;
      try {
        f = parse_flavor(zflavor);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      open_cache();
      QSeries z = partition_function(c, f, method, cfg.jobs);
      if (log_flag) z = free_energy(z);
      std::cout << (cfg.json ? to_json(z).dump() + "\n" : render(z));
      return kOk;
    }

    if (*gv) {
      const ConfigSpec c = gargs.build(cfg.default_max_degree);
      const int G = max_genus.value_or(cfg.default_max_genus);
      if (G < 0) throw UsageError("--max-genus must be non-negative");
      open_cache();
      const GvTable table = gv_extract(free_energy(partition_function(c, Flavor::math, "direct", cfg.jobs)), G);
      if (cfg.json) {
        std::cout << to_json(table).dump() << "\n";
      } else {
        for (const auto& [d, n] : table.entries) {
          std::cout << DegreeVector::from_exponent(table.edges, d).str(c.lengths) << " :";
          for (const auto& v : n) std::cout << " " << v.get_str();
          std::cout << "\n";
        }
      }
      return kOk;
    }

    if (*red) {
      CurveClass cls;
      ReductionOutcome out;
      try {
        cls = CurveClass::parse(class_text);
        out = reduce(cls);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      std::vector<BigRational> inv;
      if (red_genus && out.tag != ReductionTag::irreducible) inv = local_invariants(out, *red_genus);
      if (cfg.json) {
        Json trace = Json::array();
        for (const auto& s : out.trace) trace.push_back(to_json(s));
        Json j{{"class", cls.str()}, {"outcome", out.label()}, {"engine_level", out.engine_level}, {"trace", trace}};
        if (!inv.empty()) {
          Json a = Json::array();
          for (const auto& v : inv) a.push_back(v.get_str());
          j["invariants"] = a;
        }
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& s : out.trace) std::cout << to_json(s).dump() << "\n";
        std::cout << "outcome: " << out.label() << "\n";
        if (out.engine_level) std::cout << "note: concluded by the non-effective-image rule (engine-level)\n";
        if (!inv.empty()) std::cout << "invariants: " << join(inv) << "\n";
      }
      return kOk;
    }

    if (*fdeg) {
      const ConfigSpec c = fargs.build(0);
      CurveClass cls;
      try {
        cls = class_of_degrees(c, DegreeVector::parse(degrees));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      std::optional<ReductionOutcome> out;
      if (also_reduce) out = reduce(cls);
      if (cfg.json) {
        Json j{{"degrees", degrees}, {"class", cls.str()}};
        if (out) j["outcome"] = out->label();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << cls.str() << "\n";
        if (out) std::cout << "outcome: " << out->label() << "\n";
      }
      return kOk;
    }

    if (*self) {
      open_cache();
      acceptance::Options opt;
      opt.jobs = cfg.jobs;
      opt.extended = extended;
      Json rows = Json::array();
      bool all = true;
      acceptance::run_all(opt, [&](const acceptance::Result& r) {
        all = all && r.pass;
        if (cfg.json)
          rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        else
          std::cout << acceptance::format(r) << std::endl;
      });
      if (cfg.json) std::cout << Json{{"criteria", rows}, {"passed", all}}.dump() << "\n";
      return all ? kOk : kVerify;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GvIntegralityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompute;
  }
  return kUsage;
}

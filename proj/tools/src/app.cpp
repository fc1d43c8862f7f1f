#include "guekdv/cli/app.hpp"

#include "guekdv/cli/config.hpp"
#include "guekdv/cli/map_cache.hpp"
#include "guekdv/cli/suites.hpp"
#include "guekdv/errors.hpp"
#include "guekdv/gue/wick.hpp"
#include "guekdv/limit/identities.hpp"
#include "guekdv/limit/okounkov.hpp"
#include "guekdv/parallel.hpp"
#include "guekdv/witten/npoint.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

namespace guekdv::cli {
namespace {

using json = nlohmann::ordered_json;
using gue::IndexMultiset;

constexpr std::size_t kMaxListedFailures = 100;

struct Options {
  std::string config_path;
  std::string cache_path;
  std::string format;
  int workers = 0;

  int g = 0;
  std::vector<int> i;
  std::vector<int> d;
  int n = 0;
  std::vector<std::string> x;
  std::vector<std::string> kappa;
  std::optional<int> h;
  std::optional<int> n_opt;
  std::optional<int> jmax;
  std::string parity = "even";
  std::string mode = "okounkov";
  std::string suite;
  std::string cache_action;
  std::vector<std::string> cache_files;
};

json int_array(const std::vector<int>& v) {
  json a = json::array();
  for (const int k : v) a.push_back(k);
  return a;
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

std::vector<Rat> parse_rats(const std::string& flag, const std::vector<std::string>& items) {
  std::vector<Rat> out;
  for (const auto& s : items) {
    try {
      out.push_back(Rat::parse(s));
    } catch (const std::exception&) {
      throw UsageError(flag, "'" + s + "' is not a rational number");
    }
  }
  return out;
}

IndexMultiset index_multiset(const std::vector<int>& i) {
  for (const int k : i) {
    if (k < 1) throw UsageError("--i", "entries must be positive");
  }
  return IndexMultiset(i);
}

json report_json(const ResidualReport& rep) {
  json j;
  j["suite"] = rep.name;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures.size();
  json f = json::array();
  for (std::size_t k = 0; k < rep.failures.size() && k < kMaxListedFailures; ++k) {
    f.push_back({{"key", rep.failures[k].key}, {"value", rep.failures[k].value}});
  }
  j["failed"] = f;
  if (rep.failures.size() > kMaxListedFailures) j["failed_truncated"] = true;
  json notes = json::object();
  for (const auto& [k, v] : rep.notes) notes[k] = v;
  j["notes"] = notes;
  return j;
}

void require_json(const Config& cfg, const std::string& what) {
  if (cfg.format != "json") throw UsageError("--format", what + " output is json only");
}

std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) w[c] = head[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? "  " : "");
      if (c + 1 < r.size()) {
        os << std::left << std::setw(static_cast<int>(w[c])) << r[c];
      } else {
        os << r[c];
      }
    }
    os << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
  return os.str();
}

class Runner {
 public:
  Runner(const Options& o, Config cfg, std::ostream& out) : o_(o), cfg_(std::move(cfg)), out_(out) {
    counter_ = std::make_unique<gue::MapCounter>(gue::MapCounterOptions{std::min(12, cfg_.wick_bound), true, true});
    if (!cfg_.cache.empty()) {
      cache_ = MapCache::load_or_empty(cfg_.cache);
      cache_.seed(*counter_);
    }
  }

  int map() {
    require_json(cfg_, "map");
    if (o_.g < 0) throw UsageError("--g", "must be nonnegative");
    const IndexMultiset i = index_multiset(o_.i);
    const BigInt v = counter_->count(o_.g, i);
    json j;
    j["g"] = o_.g;
    j["i"] = int_array(i.values());
    j["value"] = v.get_str();
    const auto ent = counter_->entries();
    const auto it = ent.find({o_.g, i});
    j["producer"] = it == ent.end() ? "vanishing" : gue::producer_name(it->second.producer);
    emit(j);
    return persist(kOk);
  }

  int correlator() {
    require_json(cfg_, "correlator");
    const IndexMultiset i = index_multiset(o_.i);
    json j;
    j["i"] = int_array(i.values());
    const bool enumerable = i.total() <= cfg_.wick_bound;
    const gue::WickOptions opts{cfg_.wick_bound};
    const gue::CorrPolyN conn = enumerable ? gue::connected_correlator(i, opts) : gue::connected_correlator_recursive(i);
    if (enumerable) {
      j["full"] = gue::full_correlator(i, opts).str();
    } else {
      j["full"] = nullptr;
    }
    j["connected"] = conn.str();
    json genera = json::object();
    for (int g = 0; g <= std::max(0, i.max_genus()); ++g) {
      genera[std::to_string(g)] = conn.coefficient(i.n_exponent(g)).str();
    }
    j["map_counts"] = genera;
    j["backend"] = enumerable ? "wick" : "recursion";
    emit(j);
    return kOk;
  }

  int witten() {
    require_json(cfg_, "witten");
    if (o_.g < 0) throw UsageError("--g", "must be nonnegative");
    for (const int k : o_.d) {
      if (k < 0) throw UsageError("--d", "entries must be nonnegative");
    }
    json j;
    j["g"] = o_.g;
    j["d"] = int_array(o_.d);
    j["value"] = witten::intersection_number(o_.g, o_.d, {cfg_.g_max, cfg_.n_max}).str();
    emit(j);
    return kOk;
  }

  int qpoly() {
    require_json(cfg_, "qpoly");
    if (o_.g < 0) throw UsageError("--g", "must be nonnegative");
    if (o_.n < 1) throw UsageError("--n", "must be positive");
    if (2 * o_.g - 2 + o_.n <= 0) throw UsageError("--n", "Q_g is a closed form for (g, n) = (0, 1), (0, 2)");
    const HomogPoly& q = witten::q_polynomial(o_.g, o_.n, {cfg_.g_max, cfg_.n_max});
    json j;
    j["g"] = o_.g;
    j["n"] = o_.n;
    j["degree"] = q.degree();
    j["poly"] = q.str();
    json coeffs = json::object();
    for (const auto& [e, c] : q.terms()) coeffs[witten_key(e)] = c.str();
    j["coefficients"] = coeffs;
    emit(j);
    return kOk;
  }

  int limit() {
    if (o_.x.empty()) throw UsageError("--x", "at least one point is required");
    const std::vector<Rat> x = parse_rats("--x", o_.x);
    for (const auto& r : x) {
      if (r <= Rat(0)) throw UsageError("--x", "entries must be positive");
    }
    const std::vector<Rat> ladder =
        o_.kappa.empty() ? std::vector<Rat>{250, 500, 1000, 2000} : parse_rats("--kappa-list", o_.kappa);
    for (const auto& k : ladder) {
      if (k <= Rat(0)) throw UsageError("--kappa-list", "entries must be positive");
    }
    if (o_.mode == "identity") return identity_limit(x, ladder);
    if (o_.g < 0) throw UsageError("--g", "must be nonnegative");
    const gue::Parity parity = o_.parity == "odd" ? gue::Parity::Odd : gue::Parity::Even;
    if (parity == gue::Parity::Odd && x.size() % 2 != 0) {
      throw UsageError("--parity", "odd parity needs an even number of points");
    }
    const auto rep = limit::okounkov_convergence_report(o_.g, x, ladder, *counter_, parity);
    if (cfg_.format == "csv") {
      out_ << rep.csv(cfg_.digits);
      return persist(kOk);
    }
    auto fmt = [&](double v) { return limit::format_double(v, cfg_.digits); };
    if (cfg_.format == "table") {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : rep.rows) {
        std::string idx;
        for (std::size_t k = 0; k < r.indices.size(); ++k) idx += (k ? ";" : "") + std::to_string(r.indices[k]);
        rows.push_back({r.kappa.str(), idx, fmt(r.scaled_value), fmt(r.limit), fmt(r.rel_error)});
      }
      out_ << table({"kappa", "indices", "scaled_value", "limit", "rel_error"}, rows);
      return persist(kOk);
    }
    json j;
    j["g"] = o_.g;
    j["x"] = rat_array(x);
    j["parity"] = o_.parity;
    j["limit"] = rep.limit.str();
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"kappa", r.kappa.str()},
                      {"indices", int_array(r.indices)},
                      {"scaled_value", fmt(r.scaled_value)},
                      {"limit", fmt(r.limit)},
                      {"rel_error", fmt(r.rel_error)}});
    }
    j["rows"] = rows;
    emit(j);
    return persist(kOk);
  }

  int verify() {
    require_json(cfg_, "verify");
    SuiteArgs a{cfg_, o_.h, o_.n_opt, o_.jmax, o_.d};
    const ResidualReport rep = run_suite(o_.suite, a, *counter_);
    emit(report_json(rep));
    return persist(rep.ok() ? kOk : kFailure);
  }

  int cache() {
    require_json(cfg_, "cache");
    if (o_.cache_action == "show") {
      if (cfg_.cache.empty()) throw UsageError("--cache", "cache show needs a cache path");
      out_ << MapCache::load(cfg_.cache).dump();
      return kOk;
    }
    if (o_.cache_files.empty()) throw UsageError("files", "cache merge needs at least one input file");
    MapCache merged = cache_;
    json sources = json::array();
    for (const auto& f : o_.cache_files) {
      merged.merge(MapCache::load(f));
      sources.push_back(f);
    }
    if (!cfg_.cache.empty()) merged.save(cfg_.cache);
    json j;
    j["entries"] = merged.size();
    j["sources"] = sources;
    if (cfg_.cache.empty()) {
      j["cache"] = json::parse(merged.dump());
    } else {
      j["output"] = cfg_.cache;
    }
    emit(j);
    return kOk;
  }

 private:
  static std::string witten_key(const std::vector<int>& e) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
    return s;
  }

  int identity_limit(const std::vector<Rat>& x, const std::vector<Rat>& ladder) {
    require_json(cfg_, "limit identity");
    const int h = o_.h.value_or(1);
    if (h < 0) throw UsageError("--h", "must be nonnegative");
    const auto rep = limit::limit_of_identity_demo(h, x, ladder, *counter_);
    auto fmt = [&](double v) { return limit::format_double(v, cfg_.digits); };
    json j;
    j["h"] = h;
    j["x"] = rat_array(x);
    j["lhs_limit"] = rep.lhs_limit.str();
    j["rhs_limit"] = rep.rhs_limit.str();
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"kappa", r.kappa.str()},
                      {"j", int_array(r.j)},
                      {"lhs_scaled", fmt(r.lhs_scaled)},
                      {"rhs_scaled", fmt(r.rhs_scaled)}});
    }
    j["rows"] = rows;
    emit(j);
    return persist(kOk);
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int persist(int code) {
    if (!cfg_.cache.empty()) {
      cache_.absorb(*counter_, "run");
      cache_.save(cfg_.cache);
    }
    return code;
  }

  const Options& o_;
  Config cfg_;
  std::ostream& out_;
  std::unique_ptr<gue::MapCounter> counter_;
  MapCache cache_;
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--config", o.config_path, "key=value config file");
  sub.add_option("--cache", o.cache_path, "map-count cache file");
  sub.add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  sub.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact GUE map counts, Toda and KdV checks, Witten numbers", "guekdv"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

  auto* map = app.add_subcommand("map", "Map count Map_g(i)");
  map->add_option("--g", o.g, "genus")->required();
  map->add_option("--i", o.i, "trace powers, comma separated")->required()->delimiter(',');

  auto* corr = app.add_subcommand("correlator", "Full and connected GUE correlators");
  corr->add_option("--i", o.i, "trace powers, comma separated")->required()->delimiter(',');

  auto* wit = app.add_subcommand("witten", "Intersection number <tau_d1 ... tau_dn>_g");
  wit->add_option("--g", o.g, "genus")->required();
  wit->add_option("--d", o.d, "descendant degrees, comma separated")->required()->delimiter(',');

  auto* qp = app.add_subcommand("qpoly", "n-point polynomial Q_g");
  qp->add_option("--g", o.g, "genus")->required();
  qp->add_option("--n", o.n, "number of points")->required();

  auto* lim = app.add_subcommand("limit", "Scaled map counts against Witten n-point functions");
  lim->add_option("mode", o.mode, "okounkov or identity")->check(CLI::IsMember({"okounkov", "identity"}));
  lim->add_option("--g", o.g, "genus");
  lim->add_option("--h", o.h, "identity genus");
  lim->add_option("--x", o.x, "points, comma separated rationals")->delimiter(',');
  lim->add_option("--kappa-list", o.kappa, "kappa ladder, comma separated rationals")->delimiter(',');
  lim->add_option("--parity", o.parity, "even or odd indices")->check(CLI::IsMember({"even", "odd"}));

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--h", o.h, "identity genus bound");
  ver->add_option("--n", o.n_opt, "identity insertion bound");
  ver->add_option("--jmax", o.jmax, "largest j entry");
  ver->add_option("--d", o.d, "KdV flows, comma separated")->delimiter(',');

  auto* cache = app.add_subcommand("cache", "Merge or show map-count caches");
  cache->add_option("action", o.cache_action, "merge or show")->required()->check(CLI::IsMember({"merge", "show"}));
  cache->add_option("files", o.cache_files, "input caches");

  for (auto* s : {map, corr, wit, qp, lim, ver, cache}) add_common(*s, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Config cfg;
    if (!o.config_path.empty()) {
      try {
        cfg = Config::load(o.config_path);
      } catch (const ParseError& e) {
        throw UsageError("--config", e.what());
      }
    }
    if (!o.cache_path.empty()) cfg.cache = o.cache_path;
    if (!o.format.empty()) cfg.format = o.format;
    if (o.workers > 0) cfg.workers = o.workers;
    cfg.validate();
    set_worker_count(static_cast<unsigned>(cfg.workers));

    Runner r(o, cfg, out);
    if (map->parsed()) return r.map();
    if (corr->parsed()) return r.correlator();
    if (wit->parsed()) return r.witten();
    if (qp->parsed()) return r.qpoly();
    if (lim->parsed()) return r.limit();
    if (ver->parsed()) return r.verify();
    return r.cache();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CacheConflict& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace guekdv::cli

// hh: batch driver for the E6 family computations.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <atomic>
#include <map>
#include <mutex>

#include "hhcoh/bar_oracle.hpp"
#include "hhcoh/demo.hpp"
#include "hhcoh/e6/ring.hpp"
#include "hhcoh/e6/translates.hpp"
#include "hhcoh/e6/validate.hpp"
#include "hhcoh/json_io.hpp"

using namespace hhcoh;
using namespace hhcoh::e6;

namespace {

struct RunConfig {
  std::string command;
  int s = 1;
  unsigned characteristic = 0;
  int max_degree = -1;  // command default when negative
  std::string format = "text";
  std::string output;
  bool verbose = false;
  std::uint64_t seed = 0;
  // command specific
  std::string typo;
  int happel_degree = 9;
  std::string demo;
  std::string algebra_file;
  std::string what = "quiver";
  int sample = 0;
};

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kRuntime = 3 };

/// What a command hands back: the JSON document, a flat table for CSV, and the text rendering.
struct Output {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string text;
  bool ok = true;
};

std::ostream* g_log = nullptr;

void log(const RunConfig& cfg, const std::string& msg) {
  if (cfg.verbose && g_log) *g_log << "[hh] " << msg << "\n";
}

unsigned thread_count() {
  unsigned n = 1;
  if (const char* env = std::getenv("HH_THREADS")) {
    try {
      n = static_cast<unsigned>(std::max(1L, std::stol(env)));
    } catch (...) {
      n = 1;
    }
  } else {
    n = std::max(1u, std::thread::hardware_concurrency());
  }
  return n;
}

// Runs fn(0..n-1) on up to HH_THREADS workers; results are written by index so order does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(err_mutex);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

template <class Fn>
auto with_field(unsigned p, Fn fn) {
  if (p == 0) return fn(RationalField{});
  return fn(PrimeField(p));
}

std::string field_name(unsigned p) { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

Json config_json(const RunConfig& cfg) {
  return Json{{"command", cfg.command}, {"s", cfg.s}, {"char", cfg.characteristic}, {"max_degree", cfg.max_degree}};
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string table_text(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(w[c])) << r[c];
    }
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

// ---------------------------------------------------------------- verify-resolution

int parse_typo(const std::string& typo) {
  if (typo.size() < 2 || typo[0] != 'd') throw CLI::ValidationError("--inject-typo", "expected dK with 0 <= K <= 10");
  int k = -1;
  try {
    std::size_t used = 0;
    k = std::stoi(typo.substr(1), &used);
    if (used != typo.size() - 1) k = -1;
  } catch (...) {
  }
  if (k < 0 || k > 10) throw CLI::ValidationError("--inject-typo", "expected dK with 0 <= K <= 10");
  return k;
}

Output cmd_verify_resolution(const RunConfig& cfg) {
  int max_degree = cfg.max_degree < 0 ? 11 : cfg.max_degree;
  FamilyOptions opts;
  if (!cfg.typo.empty()) opts.typo = parse_typo(cfg.typo);
  return with_field(cfg.characteristic, [&](auto field) {
    using F = decltype(field);
    log(cfg, "building R'_" + std::to_string(cfg.s) + " over " + field_name(cfg.characteristic));
    Family<F> fam(cfg.s, field, opts);
    auto rep = verify_resolution(fam, max_degree, cfg.happel_degree);
    Output out;
    out.ok = rep.ok();
    out.header = {"check", "degree", "pass", "detail"};
    Json checks = Json::array();
    std::ostringstream text;
    std::map<std::string, std::pair<int, int>> tally;
    for (const auto& c : rep.checks) {
      checks.push_back(Json{{"check", c.kind}, {"degree", c.degree}, {"pass", c.ok}, {"detail", c.detail}});
      out.rows.push_back({c.kind, std::to_string(c.degree), c.ok ? "true" : "false", c.detail});
      auto& [n, bad] = tally[c.kind];
      ++n;
      if (!c.ok) {
        ++bad;
        text << "FAIL " << c.kind << " at degree " << c.degree << ": " << c.detail << "\n";
      }
    }
    out.json = config_json(cfg);
    out.json["max_degree"] = max_degree;
    out.json["inject_typo"] = cfg.typo.empty() ? Json(nullptr) : Json(cfg.typo);
    out.json["checks"] = std::move(checks);
    out.json["pass"] = out.ok;
    std::ostringstream head;
    head << "R'_" << cfg.s << " over " << field_name(cfg.characteristic) << ", degrees 0.." << max_degree;
    if (!cfg.typo.empty()) head << ", typo in " << cfg.typo;
    head << "\n";
    for (const char* k : {"shape", "d2", "exact", "happel", "syzygy"}) {
      auto [n, bad] = tally[k];
      head << "  " << std::left << std::setw(7) << k << std::right << " " << (n - bad) << "/" << n << " "
           << pass_word(bad == 0) << "\n";
    }
    out.text = head.str() + text.str() + (out.ok ? "resolution verified\n" : "resolution check failed\n");
    return out;
  });
}

// ---------------------------------------------------------------- dims

struct DimRow {
  int t = 0;
  long long hom = 0, image = 0, hh = 0;
  ExpectedDims expected;
  bool ok() const { return hom == expected.hom && image == expected.image && hh == expected.hh; }
};

Output cmd_dims(const RunConfig& cfg) {
  return with_field(cfg.characteristic, [&](auto field) {
    using F = decltype(field);
    Family<F> fam(cfg.s, field);
    const int M = fam.period().period;
    int max_degree = cfg.max_degree < 0 ? 2 * M - 1 : cfg.max_degree;
    std::vector<DimRow> rows(static_cast<std::size_t>(max_degree + 1));
    // differentials are cached behind a lock; build them once before fanning out
    for (int t = 0; t <= max_degree + 1; ++t) fam.complex().d(t);
    log(cfg, "computing " + std::to_string(rows.size()) + " degrees on " + std::to_string(thread_count()) + " threads");
    parallel_for(rows.size(), [&](std::size_t i) {
      int t = static_cast<int>(i);
      Cohomology<F> h(fam.complex(), t);
      rows[i] = DimRow{t, static_cast<long long>(h.cochain_dim()), static_cast<long long>(h.image_out_dim()),
                       static_cast<long long>(h.dim()), expected_dims(cfg.s, cfg.characteristic, t)};
    });
    Output out;
    out.header = {"s", "char", "t", "hom", "hom_expected", "image", "image_expected", "hh", "hh_expected", "match"};
    Json jr = Json::array();
    for (const auto& r : rows) {
      out.ok = out.ok && r.ok();
      jr.push_back(Json{{"t", r.t},
                        {"hom", {{"computed", r.hom}, {"expected", r.expected.hom}}},
                        {"image", {{"computed", r.image}, {"expected", r.expected.image}}},
                        {"hh", {{"computed", r.hh}, {"expected", r.expected.hh}}},
                        {"match", r.ok()}});
      out.rows.push_back({std::to_string(cfg.s), std::to_string(cfg.characteristic), std::to_string(r.t),
                          std::to_string(r.hom), std::to_string(r.expected.hom), std::to_string(r.image),
                          std::to_string(r.expected.image), std::to_string(r.hh), std::to_string(r.expected.hh),
                          r.ok() ? "true" : "false"});
    }
    out.json = config_json(cfg);
    out.json["max_degree"] = max_degree;
    out.json["period"] = M;
    out.json["rows"] = std::move(jr);
    out.json["pass"] = out.ok;

    // residue r down, l = t div 11 across; each cell hom/image/hh, '*' marks a mismatch
    std::ostringstream os;
    os << "R'_" << cfg.s << " over " << field_name(cfg.characteristic) << ", M = " << M
       << "; cells are dim Hom / dim Im delta / dim HH\n";
    int cols = max_degree / 11 + 1;
    std::vector<std::string> header{"r"};
    for (int l = 0; l < cols; ++l) header.push_back("l=" + std::to_string(l));
    std::vector<std::vector<std::string>> grid;
    for (int r = 0; r < 11 && r <= max_degree; ++r) {
      std::vector<std::string> line{std::to_string(r)};
      for (int l = 0; l < cols; ++l) {
        int t = 11 * l + r;
        if (t > max_degree) {
          line.push_back("");
          continue;
        }
        const auto& d = rows[static_cast<std::size_t>(t)];
        line.push_back(std::to_string(d.hom) + "/" + std::to_string(d.image) + "/" + std::to_string(d.hh) +
                       (d.ok() ? "" : "*"));
      }
      grid.push_back(std::move(line));
    }
    os << table_text(header, grid);
    std::size_t bad = std::count_if(rows.begin(), rows.end(), [](const DimRow& r) { return !r.ok(); });
    os << (bad == 0 ? "all " + std::to_string(rows.size()) + " degrees match\n"
                    : std::to_string(bad) + " mismatching degrees\n");
    out.text = os.str();
    return out;
  });
}

// ---------------------------------------------------------------- ring

Json gen_json(const GeneratorId& g) { return Json::array({g.family, g.degree}); }

template <class F>
Json relation_json(const RunConfig& cfg, const RelationCheck& c) {
  Json computed = Json::array();
  for (const auto& x : c.computed) computed.push_back(x);
  return Json{{"s", cfg.s},
              {"char", cfg.characteristic},
              {"lhs", Json::array({gen_json(c.a), gen_json(c.b)})},
              {"degree", c.degree},
              {"rule", c.rule},
              {"expected", c.expected},
              {"computed_class", std::move(computed)},
              {"rhs_defined", c.rhs_defined},
              {"pass", c.exact},
              {"pass_up_to_unit", c.up_to_unit}};
}

Output cmd_ring(const RunConfig& cfg) {
  if (cfg.s > 2) throw CLI::ValidationError("--s", "the ring command is limited to s <= 2");
  return with_field(cfg.characteristic, [&](auto field) {
    using F = decltype(field);
    Family<F> fam(cfg.s, field);
    RingModel<F> ring(fam);
    Output out;
    out.header = {"section", "lhs", "degree", "rule", "expected", "computed_class", "pass"};
    auto lhs = [](const RelationCheck& c) { return to_string(c.a) + "*" + to_string(c.b); };
    auto joined = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
      return s;
    };

    log(cfg, "generation");
    Json gen = Json::array();
    std::size_t gen_bad = 0;
    for (const auto& g : verify_generation(ring)) {
      gen.push_back(Json{{"degree", g.degree}, {"hh", g.hh}, {"generators", g.generators}, {"rank", g.rank}, {"pass", g.ok()}});
      gen_bad += !g.ok();
    }

    log(cfg, "relations");
    std::vector<RelationCheck> rels;
    if (cfg.sample > 0) {
      // seeded random subset of generator pairs that the presentation talks about
      std::mt19937_64 rng(cfg.seed);
      const auto& gens = ring.generators();
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x; y < gens.size(); ++y)
          if (presented_product(cfg.s, cfg.characteristic, gens[x], gens[y])) pairs.emplace_back(x, y);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      pairs.resize(std::min(pairs.size(), static_cast<std::size_t>(cfg.sample)));
      std::sort(pairs.begin(), pairs.end());
      for (auto [x, y] : pairs)
        if (auto c = check_relation(ring, gens[x], gens[y])) rels.push_back(std::move(*c));
    } else {
      rels = verify_relations(ring);
    }
    Json jr = Json::array();
    std::size_t rel_bad = 0;
    for (const auto& c : rels) {
      jr.push_back(relation_json<F>(cfg, c));
      rel_bad += !c.exact;
      out.rows.push_back({"relation", lhs(c), std::to_string(c.degree), c.rule, c.expected, joined(c.computed),
                          c.exact ? "true" : "false"});
    }
    Json dup = Json::array();
    std::size_t dup_bad = 0;
    for (const auto& c : duplicate_line_report(ring)) {
      dup.push_back(relation_json<F>(cfg, c));
      dup_bad += !c.exact;
      out.rows.push_back({"duplicate_line", lhs(c), std::to_string(c.degree), c.rule, c.expected, joined(c.computed),
                          c.exact ? "true" : "false"});
    }

    log(cfg, "factorization");
    Json fac = Json::array();
    std::size_t fac_bad = 0;
    for (const auto& c : verify_factorization(ring)) {
      fac.push_back(Json{{"item", std::string(1, c.item)},
                         {"target", gen_json(c.target)},
                         {"witness", c.witness ? Json::array({gen_json(c.witness->first), gen_json(c.witness->second)})
                                               : Json(nullptr)},
                         {"pass", c.witness.has_value()}});
      fac_bad += !c.witness;
      out.rows.push_back({"factorization", to_string(c.target), std::to_string(c.target.degree),
                          std::string("(") + c.item + ")",
                          c.witness ? to_string(c.witness->first) + "*" + to_string(c.witness->second) : "", "",
                          c.witness ? "true" : "false"});
    }

    log(cfg, "translates");
    Json tr = Json::array();
    std::size_t tr_bad = 0, tr_n = 0;
    for (int family : translate_families()) {
      for (int t : generator_degrees(family, cfg.s, cfg.characteristic)) {
        auto checks = verify_translates(fam, family, t, 21);
        bool ok = std::all_of(checks.begin(), checks.end(), [](const TranslateCheck& c) { return c.ok; });
        Json failed = Json::array();
        for (const auto& c : checks)
          if (!c.ok) failed.push_back(Json{{"t0", c.t0}, {"error", c.error}});
        tr.push_back(Json{{"generator", gen_json({family, t})}, {"max_t0", 21}, {"failures", std::move(failed)}, {"pass", ok}});
        ++tr_n;
        tr_bad += !ok;
        out.rows.push_back({"translates", to_string(GeneratorId{family, t}), std::to_string(t), "t0<=21", "", "",
                            ok ? "true" : "false"});
      }
    }

    const std::size_t gen_n = gen.size();
    out.ok = gen_bad + rel_bad + dup_bad + fac_bad + tr_bad == 0;
    out.json = config_json(cfg);
    out.json.erase("max_degree");
    out.json["period"] = ring.period();
    if (cfg.sample > 0) {
      out.json["sample"] = cfg.sample;
      out.json["seed"] = cfg.seed;
    }
    out.json["generation"] = std::move(gen);
    out.json["relations"] = std::move(jr);
    out.json["duplicate_line"] = std::move(dup);
    out.json["factorization"] = std::move(fac);
    out.json["translates"] = std::move(tr);
    out.json["pass"] = out.ok;

    std::ostringstream os;
    os << "R'_" << cfg.s << " over " << field_name(cfg.characteristic) << ", " << ring.generators().size()
       << " generators below M = " << ring.period() << "\n";
    os << "  generation     " << pass_word(gen_bad == 0) << " (" << gen_n - gen_bad << "/" << gen_n << " degrees)\n";
    os << "  relations      " << pass_word(rel_bad == 0) << " (" << rels.size() - rel_bad << "/" << rels.size() << ")\n";
    os << "  duplicate line " << pass_word(dup_bad == 0) << "\n";
    os << "  factorization  " << pass_word(fac_bad == 0) << "\n";
    os << "  translates     " << pass_word(tr_bad == 0) << " (" << tr_n - tr_bad << "/" << tr_n << ")\n";
    for (const auto& c : rels)
      if (!c.exact) os << "FAIL " << lhs(c) << " " << c.rule << ": expected " << c.expected << "\n";
    out.text = os.str();
    return out;
  });
}

// ---------------------------------------------------------------- oracle

template <class F>
Output oracle_table(const RunConfig& cfg, const Algebra<F>& A, const BimoduleComplex<F>* C, int max_degree,
                    const std::string& title) {
  BarOracle<F> bar(A, BarOracleOptions{max_degree});
  std::vector<std::size_t> bar_dims(static_cast<std::size_t>(max_degree + 1)), res_dims(bar_dims.size());
  if (C)
    for (int t = 0; t <= max_degree + 1; ++t) C->d(t);
  if (C)
    parallel_for(res_dims.size(), [&](std::size_t t) { res_dims[t] = Cohomology<F>(*C, static_cast<int>(t)).dim(); });
  for (std::size_t t = 0; t < bar_dims.size(); ++t) bar_dims[t] = bar.hh_dim(static_cast<int>(t));
  std::size_t center = A.center_dimension();
  Output out;
  out.header = {"t", "bar", "resolution", "agree"};
  Json rows = Json::array();
  for (std::size_t t = 0; t < bar_dims.size(); ++t) {
    bool agree = !C || bar_dims[t] == res_dims[t];
    out.ok = out.ok && agree;
    Json row{{"t", t}, {"bar", bar_dims[t]}};
    row["resolution"] = C ? Json(res_dims[t]) : Json(nullptr);
    row["agree"] = agree;
    rows.push_back(std::move(row));
    out.rows.push_back({std::to_string(t), std::to_string(bar_dims[t]), C ? std::to_string(res_dims[t]) : "",
                        !C ? "n/a" : agree ? "true" : "false"});
  }
  bool center_ok = bar_dims[0] == center;
  out.ok = out.ok && center_ok;
  out.json = Json{{"command", cfg.command}, {"algebra", title}, {"char", cfg.characteristic}, {"max_degree", max_degree},
                  {"dim", A.dim()}, {"center_dim", center}, {"rows", std::move(rows)}, {"pass", out.ok}};
  out.text = title + " over " + field_name(cfg.characteristic) + ", dim " + std::to_string(A.dim()) + ", centre " +
             std::to_string(center) + (center_ok ? "" : " (differs from HH^0)") + "\n" +
             table_text(out.header, out.rows) + (out.ok ? "oracle agrees\n" : "oracle disagrees\n");
  return out;
}

Output cmd_oracle(const RunConfig& cfg) {
  return with_field(cfg.characteristic, [&](auto field) {
    using F = decltype(field);
    if (cfg.demo == "dual-numbers") {
      int max_degree = cfg.max_degree < 0 ? 4 : cfg.max_degree;
      auto A = dual_numbers(field);
      auto C = dual_numbers_resolution(A);
      return oracle_table<F>(cfg, *A, &C, max_degree, "dual numbers");
    }
    if (!cfg.demo.empty()) throw CLI::ValidationError("--demo", "unknown demo " + cfg.demo);
    int max_degree = cfg.max_degree < 0 ? 3 : cfg.max_degree;
    if (!cfg.algebra_file.empty()) {
      auto data = read_path_algebra(cfg.algebra_file);
      auto A = Algebra<F>::build(data.quiver, field, data.relations, data.nilpotency_bound);
      return oracle_table<F>(cfg, A, nullptr, max_degree, cfg.algebra_file);
    }
    Family<F> fam(cfg.s, field);
    return oracle_table<F>(cfg, fam.algebra(), &fam.complex(), max_degree, "R'_" + std::to_string(cfg.s));
  });
}

// ---------------------------------------------------------------- export

Output cmd_export(const RunConfig& cfg) {
  Output out;
  if (cfg.what == "quiver") {
    auto q = build_quiver(cfg.s);
    out.json = path_algebra_to_json(q, build_relations(cfg.s), 5);
    out.header = {"arrow", "source", "target"};
    for (const auto& a : q.arrows()) out.rows.push_back({a.label, std::to_string(a.source), std::to_string(a.target)});
  } else if (cfg.what == "differentials") {
    int max_degree = cfg.max_degree < 0 ? 10 : cfg.max_degree;
    out = with_field(cfg.characteristic, [&](auto field) {
      using F = decltype(field);
      Family<F> fam(cfg.s, field);
      Output o;
      o.json = config_json(cfg);
      o.json["max_degree"] = max_degree;
      o.json["algebra"] = path_algebra_to_json(fam.algebra().quiver(), fam.algebra().relations(), 5);
      Json ds = Json::array();
      o.header = {"t", "row", "col", "a", "b", "coeff"};
      const auto& q = fam.algebra().quiver();
      for (int t = 0; t <= max_degree; ++t) {
        const auto& d = fam.complex().d(t);
        Json m = map_to_json(d);
        m["t"] = t;
        ds.push_back(std::move(m));
        for (std::size_t c = 0; c < d.cols(); ++c)
          for (const auto& [r, entry] : d.column(c))
            for (const auto& term : entry)
              o.rows.push_back({std::to_string(t), std::to_string(r), std::to_string(c),
                                to_string(q, fam.algebra().basis_path(term.a)),
                                to_string(q, fam.algebra().basis_path(term.b)), fam.field().to_string(term.coeff)});
      }
      o.json["differentials"] = std::move(ds);
      return o;
    });
  } else if (cfg.what == "expected") {
    int M = period_data(cfg.s, cfg.characteristic).period;
    int max_degree = cfg.max_degree < 0 ? 2 * M - 1 : cfg.max_degree;
    out.header = {"s", "char", "t", "hom", "image", "hh"};
    Json rows = Json::array();
    for (int t = 0; t <= max_degree; ++t) {
      auto e = expected_dims(cfg.s, cfg.characteristic, t);
      rows.push_back(Json{{"s", cfg.s}, {"char", cfg.characteristic}, {"t", t}, {"hom", e.hom}, {"image", e.image}, {"hh", e.hh}});
      out.rows.push_back({std::to_string(cfg.s), std::to_string(cfg.characteristic), std::to_string(t),
                          std::to_string(e.hom), std::to_string(e.image), std::to_string(e.hh)});
    }
    out.json = Json{{"s", cfg.s}, {"char", cfg.characteristic}, {"period", M}, {"rows", std::move(rows)}};
  } else {
    throw CLI::ValidationError("--what", "expected quiver, differentials or expected");
  }
  out.text = table_text(out.header, out.rows);
  return out;
}

std::string render(const RunConfig& cfg, const Output& out) {
  if (cfg.format == "json") return out.json.dump(2) + "\n";
  if (cfg.format == "csv") {
    std::string s = csv_row(out.header);
    for (const auto& r : out.rows) s += csv_row(r);
    return s;
  }
  return out.text;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Hochschild cohomology of the E6 family R'_s: resolution checks, dimension tables, ring relations"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool family) {
    if (family) {
      sub->add_option("--s", cfg.s, "family parameter s")->check(CLI::Range(1, 8));
      sub->add_option("--char", cfg.characteristic, "characteristic: 0 for Q, or a prime")
          ->check([](const std::string& v) {
            try {
              unsigned long p = std::stoul(v);
              if (p == 0 || (p < (1UL << 31) && is_prime(p))) return std::string();
            } catch (...) {
            }
            return "characteristic must be 0 or a prime, got " + v;
          });
    }
    sub->add_option("--max-degree", cfg.max_degree, "highest degree t")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", cfg.output, "write output to this file");
    sub->add_flag("--verbose,-v", cfg.verbose, "progress on stderr");
    sub->add_option("--seed", cfg.seed, "seed for randomized subsets");
  };

  auto* verify = app.add_subcommand("verify-resolution", "d^2 = 0, exactness, shapes and Happel multiplicities");
  common(verify, true);
  verify->add_option("--inject-typo", cfg.typo, "corrupt one entry of d_K (dK, K = 0..10)");
  verify->add_option("--happel-degree", cfg.happel_degree, "last m for the Ext multiplicity check")
      ->check(CLI::NonNegativeNumber);

  auto* dims = app.add_subcommand("dims", "computed vs expected dim Hom, dim Im delta, dim HH");
  common(dims, true);

  auto* ring = app.add_subcommand("ring", "generators, relations, factorization and translates");
  common(ring, true);
  ring->add_option("--sample", cfg.sample, "check only this many random relations (uses --seed)")
      ->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "bar complex oracle against the resolution");
  common(oracle, true);
  oracle->add_option("--demo", cfg.demo, "dual-numbers")->check(CLI::IsMember({"dual-numbers"}));
  oracle->add_option("--algebra", cfg.algebra_file, "path algebra JSON file (oracle only)")->check(CLI::ExistingFile);

  auto* exp = app.add_subcommand("export", "quiver, differentials or expected dimension tables");
  common(exp, true);
  exp->add_option("--what", cfg.what, "quiver | differentials | expected")
      ->check(CLI::IsMember({"quiver", "differentials", "expected"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  g_log = &std::cerr;

  Output out;
  try {
    if (cfg.command == "verify-resolution") out = cmd_verify_resolution(cfg);
    else if (cfg.command == "dims") out = cmd_dims(cfg);
    else if (cfg.command == "ring") out = cmd_ring(cfg);
    else if (cfg.command == "oracle") out = cmd_oracle(cfg);
    else out = cmd_export(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "hh: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceBoundExceeded& e) {
    std::cerr << "hh: resource bound exceeded: " << e.what() << "\n";
    return kRuntime;
  } catch (const std::exception& e) {
    std::cerr << "hh: " << e.what() << "\n";
    return kRuntime;
  }

  std::string text = render(cfg, out);
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "hh: cannot write " << cfg.output << "\n";
      return kRuntime;
    }
    f << text;
  }
  return out.ok ? kOk : kMismatch;
}

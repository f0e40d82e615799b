// Batch driver over the fixture catalog.
//
// Every command sweeps dimension vectors (one via --nu, otherwise all with
// 1 <= |nu| <= --max-size), shards the sweep over --jobs threads and prints the
// results in sweep order, so output does not depend on the thread count.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or cap violation.

#include <atomic>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "klr/klr.hpp"

using nlohmann::json;
using namespace klr;

namespace {

struct RunConfig {
  std::string command;
  std::string quiver = "catalog:A2";
  std::string nu;
  int max_size = 3;
  int degree_bound = 6;
  std::string window = "-6:6";
  int lo = -6, hi = 6;
  std::string format = "json";
  int jobs = 1;
  int pairs = 200;
  unsigned seed = 1;
  bool verify = false;
};

struct Outcome {
  json body;
  bool ok = true;
  std::vector<std::vector<std::string>> rows;  // csv rows without the leading nu column
};

std::pair<int, int> parse_window(const std::string& s) {
  auto colon = s.find(':', s.empty() ? 0 : 1);
  if (colon == std::string::npos) throw std::invalid_argument("window must be LO:HI");
  int lo = std::stoi(s.substr(0, colon)), hi = std::stoi(s.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("window: LO must not exceed HI");
  return {lo, hi};
}

std::string str_q(const mpq_class& v) { return v.get_str(); }

json grading_metadata() {
  return {
      {"deg_x", 2},
      {"deg_sigma", "a_i(l): -2 if i_l = i_{l+1}, else h(i_l,i_{l+1}) + h(i_{l+1},i_l)"},
      {"deg_basis_element", "2*deg(monomial) + sum of a along the lexicographically least reduced word"},
      {"graded_dim_hom", "sum over w with w(i) = i' of q^deg(i,w), divided by (1 - q^2)^m"},
      {"quantum_integer", "[m] = q^(m-1) + q^(m-3) + ... + q^(1-m)"},
      {"simple_modules", "shifted so that graded dimensions are bar-invariant"},
      {"projective_multiplicity", "q^(l(a)) * grdim(1_y L) for y with powers a"},
  };
}

Outcome from_report(const Report& r) {
  Outcome o;
  o.ok = r.ok();
  o.body = {{"ok", o.ok}, {"failures", r.failures()}, {"records", r.to_json()}};
  for (const auto& rec : r.records) o.rows.push_back({rec.check, rec.instance, rec.ok ? "pass" : "fail", rec.witness});
  return o;
}

Outcome run_relations(const RunConfig& cfg, const Quiver& q, const DimVector& nu) {
  KLRAlgebra alg(q, nu);
  return from_report(check_presentation(alg, cfg.degree_bound));
}

Outcome run_pbw(const RunConfig& cfg, const Quiver& q, const DimVector& nu) {
  KLRAlgebra alg(q, nu);
  Report r = check_faithfulness(alg, cfg.pairs, cfg.degree_bound, cfg.seed);
  r.append(check_pbw_freeness(alg, cfg.lo, cfg.hi));
  r.append(check_homogeneity(alg, cfg.degree_bound));
  r.append(check_reduced_word_degree(alg, 4));
  return from_report(r);
}

Outcome run_localize(const RunConfig& cfg, const Quiver& q, const DimVector& nu) {
  KLRAlgebra alg(q, nu);
  Report r = crosscheck_operators(alg, cfg.degree_bound);
  int m = alg.m();
  auto perms = all_perms(m);
  for (const auto& w : perms)
    for (int l = 0; l + 1 < m; ++l)
      if (length(left_mul_s(l, w)) == length(w) + 1) r.append(check_pbw_product(alg, l, w));
  Localization loc(alg);
  for (const auto& w : perms)
    for (const auto& x : perms)
      for (const auto& y : perms)
        if (length(compose(x, y)) == length(x) + length(y)) r.append(check_euler_identities(loc, w, x, y));
  return from_report(r);
}

Outcome run_graded_dim(const RunConfig& cfg, const Quiver& q, const DimVector& nu) {
  KLRAlgebra alg(q, nu);
  Outcome o;
  json rows = json::array();
  for (const auto& i : alg.seqs())
    for (const auto& ip : alg.seqs()) {
      GradedSeries g = alg.graded_dim_hom(i, ip);
      json coeffs = json::array(), brute = json::array();
      std::vector<std::string> row{seq_str(q, i), seq_str(q, ip)};
      bool match = true;
      for (int d = cfg.lo; d <= cfg.hi; ++d) {
        mpq_class c = g.coefficient(d);
        coeffs.push_back(str_q(c));
        row.push_back(str_q(c));
        if (cfg.verify) {
          long b = operator_space_dim(alg, i, ip, d);
          brute.push_back(std::to_string(b));
          if (c != b) match = false;
        }
      }
      json entry = {{"source", seq_str(q, i)}, {"target", seq_str(q, ip)}, {"series", g.str()}, {"coefficients", coeffs}};
      if (cfg.verify) {
        entry["brute_force"] = brute;
        entry["match"] = match;
        row.push_back(match ? "match" : "mismatch");
        o.ok = o.ok && match;
      }
      rows.push_back(entry);
      o.rows.push_back(row);
    }
  o.body = {{"ok", o.ok}, {"window", {cfg.lo, cfg.hi}}, {"rows", rows}};
  return o;
}

Outcome run_decompose(const RunConfig&, const Quiver& q, const DimVector& nu) {
  KLRAlgebra alg(q, nu);
  FiniteQuotient fq(alg);
  Outcome o;
  json simples = json::array();
  for (const auto& L : fq.simples()) {
    json ch = json::object();
    for (const auto& [i, g] : L.character) ch[seq_str(q, i)] = g.to_json();
    simples.push_back({{"label", L.label}, {"grdim", L.grdim.to_json()}, {"character", ch}});
  }
  json rows = json::array();
  for (const auto& y : divided_sequences(nu)) {
    KClass k = fq.decompose_projective(y);
    bool agree = k == fq.decompose_projective_trace(y);
    o.ok = o.ok && agree;
    json entries = json::object();
    for (const auto& l : fq.labels()) {
      auto it = k.coeff.find(l);
      QLaurent g = it == k.coeff.end() ? QLaurent() : it->second;
      std::string v = g.str();
      entries[l] = g.to_json();
      o.rows.push_back({y.str(q), l, v, agree ? "agree" : "disagree"});
    }
    rows.push_back({{"y", y.str(q)}, {"multiplicities", entries}, {"routes_agree", agree}});
  }
  o.body = {{"ok", o.ok},
            {"dim_r0", fq.r0().dim()},
            {"radical_dim", fq.radical_dim()},
            {"columns", fq.labels()},
            {"simples", simples},
            {"rows", rows}};
  return o;
}

Outcome run_compare(const RunConfig&, const Quiver& q, const DimVector& nu) {
  KRing kr(q);
  BasisComparison b = compare_bases(kr, nu);
  Outcome o;
  o.ok = b.ok();
  o.body = b.to_json();
  o.rows.push_back({std::to_string(b.num_simples), std::to_string(b.f_dimension), b.integral ? "true" : "false",
                    b.positive ? "true" : "false", o.ok ? "pass" : "fail"});
  return o;
}

// One instance per ordered pair of distinct vertices, at nu = (1 - c_ij) i + j.
Outcome run_serre(const RunConfig& cfg, const Quiver& q, int i, int j) {
  Report r;
  std::string inst = q.name(i) + "," + q.name(j);
  WordVec s = serre_element(q, i, j);
  r.records.push_back({"serre_in_radical", inst, in_radical(q, s), ""});
  for (int k = 0; k < q.num_vertices(); ++k) {
    WordVec pad;
    add_to(pad, {k}, to_ratfunc(QLaurent(1)));
    r.records.push_back({"serre_in_radical_left", inst + " pad " + q.name(k), in_radical(q, concat(pad, s)), ""});
    r.records.push_back({"serre_in_radical_right", inst + " pad " + q.name(k), in_radical(q, concat(s, pad)), ""});
  }
  int a = 1 - q.cartan(i, j);
  if (a + 1 <= cfg.max_size) {
    KRing kr(q);
    KClass c = serre_class(kr, i, j);
    r.records.push_back({"serre_class_zero", inst, c.is_zero(), c.is_zero() ? "" : c.str()});
    auto kc = kr.kernel_check(word_weight(q, s));
    std::string w = "rank form " + std::to_string(kc.rank_form) + ", gamma " + std::to_string(kc.rank_gamma) +
                    ", joint " + std::to_string(kc.rank_joint);
    r.records.push_back({"kernel_is_radical", inst, kc.ok(), w});
  }
  return from_report(r);
}

template <class F>
std::vector<Outcome> shard(size_t n, int jobs, F&& work) {
  std::vector<Outcome> out(n);
  std::vector<std::string> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < n; k = next++) {
      try {
        out[k] = work(k);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(jobs, static_cast<int>(n)); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::vector<std::string> csv_header(const RunConfig& cfg) {
  const auto& c = cfg.command;
  if (c == "graded-dim") {
    std::vector<std::string> h{"nu", "source", "target"};
    for (int d = cfg.lo; d <= cfg.hi; ++d) h.push_back("q^" + std::to_string(d));
    if (cfg.verify) h.push_back("brute_force");
    return h;
  }
  if (c == "decompose") return {"nu", "y", "simple", "multiplicity", "routes"};
  if (c == "compare") return {"nu", "num_indecomposables", "f_dim", "integral", "positive", "status"};
  if (c == "serre") return {"pair", "check", "instance", "status", "witness"};
  return {"nu", "check", "instance", "status", "witness"};
}

int run(const RunConfig& cfg) {
  Quiver q = load_quiver(cfg.quiver);
  std::vector<std::string> keys;
  std::vector<json> key_json;
  std::vector<Outcome> results;

  if (cfg.command == "serre") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < q.num_vertices(); ++i)
      for (int j = 0; j < q.num_vertices(); ++j)
        if (i != j) pairs.emplace_back(i, j);
    for (auto [i, j] : pairs) {
      keys.push_back(q.name(i) + "," + q.name(j));
      key_json.push_back({{"i", q.name(i)}, {"j", q.name(j)}});
    }
    results = shard(pairs.size(), cfg.jobs, [&](size_t k) { return run_serre(cfg, q, pairs[k].first, pairs[k].second); });
  } else {
    std::vector<DimVector> nus;
    if (!cfg.nu.empty()) {
      DimVector nu = DimVector::parse(q, cfg.nu);
      if (nu.total() == 0) throw std::invalid_argument("dimension vector must be nonzero");
      nus.push_back(nu);
    } else {
      nus = instances_up_to(q, cfg.max_size);
    }
    bool uses_quotient = cfg.command == "decompose" || cfg.command == "compare";
    if (cfg.command == "compare") {
      Report conv = check_form_convention(q);
      for (const auto& rec : conv.records)
        if (!rec.ok) throw std::runtime_error("form convention self-check failed: " + rec.check + " " + rec.instance);
    }
    for (const auto& nu : nus) {
      if (nu.total() > 6) throw std::length_error("|nu| exceeds the cap of 6");
      if (uses_quotient && nu.total() > 4) throw std::length_error("|nu| exceeds the finite-quotient cap of 4");
      keys.push_back(nu.str(q));
      json v = json::object();
      for (int i = 0; i < q.num_vertices(); ++i) v[q.name(i)] = nu.coords[static_cast<size_t>(i)];
      key_json.push_back({{"nu", nu.str(q)}, {"dimension_vector", v}});
    }
    using Fn = Outcome (*)(const RunConfig&, const Quiver&, const DimVector&);
    Fn fn = cfg.command == "relations"   ? run_relations
            : cfg.command == "pbw"       ? run_pbw
            : cfg.command == "localize"  ? run_localize
            : cfg.command == "graded-dim" ? run_graded_dim
            : cfg.command == "decompose" ? run_decompose
                                         : run_compare;
    results = shard(nus.size(), cfg.jobs, [&](size_t k) { return fn(cfg, q, nus[k]); });
  }

  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;

  if (cfg.format == "csv") {
    auto header = csv_header(cfg);
    for (size_t k = 0; k < header.size(); ++k) std::cout << (k ? "," : "") << header[k];
    std::cout << "\n";
    for (size_t n = 0; n < results.size(); ++n)
      for (const auto& row : results[n].rows) {
        std::cout << csv_field(keys[n]);
        for (const auto& f : row) std::cout << "," << csv_field(f);
        std::cout << "\n";
      }
  } else {
    json meta = {{"quiver", q.to_json()}, {"quiver_source", cfg.quiver}, {"grading", grading_metadata()}};
    if (cfg.command == "serre") meta["max_size"] = cfg.max_size;
    else if (cfg.nu.empty()) meta["max_size"] = cfg.max_size;
    if (cfg.command == "relations" || cfg.command == "localize" || cfg.command == "pbw")
      meta["degree_bound"] = cfg.degree_bound;
    if (cfg.command == "pbw" || cfg.command == "graded-dim") meta["window"] = {cfg.lo, cfg.hi};
    if (cfg.command == "pbw") {
      meta["pairs"] = cfg.pairs;
      meta["seed"] = cfg.seed;
    }
    json inst = json::array();
    for (size_t n = 0; n < results.size(); ++n) {
      json e = key_json[n];
      e["result"] = results[n].body;
      inst.push_back(e);
    }
    json doc = {{"tool", "klr"}, {"command", cfg.command}, {"metadata", meta}, {"ok", ok}, {"instances", inst}};
    std::cout << doc.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with KLR algebras of loop-free quivers"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Cmd {
    const char* name;
    const char* help;
  };
  const std::vector<Cmd> cmds{
      {"relations", "verify the defining relations on the polynomial representation"},
      {"pbw", "faithfulness, PBW freeness and degree checks"},
      {"localize", "compare operators with localized convolution classes"},
      {"graded-dim", "graded dimensions of 1_i' R 1_i"},
      {"decompose", "decompose the projectives R_y into indecomposables"},
      {"serre", "Serre elements: radical membership and vanishing in K"},
      {"compare", "count indecomposable projectives against the form rank"},
  };
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--quiver", cfg.quiver, "quiver JSON file or catalog:NAME")->capture_default_str();
    sub->add_option("--max-size", cfg.max_size, "largest |nu| swept when --nu is absent")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    if (std::string(c.name) != "serre") sub->add_option("--nu", cfg.nu, "dimension vector, {\"i\":2} or i:2,j:1");
    if (std::string(c.name) == "relations" || std::string(c.name) == "localize" || std::string(c.name) == "pbw")
      sub->add_option("--degree-bound", cfg.degree_bound, "largest input monomial degree")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    if (std::string(c.name) == "pbw" || std::string(c.name) == "graded-dim")
      sub->add_option("--window", cfg.window, "degree window LO:HI")->capture_default_str();
    if (std::string(c.name) == "pbw") {
      sub->add_option("--pairs", cfg.pairs, "random pairs for the faithfulness check")
          ->check(CLI::NonNegativeNumber)
          ->capture_default_str();
      sub->add_option("--seed", cfg.seed)->capture_default_str();
    }
    if (std::string(c.name) == "graded-dim") sub->add_flag("--verify", cfg.verify, "compare with the brute-force count");
    sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    std::tie(cfg.lo, cfg.hi) = parse_window(cfg.window);
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "adehk/catalog.hpp"
#include "adehk/error.hpp"
#include "adehk/field.hpp"
#include "adehk/han_delta.hpp"
#include "adehk/hk.hpp"
#include "adehk/matrix_factorization.hpp"
#include "adehk/report.hpp"
#include "adehk/ring.hpp"
#include "adehk/series_engine.hpp"

using namespace adehk;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

AdeRingSpec ring_from(const std::string& sel, int n) {
  std::string s = sel;
  if (n > 0 && (s == "A" || s == "D" || s == "a" || s == "d")) s += ":n=" + std::to_string(n);
  return parse_ring_selector(s);
}

std::uint32_t prime_arg(long p) {
  if (p < 2 || p > 0xffffffffL || !is_prime(static_cast<std::uint64_t>(p)))
    throw UsageError("--p " + std::to_string(p) + " is not a prime");
  return static_cast<std::uint32_t>(p);
}

RatTriple parse_triple(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw ParseError("expected three comma-separated rationals, got '" + s + "'");
  return {Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2])};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

struct Options {
  std::string format;
  std::string ring;
  int n = 0;
  long p = 0;
  unsigned e = 1;
  bool verify = false;
  std::string route = "closed-form";
  std::string exponents;
  std::string t;
  std::string series;
  long alpha = 1, beta = 1, a = 1, b = 1;
  std::string from, to;
  int module = -1;
  std::string file, F;
  std::string columns;
  std::string rings = "E6,E7,E8";
  long p_max = 13;
  unsigned e_max = 1;
  std::string out;
  unsigned threads = 0;
};

// hk, ehk, fsig ------------------------------------------------------------

int run_hk(const Options& o) {
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const HkReport r = hk_report(ring, prime_arg(o.p), o.e, o.verify, parse_route(o.route));
  if (o.format == "json") {
    print_json(to_json(r));
  } else if (o.format == "csv") {
    std::cout << csv_header() << "\n" << csv_row(r) << "\n";
  } else {
    std::cout << "HK(" << r.ring << ", q=" << o.p << "^" << o.e << ") = " << r.value.get_str() << "\n";
    std::cout << "route: " << route_name(r.route) << "\n";
    std::cout << "class: " << r.frobenius_class.str() << "\n";
    if (o.verify)
      std::cout << "oracle: " << (r.oracle_value ? r.oracle_value->get_str() + " " : "") << r.oracle_status << "\n";
  }
  return r.ok() ? 0 : kExitFail;
}

int run_ehk(const Options& o) {
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const Rat v = hk_multiplicity(ring);
  if (o.format == "json") {
    Json j;
    j["ring"] = ring.selector();
    j["e_hk"] = v.str();
    print_json(j);
  } else {
    std::cout << v.str() << "\n";
  }
  return 0;
}

int run_fsig(const Options& o) {
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const BigInt s = f_signature(ring, prime_arg(o.p), o.e);
  const Rat limit = Rat(1, ring.group_order);
  if (o.format == "json") {
    Json j;
    j["ring"] = ring.selector();
    j["p"] = o.p;
    j["e"] = o.e;
    j["f_signature"] = bigint_to_json(s);
    j["limit"] = limit.str();
    print_json(j);
  } else {
    std::cout << s.get_str() << "\n";
  }
  return 0;
}

// series, classify ----------------------------------------------------------

int run_series(const Options& o) {
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const std::uint32_t p = prime_arg(o.p);
  const auto ex = split(o.exponents, ',');
  if (ex.size() != 3) throw ParseError("--exponents needs a,b,c");
  SyzygySpec spec;
  spec.ring = HypersurfaceSpec::from_ring(ring);
  spec.a = to_int64(parse_bigint(ex[0]));
  spec.b = to_int64(parse_bigint(ex[1]));
  spec.c = to_int64(parse_bigint(ex[2]));
  if (spec.a < 1 || spec.b < 1 || spec.c < 1) throw UsageError("--exponents must be positive");
  SeriesRecord rec;
  rec.ring = ring.selector();
  rec.a = spec.a;
  rec.b = spec.b;
  rec.c = spec.c;
  rec.p = p;
  rec.series = syzygy_series(spec, p);
  rec.classification = classify(rec.series, ring_series(spec.ring), catalog_series(ring, p));
  if (o.format == "json") {
    print_json(to_json(rec));
  } else {
    std::cout << "series: " << rec.series.str() << "\n";
    std::cout << "class: " << rec.classification.str() << "\n";
    std::cout << "p: " << p << "\n";
  }
  return 0;
}

int run_classify(const Options& o) {
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const std::uint32_t p = prime_arg(o.p);
  const auto& cat = catalog_series(ring, p);
  const RationalSeries h_ring = ring_series(HypersurfaceSpec::from_ring(ring));
  if (!o.series.empty()) {
    const RationalSeries h = RationalSeries::parse(o.series);
    const Classification c = classify(h, h_ring, cat);
    if (o.format == "json") print_json(to_json(c));
    else std::cout << c.str() << "\n";
    return 0;
  }
  // Frobenius class of Syz(X^q, Y^q, Z^q), cross-checked against the series.
  const FrobeniusClass fc = frobenius_class(ring, p, o.e);
  std::optional<Classification> via_series;
  if (ring.family != Family::A) {
    const BigInt q = ipow(BigInt(p), o.e);
    SyzygySpec spec;
    spec.ring = HypersurfaceSpec::from_ring(ring);
    spec.a = spec.b = spec.c = to_int64(q);
    via_series = classify(syzygy_series(spec, p), h_ring, cat);
  }
  if (o.format == "json") {
    Json j;
    j["ring"] = ring.selector();
    j["p"] = p;
    j["e"] = o.e;
    j["class"] = to_json(fc);
    if (via_series) j["series_classification"] = to_json(*via_series);
    print_json(j);
  } else {
    std::cout << fc.str() << "\n";
    if (via_series) std::cout << "series: " << via_series->str() << "\n";
  }
  return 0;
}

// delta, tau -----------------------------------------------------------------

int run_delta(const Options& o) {
  DeltaQuery q;
  q.p = prime_arg(o.p);
  q.t = parse_triple(o.t);
  for (const Rat& x : q.t)
    if (x.sign() < 0) throw UsageError("--t entries must be non-negative");
  const DeltaResult r = delta_detailed(q);
  if (o.format == "json") {
    Json j;
    j["p"] = o.p;
    j["t"] = {q.t[0].str(), q.t[1].str(), q.t[2].str()};
    j["delta"] = r.value.str();
    j["branch"] = r.branch == DeltaResult::Branch::Excess ? "excess" : r.branch == DeltaResult::Branch::Lattice ? "lattice" : "zero";
    if (r.branch == DeltaResult::Branch::Lattice) {
      j["s"] = r.s;
      j["u"] = {bigint_to_json(r.u[0]), bigint_to_json(r.u[1]), bigint_to_json(r.u[2])};
      j["distance"] = r.dist.str();
    }
    print_json(j);
  } else {
    std::cout << r.value.str() << "\n";
  }
  return 0;
}

int run_tau(const Options& o) {
  TauQuery q;
  q.p = prime_arg(o.p);
  q.alpha = o.alpha;
  q.beta = o.beta;
  q.a = o.a;
  q.b = o.b;
  q.t = parse_triple(o.t);
  const Rat v = tau(q);
  if (o.format == "json") {
    Json j;
    j["p"] = o.p;
    j["tau"] = v.str();
    print_json(j);
  } else {
    std::cout << v.str() << "\n";
  }
  return 0;
}

// catalog, pullback ------------------------------------------------------------

int run_catalog(const Options& o) {
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const auto entries = catalog(ring);
  const std::vector<CatalogSeries>* series = nullptr;
  if (o.p > 0) series = &catalog_series(ring, prime_arg(o.p));
  auto series_of = [&](int idx) -> std::string {
    if (!series) return "";
    for (const auto& c : *series)
      if (c.index == idx) return c.series.str();
    return "";
  };
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& m : entries) {
      Json j;
      j["index"] = m.index;
      j["rank"] = m.rank;
      j["generators"] = m.generators;
      j["dual"] = m.dual_index;
      j["determinant"] = m.determinant_index ? Json(*m.determinant_index) : Json(nullptr);
      if (m.ideal_iso) j["ideal"] = *m.ideal_iso;
      if (!m.conjugates.empty()) j["conjugates"] = m.conjugates;
      if (series) j["series"] = series_of(m.index);
      arr.push_back(j);
    }
    Json j;
    j["ring"] = ring.selector();
    j["dynkin"] = ring.dynkin_name();
    j["modules"] = arr;
    print_json(j);
    return 0;
  }
  std::cout << ring.dynkin_name() << " (" << ring.selector() << "), F = " << ring.F.str() << "\n";
  for (const auto& m : entries) {
    std::cout << "M_" << m.index << "  rank " << m.rank << "  Syz(";
    for (std::size_t k = 0; k < m.generators.size(); ++k) std::cout << (k ? ", " : "") << m.generators[k];
    std::cout << ")  dual M_" << m.dual_index;
    if (m.determinant_index) std::cout << "  det M_" << *m.determinant_index;
    if (m.ideal_iso) std::cout << "  ~ " << *m.ideal_iso;
    if (!m.conjugates.empty()) std::cout << "  conjugates " << int_list(m.conjugates);
    if (series) std::cout << "  H = " << series_of(m.index);
    std::cout << "\n";
  }
  return 0;
}

int run_pullback(const Options& o) {
  const AdeRingSpec ring = ring_from(o.from, o.n);
  std::string to = o.to;
  if (!to.empty() && (to[0] == 'A' || to[0] == 'a')) to = to.substr(1);
  if (!to.empty() && to[0] == '_') to = to.substr(1);
  int k = 0;
  try {
    k = std::stoi(to);
  } catch (const std::exception&) {
    throw ParseError("--to must name a target A_k, got '" + o.to + "'");
  }
  const auto target = pullback_target_for(ring, k);
  if (!target) throw UsageError(ring.dynkin_name() + " has no pull-back table to A_" + std::to_string(k));
  const PullbackTable table = pullback_table(ring, *target);
  const auto print_row = [&](int idx) {
    const auto& row = pullback(table, idx);
    std::vector<std::string> names;
    for (int t : row) names.push_back(t == 0 ? "O" : "M_" + std::to_string(t));
    return names;
  };
  if (o.format == "json") {
    Json j;
    j["from"] = ring.selector();
    j["to"] = table.target_name();
    if (o.module >= 0) {
      j["module"] = o.module;
      j["image"] = pullback(table, o.module);
    } else {
      Json rows = Json::object();
      for (const auto& [idx, row] : table.rows) rows[std::to_string(idx)] = row;
      j["rows"] = rows;
      j["rank_violations"] = rank_consistency_violations(table);
    }
    print_json(j);
    return 0;
  }
  auto show = [&](int idx) {
    const auto names = print_row(idx);
    std::cout << (idx == 0 ? std::string("O") : "M_" + std::to_string(idx)) << " -> ";
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " + " : "") << names[i];
    std::cout << "\n";
  };
  if (o.module >= 0) {
    show(o.module);
  } else {
    for (const auto& [idx, row] : table.rows) show(idx);
    const auto bad = rank_consistency_violations(table);
    if (!bad.empty()) std::cout << "rank-inconsistent rows: " << int_list(bad) << "\n";
  }
  return 0;
}

// mf -----------------------------------------------------------------------------

int run_mf_verify(const Options& o) {
  const ZPoly F = ZPoly::parse(o.F);
  const MatFac mf = parse_matfac(read_file(o.file), F);
  const MfVerdict exact = verify(mf);
  std::optional<MfVerdict> modp;
  if (o.p > 0) modp = verify_mod(mf, prime_arg(o.p));
  std::optional<int> rank;
  if (exact.valid) rank = coker_rank(mf);
  if (o.format == "json") {
    Json j;
    j["size"] = mf.size();
    j["valid"] = exact.valid;
    j["reduced"] = exact.reduced;
    if (modp) {
      j["p"] = o.p;
      j["valid_mod_p"] = modp->valid;
    }
    j["coker_rank"] = rank ? Json(*rank) : Json(nullptr);
    print_json(j);
  } else {
    std::cout << "size: " << mf.size() << "\n";
    std::cout << "valid: " << (exact.valid ? "yes" : "no") << "\n";
    std::cout << "reduced: " << (exact.reduced ? "yes" : "no") << "\n";
    if (modp) std::cout << "valid mod " << o.p << ": " << (modp->valid ? "yes" : "no") << "\n";
    if (rank) std::cout << "coker rank: " << *rank << "\n";
  }
  return exact.valid && (!modp || modp->valid) ? 0 : kExitFail;
}

int run_mf_kernel(const Options& o) {
  const ZPoly F = ZPoly::parse(o.F);
  const MatFac mf = parse_matfac(read_file(o.file), F);
  std::vector<int> cols;
  for (const auto& c : split(o.columns, ',')) cols.push_back(static_cast<int>(to_int64(parse_bigint(c))));
  for (int c : cols)
    if (c < 1 || static_cast<std::size_t>(c) > mf.size()) throw UsageError("--columns entry out of range");
  const AdeRingSpec ring = ring_from(o.ring, o.n);
  const std::uint32_t p = prime_arg(o.p);
  const PolyMatrix psi_j = select_columns(mf.psi, cols);
  const auto v = kernel_vector(psi_j, F, ring.weights, p);
  const bool ok = column_choice_check(psi_j, F, ring.weights, p);
  if (o.format == "json") {
    Json j;
    std::vector<std::string> entries;
    for (const auto& x : v) entries.push_back(x.str());
    j["columns"] = cols;
    j["kernel"] = entries;
    j["column_choice_ok"] = ok;
    print_json(j);
  } else {
    std::cout << "(";
    for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? ", " : "") << v[k].str();
    std::cout << ")\ncolumn choice: " << (ok ? "ok" : "fails") << "\n";
  }
  return 0;
}

int run_mf_shipped(const Options& o) {
  const auto all = shipped_matrix_factorizations();
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& s : all) {
      Json j;
      j["name"] = s.name;
      j["ring"] = s.ring.selector();
      j["module"] = s.catalog_index;
      j["rank"] = s.rank;
      j["phi"] = matrix_str(s.mf.phi);
      j["psi"] = matrix_str(s.mf.psi);
      arr.push_back(j);
    }
    print_json(arr);
  } else {
    for (const auto& s : all) {
      std::cout << s.name << " [" << s.ring.selector() << ", M_" << s.catalog_index << ", rank " << s.rank << "]\n";
      std::cout << "  phi = " << matrix_str(s.mf.phi) << "\n  psi = " << matrix_str(s.mf.psi) << "\n";
    }
  }
  return 0;
}

// sweep ---------------------------------------------------------------------------

int run_sweep(const Options& o) {
  std::vector<AdeRingSpec> rings;
  for (const auto& s : split(o.rings, ','))
    if (!s.empty()) rings.push_back(parse_ring_selector(s));
  if (rings.empty()) throw UsageError("--rings is empty");
  if (o.e_max < 1) throw UsageError("--e-max must be at least 1");
  struct Task {
    std::size_t ring;
    std::uint32_t p;
    unsigned e;
  };
  std::vector<Task> tasks;
  for (std::size_t r = 0; r < rings.size(); ++r)
    for (long p = 2; p <= o.p_max; ++p)
      if (is_prime(static_cast<std::uint64_t>(p)))
        for (unsigned e = 1; e <= o.e_max; ++e) tasks.push_back({r, static_cast<std::uint32_t>(p), e});

  const HkRoute route = parse_route(o.route);
  const std::uint64_t cap = oracle_cap();
  std::vector<std::optional<HkReport>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      try {
        results[k] = hk_report(rings[t.ring], t.p, t.e, o.verify, route, cap);
      } catch (const std::exception& ex) {
        errors[k] = ex.what();
      }
    }
  };
  unsigned nthreads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // Tasks are generated in (ring, p, e) order, so the output is already sorted.
  bool inconsistent = false, mismatch = false;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (!errors[k].empty()) {
      std::cerr << rings[tasks[k].ring].selector() << " p=" << tasks[k].p << " e=" << tasks[k].e << ": " << errors[k]
                << "\n";
      inconsistent = true;
    } else if (!results[k]->ok()) {
      std::cerr << "mismatch: " << csv_row(*results[k]) << "\n";
      mismatch = true;
    }
  }
  std::ostringstream text;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results)
      if (r) arr.push_back(to_json(*r));
    text << arr.dump(2) << "\n";
  } else {
    text << csv_header() << "\n";
    for (const auto& r : results)
      if (r) text << csv_row(*r) << "\n";
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << text.str();
  }
  if (inconsistent) return kExitInconsistent;
  return mismatch ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adehk: Hilbert-Kunz functions, F-signatures and Frobenius pull-backs of ADE rings"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"plain", "json", "csv"};
  // One option set per subcommand, so defaults never leak between verbs.
  std::map<CLI::App*, Options> opts;

  auto add_ring = [](CLI::App* sub, Options& o, bool required = true) {
    auto* opt = sub->add_option("--ring", o.ring, "E6 | E7 | E8 | A:n=<k> | D:n=<k>");
    if (required) opt->required();
    sub->add_option("--n", o.n, "family parameter when --ring is A or D");
  };
  auto add_format = [&](CLI::App* sub, Options& o, const std::string& def) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats))->default_val(def);
  };

  auto* hk = app.add_subcommand("hk", "Hilbert-Kunz function HK(p^e)");
  {
    Options& o = opts[hk];
    add_ring(hk, o);
    hk->add_option("--p", o.p, "prime")->required();
    hk->add_option("--e", o.e, "exponent")->default_val(1);
    hk->add_flag("--verify", o.verify, "run the Groebner oracle");
    hk->add_option("--route", o.route, "closed-form | syzygy-formula | split-formula")->default_val("closed-form");
    add_format(hk, o, "json");
  }

  auto* ehk = app.add_subcommand("ehk", "Hilbert-Kunz multiplicity 2 - 1/|G|");
  add_ring(ehk, opts[ehk]);
  add_format(ehk, opts[ehk], "plain");

  auto* fsig = app.add_subcommand("fsig", "F-signature 2q^2 - HK(q)");
  {
    Options& o = opts[fsig];
    add_ring(fsig, o);
    fsig->add_option("--p", o.p, "prime")->required();
    fsig->add_option("--e", o.e, "exponent")->default_val(1);
    add_format(fsig, o, "plain");
  }

  auto* series = app.add_subcommand("series", "Hilbert series of Syz(X^a, Y^b, Z^c)");
  {
    Options& o = opts[series];
    add_ring(series, o);
    series->add_option("--exponents", o.exponents, "a,b,c")->required();
    series->add_option("--p", o.p, "characteristic")->default_val(10007);
    add_format(series, o, "plain");
  }

  auto* classify_cmd = app.add_subcommand("classify", "classify a series, or Syz(X^q, Y^q, Z^q)");
  {
    Options& o = opts[classify_cmd];
    add_ring(classify_cmd, o);
    classify_cmd->add_option("--series", o.series, "series text, e.g. 't^16+t^21+t^25+t^30 ; [10,6]'");
    classify_cmd->add_option("--p", o.p, "characteristic")->default_val(10007);
    classify_cmd->add_option("--e", o.e, "exponent")->default_val(1);
    add_format(classify_cmd, o, "plain");
  }

  auto* delta_cmd = app.add_subcommand("delta", "delta function");
  {
    Options& o = opts[delta_cmd];
    delta_cmd->add_option("--p", o.p, "prime")->required();
    delta_cmd->add_option("--t", o.t, "t1,t2,t3 as rationals")->required();
    add_format(delta_cmd, o, "plain");
  }

  auto* tau_cmd = app.add_subcommand("tau", "weighted delta function");
  {
    Options& o = opts[tau_cmd];
    tau_cmd->add_option("--p", o.p, "prime")->required();
    tau_cmd->add_option("--t", o.t, "t1,t2,t3 as rationals")->required();
    tau_cmd->add_option("--alpha", o.alpha, "weight of Y")->required();
    tau_cmd->add_option("--beta", o.beta, "weight of Z")->required();
    tau_cmd->add_option("--a", o.a, "exponent of Y in F")->required();
    tau_cmd->add_option("--b", o.b, "exponent of Z in F")->required();
    add_format(tau_cmd, o, "plain");
  }

  auto* cat = app.add_subcommand("catalog", "indecomposable MCM modules");
  {
    Options& o = opts[cat];
    add_ring(cat, o);
    cat->add_option("--p", o.p, "also fit Hilbert series over F_p");
    add_format(cat, o, "plain");
  }

  auto* pb = app.add_subcommand("pullback", "pull-back of catalog modules to type A");
  {
    Options& o = opts[pb];
    pb->add_option("--from", o.from, "source ring")->required();
    pb->add_option("--n", o.n, "family parameter when --from is D");
    pb->add_option("--to", o.to, "target, e.g. A1")->required();
    pb->add_option("--module", o.module, "catalog index (0 for R); all rows if omitted");
    add_format(pb, o, "plain");
  }

  auto* mf = app.add_subcommand("mf", "matrix factorizations");
  mf->require_subcommand(1);
  auto* mf_verify = mf->add_subcommand("verify", "check phi psi = psi phi = F");
  {
    Options& o = opts[mf_verify];
    mf_verify->add_option("--file", o.file, "file holding phi and psi")->required();
    mf_verify->add_option("--F", o.F, "hypersurface equation")->required();
    mf_verify->add_option("--p", o.p, "also check mod p");
    add_format(mf_verify, o, "plain");
  }
  auto* mf_kernel = mf->add_subcommand("kernel", "syzygy from a column selection of psi");
  {
    Options& o = opts[mf_kernel];
    mf_kernel->add_option("--file", o.file, "file holding phi and psi")->required();
    mf_kernel->add_option("--F", o.F, "hypersurface equation")->required();
    mf_kernel->add_option("--columns", o.columns, "1-based columns, e.g. 2,3,4")->required();
    add_ring(mf_kernel, o);
    mf_kernel->add_option("--p", o.p, "prime")->default_val(10007);
    add_format(mf_kernel, o, "plain");
  }
  auto* mf_shipped = mf->add_subcommand("shipped", "list shipped factorizations");
  add_format(mf_shipped, opts[mf_shipped], "plain");

  auto* sweep = app.add_subcommand("sweep", "HK over a grid of (ring, p, e)");
  {
    Options& o = opts[sweep];
    sweep->add_option("--rings", o.rings, "comma-separated ring selectors")->default_val("E6,E7,E8");
    sweep->add_option("--p-max", o.p_max, "largest prime")->default_val(13);
    sweep->add_option("--e-max", o.e_max, "largest exponent")->default_val(1);
    sweep->add_flag("--verify", o.verify, "run the Groebner oracle side by side");
    sweep->add_option("--route", o.route, "closed-form | syzygy-formula | split-formula")->default_val("closed-form");
    sweep->add_option("--out", o.out, "output file (stdout if omitted)");
    sweep->add_option("--threads", o.threads, "worker threads (0 = hardware)")->default_val(0);
    add_format(sweep, o, "csv");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  CLI::App* used = app.get_subcommands().front();
  CLI::App* leaf = used == mf ? mf->get_subcommands().front() : used;
  const Options& o = opts[leaf];
  try {
    if (leaf == hk) return run_hk(o);
    if (leaf == ehk) return run_ehk(o);
    if (leaf == fsig) return run_fsig(o);
    if (leaf == series) return run_series(o);
    if (leaf == classify_cmd) return run_classify(o);
    if (leaf == delta_cmd) return run_delta(o);
    if (leaf == tau_cmd) return run_tau(o);
    if (leaf == cat) return run_catalog(o);
    if (leaf == pb) return run_pullback(o);
    if (leaf == sweep) return run_sweep(o);
    if (leaf == mf_verify) return run_mf_verify(o);
    if (leaf == mf_kernel) return run_mf_kernel(o);
    if (leaf == mf_shipped) return run_mf_shipped(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << leaf->help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << leaf->help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << leaf->help();
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}

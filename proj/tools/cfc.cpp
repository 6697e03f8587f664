#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfc/coloring.hpp"
#include "cfc/construct.hpp"
#include "cfc/errors.hpp"
#include "cfc/formulas.hpp"
#include "cfc/online.hpp"
#include "cfc/oracle.hpp"
#include "cfc/verify.hpp"

namespace {

using nlohmann::ordered_json;

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << body;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct ConstructArgs {
  std::string mode;
  int k = 1;
  int n = 1;
};

int run_construct(const ConstructArgs& a) {
  cfc::Mode mode = cfc::mode_from_string(a.mode);
  if (mode == cfc::Mode::kpnm)
    throw std::invalid_argument("construct: mode must be kscf or kcf");
  cfc::Coloring c = mode == cfc::Mode::kscf ? cfc::construct_kscf(a.n, a.k)
                                            : cfc::construct_kcf(a.n, a.k);
  std::cout << c.str() << "\n";
  ordered_json meta;
  meta["n"] = a.n;
  meta["k"] = a.k;
  meta["mode"] = cfc::to_string(mode);
  meta["colors_used"] = c.colors_used();
  meta["construction"] = cfc::construction_tag(mode, a.k);
  meta["schema_version"] = 1;
  std::cout << meta.dump() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string mode;
  int k = 1;
  std::string file;
  std::string inline_text;
  bool have_inline = false;
};

int run_verify(const VerifyArgs& a) {
  cfc::Mode mode = cfc::mode_from_string(a.mode);
  std::string text;
  if (a.have_inline) {
    text = a.inline_text;
  } else if (!a.file.empty()) {
    std::ifstream in(a.file, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + a.file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  cfc::Verdict v = cfc::verify(cfc::Coloring::parse(text), a.k, mode);
  std::cout << cfc::verdict_json(v) << "\n";
  return v.ok ? 0 : 1;
}

struct OracleArgs {
  std::string mode;
  int k = 1;
  int m = 0;
  int n = 0;
  bool have_m = false;
  bool have_n = false;
  std::uint64_t max_nodes = 1'000'000'000;
  std::int64_t max_millis = 600'000;
  bool timings = false;
};

int run_oracle(const OracleArgs& a) {
  cfc::Mode mode = cfc::mode_from_string(a.mode);
  cfc::SearchLimits limits;
  limits.max_nodes = a.max_nodes;
  limits.max_millis = a.max_millis;
  if (a.have_m == a.have_n)
    throw std::invalid_argument("oracle: give exactly one of --m or --n");
  ordered_json j;
  cfc::SearchResult r;
  if (a.have_m) {
    r = cfc::oracle_max_points(a.k, a.m, mode, limits);
    j["op"] = "max_points";
    j["k"] = a.k;
    j["m"] = a.m;
  } else {
    r = cfc::oracle_min_colors(a.n, a.k, mode, limits);
    j["op"] = "min_colors";
    j["n"] = a.n;
    j["k"] = a.k;
  }
  j["mode"] = cfc::to_string(mode);
  j["value"] = r.value;
  j["lower"] = r.lower;
  j["upper"] = r.upper < 0 ? ordered_json(nullptr) : ordered_json(r.upper);
  j["exhausted"] = r.exhausted;
  j["witness"] =
      r.witness ? ordered_json(r.witness->str()) : ordered_json(nullptr);
  j["nodes"] = r.nodes;
  j["millis"] = a.timings ? r.millis : 0;
  j["schema_version"] = 1;
  std::cout << j.dump() << "\n";
  return 0;
}

struct OnlineArgs {
  std::vector<int> ns;
  std::vector<int> ks = {1};
  std::vector<std::string> orders = {"sorted"};
  std::vector<std::string> strategies = {"first-fit"};
  int trials = 1;
  std::uint64_t seed = 0;
  std::string csv_path;
  std::string json_path;
};

int run_online(const OnlineArgs& a) {
  std::vector<cfc::OrderKind> orders;
  for (const std::string& o : a.orders)
    orders.push_back(cfc::order_from_string(o));
  std::vector<cfc::Strategy> strategies;
  for (const std::string& s : a.strategies)
    strategies.push_back(cfc::strategy_from_string(s));
  cfc::ExperimentReport rep =
      cfc::run_experiment(a.ns, a.ks, orders, strategies, a.trials, a.seed);
  std::cout << "n,k,order,strategy,trial,seed,colors_used,bound\n";
  for (const cfc::CellStats& c : rep.cells)
    for (int t = 0; t < c.trials; ++t)
      std::cout << c.spec.n << ',' << c.spec.k << ','
                << cfc::to_string(c.spec.order) << ','
                << cfc::to_string(c.spec.strategy) << ',' << t << ',' << a.seed
                << ',' << c.per_trial[static_cast<size_t>(t)] << ','
                << fmt(c.bound) << "\n";
  if (!a.csv_path.empty()) write_file(a.csv_path, cfc::experiment_csv(rep));
  if (!a.json_path.empty()) write_file(a.json_path, cfc::experiment_json(rep));
  return 0;
}

struct FormulasArgs {
  bool f_scf = false;
  bool chi_kcf = false;
  bool g_scf = false;
  bool g_odd = false;
  bool bounds = false;
  long long n = 0;
  int k = 0;
  int m = 0;
  int level = 0;
};

int run_formulas(const FormulasArgs& a) {
  int picked = int(a.f_scf) + int(a.chi_kcf) + int(a.g_scf) + int(a.g_odd) +
               int(a.bounds);
  if (picked != 1)
    throw std::invalid_argument(
        "formulas: pick exactly one of --f-scf --chi-kcf --g-scf --g-odd "
        "--bounds");
  if (a.f_scf) {
    std::cout << cfc::f_scf_closed(a.n, a.k) << "\n";
  } else if (a.chi_kcf) {
    std::cout << cfc::chi_kcf_closed(a.n, a.k) << "\n";
  } else if (a.g_scf) {
    std::cout << cfc::g_scf_closed(a.m, a.k) << "\n";
  } else if (a.g_odd) {
    std::cout << cfc::gk_odd_closed(a.k, a.level) << "\n";
  } else {
    cfc::Bounds b = cfc::f_scf_bounds(a.n, a.k);
    ordered_json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["schema_version"] = 1;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

struct AuditArgs {
  int k = 2;
  int m_max = 1;
  std::uint64_t max_nodes = 1'000'000'000;
  std::int64_t max_millis = 600'000;
  std::string csv_path;
  std::string json_path;
  bool timings = false;
};

int run_audit(const AuditArgs& a) {
  cfc::SearchLimits limits;
  limits.max_nodes = a.max_nodes;
  limits.max_millis = a.max_millis;
  cfc::AuditReport rep = cfc::recurrence_audit(a.k, a.m_max, limits);
  std::string csv = cfc::audit_csv(rep, a.timings);
  std::cout << csv;
  if (!a.csv_path.empty()) write_file(a.csv_path, csv);
  if (!a.json_path.empty())
    write_file(a.json_path, cfc::audit_json(rep, a.timings));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free coloring toolkit for interval hypergraphs"};
  app.require_subcommand(1);
  int rc = 0;

  ConstructArgs ca;
  auto* construct = app.add_subcommand(
      "construct", "Build a k-SCF or k-CF coloring of n points");
  construct->add_option("--mode", ca.mode, "kscf or kcf")->required();
  construct->add_option("--k", ca.k, "parameter k")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--n", ca.n, "number of points")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->callback([&] { rc = run_construct(ca); });

  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify", "Check a coloring (file, --coloring, or standard input)");
  verify->add_option("--mode", va.mode, "kscf, kcf, or kpnm")->required();
  verify->add_option("--k", va.k, "parameter k")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* vfile = verify->add_option("--file", va.file, "coloring file");
  auto* vinl =
      verify->add_option("--coloring", va.inline_text, "inline coloring");
  vfile->excludes(vinl);
  vinl->excludes(vfile);
  verify->callback([&] {
    va.have_inline = vinl->count() > 0;
    rc = run_verify(va);
  });

  OracleArgs oa;
  auto* oracle = app.add_subcommand(
      "oracle", "Exact search: --m for max points, --n for min colors");
  oracle->add_option("--mode", oa.mode, "kscf or kcf")->required();
  oracle->add_option("--k", oa.k, "parameter k")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* om = oracle->add_option("--m", oa.m, "color budget")
                 ->check(CLI::PositiveNumber);
  auto* on = oracle->add_option("--n", oa.n, "number of points")
                 ->check(CLI::PositiveNumber);
  oracle->add_option("--max-nodes", oa.max_nodes,
                     "node cap (default 1000000000)");
  oracle->add_option("--max-millis", oa.max_millis,
                     "time cap in ms (default 600000)");
  oracle->add_flag("--timings", oa.timings,
                   "report real elapsed time instead of 0");
  oracle->callback([&] {
    oa.have_m = om->count() > 0;
    oa.have_n = on->count() > 0;
    rc = run_oracle(oa);
  });

  OnlineArgs la;
  auto* online = app.add_subcommand(
      "online", "Online coloring experiment over arrival orders");
  online->add_option("--n", la.ns, "points per instance (repeatable)")
      ->required()
      ->delimiter(',');
  online->add_option("--k", la.ks, "parameter k (repeatable; default 1)")
      ->delimiter(',');
  online
      ->add_option("--order", la.orders,
                   "sorted|reverse|random|midpoint-first (default sorted)")
      ->delimiter(',');
  online
      ->add_option("--strategy", la.strategies,
                   "first-fit|random-fit (default first-fit)")
      ->delimiter(',');
  online->add_option("--trials", la.trials, "trials per cell (default 1)")
      ->check(CLI::PositiveNumber);
  online->add_option("--seed", la.seed, "master seed (default 0)");
  online->add_option("--csv", la.csv_path, "write cell summary CSV here");
  online->add_option("--json", la.json_path, "write cell summary JSON here");
  online->callback([&] { rc = run_online(la); });

  FormulasArgs fa;
  auto* formulas =
      app.add_subcommand("formulas", "Print a closed form for given inputs");
  formulas->add_flag("--f-scf", fa.f_scf, "min k-SCF colors for n points");
  formulas->add_flag("--chi-kcf", fa.chi_kcf, "min k-CF colors for n points");
  formulas->add_flag("--g-scf", fa.g_scf, "max points with m colors, k in 2,3");
  formulas->add_flag("--g-odd", fa.g_odd, "max points at level l, odd k");
  formulas->add_flag("--bounds", fa.bounds, "exclusive bracket on the k-SCF minimum");
  formulas->add_option("--n", fa.n, "number of points");
  formulas->add_option("--k", fa.k, "parameter k");
  formulas->add_option("--m", fa.m, "number of colors");
  formulas->add_option("--level", fa.level, "recursion level");
  formulas->callback([&] { rc = run_formulas(fa); });

  AuditArgs aa;
  auto* audit = app.add_subcommand(
      "audit", "Certify g_k(m) rows and check the split recurrence");
  audit->add_option("--k", aa.k, "parameter k")
      ->required()
      ->check(CLI::PositiveNumber);
  audit->add_option("--m-max", aa.m_max, "largest color count")
      ->required()
      ->check(CLI::PositiveNumber);
  audit->add_option("--max-nodes", aa.max_nodes,
                    "per-row node cap (default 1000000000)");
  audit->add_option("--max-millis", aa.max_millis,
                    "per-row time cap in ms (default 600000)");
  audit->add_option("--csv", aa.csv_path, "also write the CSV here");
  audit->add_option("--json", aa.json_path, "write the JSON report here");
  audit->add_flag("--timings", aa.timings,
                  "report real elapsed times instead of 0");
  audit->callback([&] { rc = run_audit(aa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cfc::integrity_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}

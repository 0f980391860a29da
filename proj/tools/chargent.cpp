// chargent: command-line front end for exact, asymptotic and Monte Carlo
// averages of the entanglement entropy at fixed U(1) or SU(2) charge.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chargent/asymptotics.hpp"
#include "chargent/crosscheck.hpp"
#include "chargent/errors.hpp"
#include "chargent/exactavg.hpp"
#include "chargent/format.hpp"
#include "chargent/laplace.hpp"
#include "chargent/montecarlo.hpp"
#include "chargent/sectors.hpp"
#include "chargent/thermo.hpp"
#include "laplace_suite.hpp"
#include "table.hpp"

using namespace chargent;
using json = nlohmann::ordered_json;

namespace {

// Bad flags or unusable paths; exit code 2 like the domain errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest N for which page-curve --exact builds every subsystem table.
constexpr int kExactPageCurveMaxN = 200;

struct Common {
  std::string model_name;
  std::string model_file;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  auto* m = sub->add_option("--model", c.model_name, "catalog model name");
  auto* f = sub->add_option("--model-file", c.model_file, "model config file (JSON)");
  m->excludes(f);
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "output path (default stdout)");
}

ChargeModel resolve_model(const Common& c) {
  if (!c.model_name.empty()) return catalog(c.model_name);
  if (!c.model_file.empty()) return load_model_file(c.model_file);
  throw UsageError("one of --model or --model-file is required");
}

json base_meta(const std::string& command, const std::optional<ChargeModel>& model) {
  json meta;
  meta["command"] = command;
  meta["version"] = CHARGENT_VERSION;
  if (model) meta["model"] = json::parse(model_config_json(*model));
  return meta;
}

void emit(const Common& c, const json& meta, const cli::Table& table) {
  const auto format = c.format == "json" ? cli::Format::json : cli::Format::csv;
  if (c.out.empty()) {
    cli::write_table(std::cout, format, meta, table);
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw UsageError("cannot open output file " + c.out);
  cli::write_table(file, format, meta, table);
}

std::string fraction_text(Fraction f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

double fraction_value(Fraction f) { return boost::rational_cast<double>(f); }

// "a/b" exactly; a decimal f is snapped to the nearest N_A / N.
Fraction parse_fraction(const std::string& text, int n_total) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const long long num = std::stoll(text.substr(0, slash));
      const long long den = std::stoll(text.substr(slash + 1));
      if (den <= 0) throw UsageError("bad fraction '" + text + "'");
      return {num, den};
    }
    const double f = std::stod(text);
    return {std::llround(f * n_total), n_total};
  } catch (const std::logic_error&) {
    throw UsageError("bad fraction '" + text + "'");
  }
}

// Total charge from --q, or --s snapped to the nearest realizable charge.
DoubledCharge resolve_charge(const ChargeModel& model, int n_total, const std::string& q_text,
                             const std::optional<double>& s, json& meta) {
  if (!q_text.empty()) return parse_charge(q_text);
  if (!s) throw UsageError("one of --q or --s is required");
  const DoubledCharge q = snap_charge(model, n_total, *s);
  meta["s_requested"] = *s;
  meta["q_snapped"] = to_string(q);
  meta["s_snapped"] = q.physical() / n_total;
  std::cerr << "note: s = " << format_double(*s) << " snapped to q = " << to_string(q) << " (s = "
            << format_double(q.physical() / n_total) << ")\n";
  return q;
}

void require_positive_n(int n) {
  if (n < 1) throw DomainError("--n must be >= 1");
}

// ---- dims ----------------------------------------------------------------

struct DimsArgs {
  Common common;
  int n = 0;
  std::optional<int> n_a;
  std::string q;
};

int cmd_dims(const DimsArgs& a) {
  require_positive_n(a.n);
  if (a.n_a.has_value() != !a.q.empty()) throw UsageError("--na and --q must be given together");
  const ChargeModel model = resolve_model(a.common);
  json meta = base_meta("dims", model);
  meta["n"] = a.n;

  cli::Table table{{"table", "charge", "dim", "d", "b"}, {}};
  const SectorTable sectors = sector_dims(model, a.n);
  for (const auto& [q, d] : sectors.dims) table.add({std::string("sector"), to_string(q), cli::big(d), {}, {}});
  if (a.n_a) {
    const DoubledCharge q = parse_charge(a.q);
    meta["n_a"] = *a.n_a;
    meta["q_total"] = to_string(q);
    const BlockTable blocks = block_table(model, a.n, *a.n_a, q);
    for (const auto& blk : blocks.blocks)
      table.add({std::string("block"), to_string(blk.q_a), cli::big(blk.d * blk.b), cli::big(blk.d), cli::big(blk.b)});
  }
  emit(a.common, meta, table);
  return 0;
}

// ---- thermo --------------------------------------------------------------

struct ThermoArgs {
  Common common;
  std::vector<double> s;
  int points = 9;
};

int cmd_thermo(const ThermoArgs& a) {
  const ChargeModel model = resolve_model(a.common);
  json meta = base_meta("thermo", model);
  std::vector<double> grid = a.s;
  if (grid.empty()) {
    if (a.points < 1) throw UsageError("--points must be >= 1");
    const DensityInterval iv = density_interval(model);
    for (int i = 1; i <= a.points; ++i) grid.push_back(iv.lo + (iv.hi - iv.lo) * i / (a.points + 1));
  }
  meta["s_infinite_temperature"] = infinite_temperature_density(model);
  cli::Table table{{"s", "beta_star", "eta", "eta_pp", "c_star", "alpha0"}, {}};
  for (double s : grid) {
    const ThermoPoint tp = thermo_point(model, s);
    table.add({tp.s, tp.beta_star, tp.eta, tp.eta_pp, tp.c_star, tp.alpha0});
  }
  emit(a.common, meta, table);
  return 0;
}

// ---- page-curve ----------------------------------------------------------

struct PageArgs {
  Common common;
  int n = 0;
  double s = 0.0;
  std::vector<std::string> f;
  bool exact = false;
  std::string svg;
};

struct CurvePoint {
  double f;
  double total;
  std::optional<double> exact;
};

void write_svg(const std::string& path, const std::vector<CurvePoint>& pts, const std::string& title) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open svg file " + path);
  const double w = 640, h = 400, left = 60, right = 20, top = 30, bottom = 50;
  double ymin = INFINITY, ymax = -INFINITY;
  for (const auto& p : pts) {
    ymin = std::min(ymin, p.total);
    ymax = std::max(ymax, p.total);
    if (p.exact) {
      ymin = std::min(ymin, *p.exact);
      ymax = std::max(ymax, *p.exact);
    }
  }
  ymin = std::min(ymin, 0.0);
  if (ymax <= ymin) ymax = ymin + 1;
  auto px = [&](double f) { return left + f * (w - left - right); };
  auto py = [&](double y) { return h - bottom - (y - ymin) / (ymax - ymin) * (h - top - bottom); };

  os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << w << R"(" height=")" << h << R"(">)" << '\n'
     << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n'
     << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0})
    os << "<text x=\"" << px(f) << "\" y=\"" << h - bottom + 18 << "\" font-size=\"12\" text-anchor=\"middle\">"
       << format_double(f) << "</text>\n";
  os << "<text x=\"" << left - 8 << "\" y=\"" << py(ymax) + 4 << "\" font-size=\"12\" text-anchor=\"end\">"
     << format_double(std::round(ymax * 100) / 100) << "</text>\n"
     << "<text x=\"" << left - 8 << "\" y=\"" << py(ymin) + 4 << "\" font-size=\"12\" text-anchor=\"end\">"
     << format_double(std::round(ymin * 100) / 100) << "</text>\n"
     << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 12
     << "\" font-size=\"13\" text-anchor=\"middle\">f = N_A / N</text>\n"
     << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << top - 10
     << "\" font-size=\"13\" text-anchor=\"middle\">" << title << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (const auto& p : pts) os << px(p.f) << ',' << py(p.total) << ' ';
  os << "\"/>\n";
  for (const auto& p : pts)
    if (p.exact)
      os << "<circle cx=\"" << px(p.f) << "\" cy=\"" << py(*p.exact) << "\" r=\"3\" fill=\"darkorange\"/>\n";
  os << "</svg>\n";
}

int cmd_page_curve(const PageArgs& a) {
  require_positive_n(a.n);
  if (a.n < 2) throw DomainError("page-curve needs --n >= 2");
  const ChargeModel model = resolve_model(a.common);
  json meta = base_meta("page-curve", model);
  meta["n"] = a.n;
  meta["s"] = a.s;

  std::vector<Fraction> grid;
  if (a.f.empty()) {
    for (int n_a = 1; n_a < a.n; ++n_a) grid.emplace_back(n_a, a.n);
  } else {
    for (const auto& text : a.f) grid.push_back(parse_fraction(text, a.n));
  }

  std::optional<DoubledCharge> q;
  std::map<int, SectorTable> tables;
  if (a.exact) {
    if (a.n > kExactPageCurveMaxN) {
      meta["exact_skipped"] = "N above the exact page-curve bound " + std::to_string(kExactPageCurveMaxN);
    } else {
      q = resolve_charge(model, a.n, "", a.s, meta);
    }
  }
  auto table_for = [&](int n) -> const SectorTable& {
    auto it = tables.find(n);
    if (it == tables.end()) it = tables.emplace(n, sector_dims(model, n)).first;
    return it->second;
  };

  cli::Table table{{"f", "f_value", "regime", "term_N", "term_sqrtN", "term_O1", "includes_delta", "total", "exact"},
                   {}};
  std::vector<CurvePoint> curve;
  for (Fraction f : grid) {
    const EntropyEstimate e = average_entropy_asymptotic(model, f, a.s);
    std::optional<double> exact;
    const Fraction n_a = f * Fraction{a.n};
    if (q && n_a.denominator() == 1) {
      const int na = static_cast<int>(n_a.numerator());
      exact = exact_average_entropy(block_table(table_for(na), table_for(a.n - na), *q)).value;
    }
    const double total = e.total(a.n);
    table.add({fraction_text(f), fraction_value(f), std::string(to_string(e.regime)), e.term_N, e.term_sqrtN,
               e.term_O1, e.includes_delta, total, exact ? cli::Cell{*exact} : cli::Cell{}});
    curve.push_back({fraction_value(f), total, exact});
  }
  if (!a.svg.empty()) write_svg(a.svg, curve, model.name() + ", N = " + std::to_string(a.n) + ", s = " + format_double(a.s));
  emit(a.common, meta, table);
  return 0;
}

// ---- exact ---------------------------------------------------------------

struct ExactArgs {
  Common common;
  int n = 0;
  std::optional<int> n_a;
  std::string q;
  std::optional<double> s;
};

int cmd_exact(const ExactArgs& a) {
  require_positive_n(a.n);
  const ChargeModel model = resolve_model(a.common);
  json meta = base_meta("exact", model);
  meta["n"] = a.n;
  const DoubledCharge q = resolve_charge(model, a.n, a.q, a.s, meta);
  const BigInt dim = sector_dims(model, a.n).at(q);

  std::vector<int> sizes;
  if (a.n_a) {
    sizes.push_back(*a.n_a);
  } else {
    for (int n_a = 0; n_a <= a.n; ++n_a) sizes.push_back(n_a);
  }
  cli::Table table{{"n_total", "n_a", "f", "q_total", "dim", "value", "y1", "y2", "y3", "degenerate"}, {}};
  for (int n_a : sizes) {
    const ExactAverage e = exact_average_entropy(model, a.n, n_a, q);
    table.add({std::int64_t{a.n}, std::int64_t{n_a}, fraction_text(Fraction(n_a, a.n)), to_string(q), cli::big(dim),
               e.value, e.y1, e.y2, e.y3, e.degenerate});
  }
  emit(a.common, meta, table);
  return 0;
}

// ---- mc ------------------------------------------------------------------

struct McArgs {
  Common common;
  int n = 0;
  int n_a = 0;
  std::string q;
  std::optional<double> s;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string dump;
};

int cmd_mc(const McArgs& a) {
  require_positive_n(a.n);
  const ChargeModel model = resolve_model(a.common);
  json meta = base_meta("mc", model);
  meta["seed"] = a.seed;
  meta["samples"] = a.samples;
  const DoubledCharge q = resolve_charge(model, a.n, a.q, a.s, meta);
  const McRun r = run({model, a.n, a.n_a, q, a.samples, a.seed, a.threads});
  if (!a.dump.empty()) {
    std::ofstream dump(a.dump);
    if (!dump) throw UsageError("cannot open dump file " + a.dump);
    write_dump(dump, r);
  }
  const ExactAverage e = exact_average_entropy(model, a.n, a.n_a, q);
  const double z = r.std_error > 0 ? std::abs(r.mean - e.value) / r.std_error : 0.0;
  cli::Table table{{"n_total", "n_a", "q_total", "dim", "samples", "seed", "mean", "std_error", "sample_variance",
                    "exact", "z"},
                   {}};
  table.add({std::int64_t{a.n}, std::int64_t{a.n_a}, to_string(q), cli::big(sector_dims(model, a.n).at(q)), a.samples,
             std::to_string(a.seed), r.mean, r.std_error, r.sample_variance, e.value, z});
  emit(a.common, meta, table);
  return 0;
}

// ---- crosscheck ----------------------------------------------------------

struct CrossArgs {
  Common common;
  std::vector<int> n{8, 12};
  std::vector<std::string> f{"1/4", "1/2"};
  std::optional<double> s;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  int threads = 0;
};

int cmd_crosscheck(const CrossArgs& a) {
  const bool matrix = a.common.model_name.empty() && a.common.model_file.empty();
  std::optional<ChargeModel> model;
  if (!matrix) model = resolve_model(a.common);
  json meta = base_meta("crosscheck", model);
  meta["seed"] = a.seed;
  meta["samples"] = a.samples;
  meta["matrix"] = matrix ? "catalog" : "single-model";

  const CrosscheckOptions opts{a.samples, a.seed, a.threads};
  std::vector<CrosscheckRow> rows;
  if (matrix) {
    rows = default_crosscheck(opts);
  } else {
    for (int n : a.n) {
      require_positive_n(n);
      for (const auto& text : a.f) {
        const Fraction f = parse_fraction(text, n);
        const Fraction n_a = f * Fraction{n};
        std::vector<DoubledCharge> charges;
        if (a.s) {
          charges.push_back(snap_charge(*model, n, *a.s));
        } else {
          charges = interior_charges(*model, n);
        }
        for (DoubledCharge q : charges) {
          if (n_a.denominator() != 1 || n_a <= Fraction{0} || n_a >= Fraction{n}) {
            CrosscheckRow skip;
            skip.model = model->name().empty() ? "custom" : model->name();
            skip.n_total = n;
            skip.q_total = q;
            skip.skipped = true;
            skip.pass = true;
            skip.note = "f * N is not an interior integer";
            rows.push_back(skip);
            continue;
          }
          rows.push_back(crosscheck_point(*model, n, static_cast<int>(n_a.numerator()), q, opts));
        }
      }
    }
  }

  cli::Table table{{"model", "n_total", "n_a", "q_total", "s", "dim", "exact", "asymptotic", "abs_diff", "mc_mean",
                    "mc_std_error", "z", "status", "note"},
                   {}};
  int failed = 0, skipped = 0;
  std::map<int, std::pair<double, int>> diff_by_n;
  for (const auto& r : rows) {
    const std::string status = r.skipped ? "skipped" : (r.pass ? "pass" : "fail");
    failed += status == "fail";
    skipped += r.skipped;
    cli::Cell asym, diff;
    if (r.asymptotic) {
      asym = *r.asymptotic;
      diff = std::abs(r.exact - *r.asymptotic);
      auto& acc = diff_by_n[r.n_total];
      acc.first += std::abs(r.exact - *r.asymptotic);
      acc.second += 1;
    }
    table.add({r.model, std::int64_t{r.n_total}, std::int64_t{r.n_a}, to_string(r.q_total), r.s, cli::Decimal{r.dim},
               r.exact, asym, diff, r.mc_mean, r.mc_std_error, r.z, status, r.note});
  }
  json summary;
  summary["rows"] = rows.size();
  summary["failed"] = failed;
  summary["skipped"] = skipped;
  json trend = json::object();
  for (const auto& [n, acc] : diff_by_n) trend[std::to_string(n)] = acc.first / acc.second;
  summary["mean_abs_exact_minus_asymptotic_by_n"] = trend;
  meta["summary"] = summary;
  emit(a.common, meta, table);
  return failed == 0 ? 0 : 1;
}

// ---- laplace-check -------------------------------------------------------

struct LaplaceArgs {
  Common common;
  std::vector<double> n{1e2, 1e3, 1e4};
};

int cmd_laplace_check(const LaplaceArgs& a) {
  if (a.n.size() < 2) throw UsageError("laplace-check needs at least two --n values");
  json meta = base_meta("laplace-check", std::nullopt);
  cli::Table table{{"case", "kind", "n", "quadrature", "laplace", "rel_error", "slope", "target", "pass"}, {}};
  bool all_pass = true;
  for (const auto& c : oracle::laplace_suite()) {
    std::vector<double> quad, approx, err;
    for (double n : a.n) {
      quad.push_back(c.quadrature(n));
      approx.push_back(c.smooth ? laplace_smooth(c.problem, n).value : laplace_discontinuous(c.problem, n).value);
      err.push_back(std::abs(approx.back() - quad.back()) / quad.back());
    }
    const double slope = oracle::loglog_slope(a.n, err);
    const double target = c.smooth ? -2.0 : -1.5;
    const bool pass = std::abs(slope - target) < 0.15;
    all_pass = all_pass && pass;
    for (std::size_t i = 0; i < a.n.size(); ++i)
      table.add({std::string(c.name), std::string(c.smooth ? "smooth" : "discontinuous"), a.n[i], quad[i], approx[i],
                 err[i], slope, target, pass});
  }
  emit(a.common, meta, table);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typical entanglement entropy at fixed U(1) or SU(2) charge"};
  app.set_version_flag("--version", CHARGENT_VERSION);
  app.require_subcommand(1, 1);

  DimsArgs dims;
  auto* s_dims = app.add_subcommand("dims", "exact sector and block dimensions");
  add_common(s_dims, dims.common);
  s_dims->add_option("--n", dims.n, "number of bodies")->required();
  s_dims->add_option("--na", dims.n_a, "subsystem size");
  s_dims->add_option("--q", dims.q, "total charge, e.g. 0, 3/2");

  ThermoArgs thermo;
  auto* s_thermo = app.add_subcommand("thermo", "local thermodynamics eta, beta*, c*, alpha0");
  add_common(s_thermo, thermo.common);
  auto* thermo_s = s_thermo->add_option("--s", thermo.s, "charge densities");
  s_thermo->add_option("--points", thermo.points, "interior grid size when --s is absent")->excludes(thermo_s);

  PageArgs page;
  auto* s_page = app.add_subcommand("page-curve", "asymptotic average entropy against f");
  add_common(s_page, page.common);
  s_page->add_option("--n", page.n, "number of bodies")->required();
  s_page->add_option("--s", page.s, "charge density")->required();
  s_page->add_option("--f", page.f, "fractions (a/b or decimal); default N_A/N for all N_A");
  s_page->add_flag("--exact", page.exact, "add exact averages at the snapped charge");
  s_page->add_option("--svg", page.svg, "also write a line plot");

  ExactArgs exact;
  auto* s_exact = app.add_subcommand("exact", "exact average entropy");
  add_common(s_exact, exact.common);
  s_exact->add_option("--n", exact.n, "number of bodies")->required();
  s_exact->add_option("--na", exact.n_a, "subsystem size (default: all)");
  auto* exact_q = s_exact->add_option("--q", exact.q, "total charge");
  s_exact->add_option("--s", exact.s, "charge density, snapped to a realizable charge")->excludes(exact_q);

  McArgs mc;
  auto* s_mc = app.add_subcommand("mc", "Monte Carlo over Haar-random fixed-charge states");
  add_common(s_mc, mc.common);
  s_mc->add_option("--n", mc.n, "number of bodies")->required();
  s_mc->add_option("--na", mc.n_a, "subsystem size")->required();
  auto* mc_q = s_mc->add_option("--q", mc.q, "total charge");
  s_mc->add_option("--s", mc.s, "charge density, snapped to a realizable charge")->excludes(mc_q);
  s_mc->add_option("--samples", mc.samples, "number of samples");
  s_mc->add_option("--seed", mc.seed, "64-bit seed");
  s_mc->add_option("--threads", mc.threads, "worker threads (0: all cores)");
  s_mc->add_option("--dump", mc.dump, "write raw samples to this file");

  CrossArgs cross;
  auto* s_cross = app.add_subcommand("crosscheck", "exact vs asymptotic vs Monte Carlo report");
  add_common(s_cross, cross.common);
  s_cross->add_option("--n", cross.n, "numbers of bodies (single-model mode)");
  s_cross->add_option("--f", cross.f, "fractions (single-model mode)");
  s_cross->add_option("--s", cross.s, "charge density (default: two interior charges)");
  s_cross->add_option("--samples", cross.samples, "Monte Carlo samples per row");
  s_cross->add_option("--seed", cross.seed, "64-bit seed");
  s_cross->add_option("--threads", cross.threads, "worker threads (0: all cores)");

  LaplaceArgs lap;
  auto* s_lap = app.add_subcommand("laplace-check", "Laplace expansions against quadrature");
  s_lap->add_option("--format", lap.common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  s_lap->add_option("--out", lap.common.out, "output path (default stdout)");
  s_lap->add_option("--n", lap.n, "large parameters n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s_dims->parsed()) return cmd_dims(dims);
    if (s_thermo->parsed()) return cmd_thermo(thermo);
    if (s_page->parsed()) return cmd_page_curve(page);
    if (s_exact->parsed()) return cmd_exact(exact);
    if (s_mc->parsed()) return cmd_mc(mc);
    if (s_cross->parsed()) return cmd_crosscheck(cross);
    if (s_lap->parsed()) return cmd_laplace_check(lap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const SizeError& e) {
    std::cerr << "size error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

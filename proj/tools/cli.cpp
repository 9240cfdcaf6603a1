#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "geobary/barycenter.hpp"
#include "geobary/convexity.hpp"
#include "geobary/error.hpp"
#include "geobary/json_io.hpp"
#include "geobary/spaces.hpp"
#include "geobary/verify.hpp"

namespace geobary::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string input_path;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::size_t samples = 10000;
  std::string output_path;
  std::string format = "json";
  std::string anchor;
  std::optional<std::string> r_grid;
  std::optional<std::string> eps_grid;
  std::string radii = "1,10,100,1000,10000";
  std::string inject_fault;
};

// Raised for anything the user can fix in the input or flags.
struct InputError : Error {
  using Error::Error;
};

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const std::string tok = item.substr(first, last - first + 1);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw InputError(std::string(what) + ": not a number: '" + tok + "'");
    }
    values.push_back(v);
  }
  return values;
}

struct Input {
  Space space;
  std::optional<Measure> measure;
  json document;
};

Input load_input(const RunConfig& cfg, bool need_measure) {
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + cfg.input_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = parse_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(cfg.input_path + ": " + e.what(), e.line(), e.column());
  }
  if (!doc.is_object() || !doc.contains("space")) {
    throw InputError("input document needs a \"space\" descriptor");
  }
  if (doc.contains("atoms")) {
    MeasureDocument md = measure_document_from_json(doc);
    return {md.space, md.measure, std::move(doc)};
  }
  if (need_measure) throw InputError("input document has no \"atoms\"");
  return {make_space(descriptor_from_json(doc.at("space"))), std::nullopt, std::move(doc)};
}

Point resolve_anchor(const RunConfig& cfg, const Space& space, const Measure& measure) {
  if (cfg.anchor.empty()) return measure.atom(0);
  json j;
  try {
    j = parse_json_text(cfg.anchor);
  } catch (const ParseError& e) {
    throw InputError(std::string("--anchor: ") + e.what());
  }
  return point_from_json(j, space);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write output file '" + cfg.output_path + "'");
  file << text;
}

std::string point_csv(const Point& p) {
  if (p.kind() == SpaceKind::star_tree) {
    return std::to_string(p.tree().ray) + "," + format_number(p.tree().offset);
  }
  std::string s;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) s += ",";
    s += format_number(p.coords()[i]);
  }
  return s;
}

std::string point_csv_header(const Point& p) {
  if (p.kind() == SpaceKind::star_tree) return "ray,offset";
  std::string s;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(i);
  }
  return s;
}

int run_barycenter(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg, true);
  const Point anchor = resolve_anchor(cfg, in.space, *in.measure);
  SolveOptions opts;
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;
  BarycenterResult res = [&]() -> BarycenterResult {
    try {
      return solve(in.space, *in.measure, anchor, opts);
    } catch (const ConvergenceError& e) {
      json report = {{"error", e.what()}, {"first", to_json(e.first())}, {"second", to_json(e.second())}};
      emit(cfg, out, report.dump(2) + "\n");
      throw;
    }
  }();
  if (cfg.format == "csv") {
    std::string text = point_csv_header(res.point) + ",f,g,iterations,uniqueness_gap\n";
    text += point_csv(res.point) + "," + format_number(res.objective_value) + "," +
            format_number(res.g_value) + "," + std::to_string(res.iterations) + "," +
            format_number(res.certificate.gap) + "\n";
    emit(cfg, out, text);
  } else {
    json report = {{"point", to_json(res.point)},
                   {"f", res.objective_value},
                   {"g", res.g_value},
                   {"iterations", res.iterations},
                   {"tol", res.tol},
                   {"uniqueness_gap", res.certificate.gap},
                   {"anchor", to_json(anchor)},
                   {"space", in.space.name()}};
    emit(cfg, out, report.dump(2) + "\n");
  }
  return kOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(cfg, false);
  Space space = in.space;
  if (cfg.inject_fault == "midpoint") {
    space = make_faulty_midpoint_space(space);
  } else if (!cfg.inject_fault.empty()) {
    throw InputError("--inject-fault: unknown fault '" + cfg.inject_fault + "'");
  }
  const Report report = run_verification(space, in.measure, {.samples = cfg.samples, .seed = cfg.seed});
  if (cfg.format == "csv") {
    std::string text = "check,pass,margin,samples,witness\n";
    for (const auto& rec : report) {
      text += rec.check + "," + (rec.pass ? "true" : "false") + "," + format_number(rec.margin) + "," +
              std::to_string(rec.samples) + "," + (rec.witness ? csv_quote(rec.witness->dump()) : "") + "\n";
    }
    emit(cfg, out, text);
  } else {
    json j = to_json(report);
    j["space"] = space.name();
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    emit(cfg, out, j.dump(2) + "\n");
  }
  std::size_t failed = 0;
  for (const auto& rec : report) {
    if (!rec.pass) {
      ++failed;
      err << "FAIL " << rec.check << " margin " << format_number(rec.margin) << "\n";
    }
  }
  return failed == 0 ? kOk : kVerificationFailure;
}

std::vector<double> grid_from(const std::optional<std::string>& flag, const json& doc,
                              const char* key, std::vector<double> fallback, const char* what) {
  if (flag) return parse_list(*flag, what);
  if (doc.contains(key)) {
    std::vector<double> v;
    try {
      v = doc.at(key).get<std::vector<double>>();
    } catch (const json::exception&) {
      throw InputError(std::string(key) + " must be an array of numbers");
    }
    return v;
  }
  return fallback;
}

int run_phi(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg, false);
  const auto rs = grid_from(cfg.r_grid, in.document, "r_grid", {0.5, 1.0, 2.0}, "--r-grid");
  const auto es = grid_from(cfg.eps_grid, in.document, "eps_grid", {0.1, 1.0, 2.0}, "--eps-grid");
  if (rs.empty() || es.empty()) throw ConfigError("phi: empty r or eps grid");
  for (double r : rs) {
    for (double e : es) {
      if (!(r > 0.0) || !(e > 0.0 && e <= 2.0)) {
        throw ConfigError("phi: grid needs r > 0 and eps in (0, 2]");
      }
    }
  }
  struct Row {
    double r, eps, lower, upper;
    json witness;
  };
  std::vector<Row> rows;
  std::uint64_t cell = 0;
  for (double r : rs) {
    for (double e : es) {
      const PhiEstimate est = phi_estimate(in.space, r, e, cfg.samples, cfg.seed + cell++);
      rows.push_back({r, e, phi_lower_bound(in.space, r, e).value, est.value, to_json(est.witness)});
    }
  }
  if (cfg.format == "csv") {
    std::string text = "r,eps,lower,upper,witness_s\n";
    for (const auto& row : rows) {
      text += format_number(row.r) + "," + format_number(row.eps) + "," + format_number(row.lower) + "," +
              format_number(row.upper) + "," + csv_quote(row.witness.dump()) + "\n";
    }
    emit(cfg, out, text);
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back({{"r", row.r}, {"eps", row.eps}, {"lower", row.lower}, {"upper", row.upper},
                     {"witness", row.witness}});
    }
    json j = {{"space", in.space.name()}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"rows", arr}};
    emit(cfg, out, j.dump(2) + "\n");
  }
  return kOk;
}

int run_probe(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg, true);
  const Point anchor = resolve_anchor(cfg, in.space, *in.measure);
  const auto radii = parse_list(cfg.radii, "--radii");
  const Objective obj(in.space, *in.measure, in.measure->atom(0));
  const CoercivityReport rep = coercivity_probe(obj, anchor, radii);
  if (cfg.format == "csv") {
    std::string text = "radius,f\n";
    for (std::size_t k = 0; k < rep.radii.size(); ++k) {
      text += format_number(rep.radii[k]) + "," + format_number(rep.values[k]) + "\n";
    }
    emit(cfg, out, text);
  } else {
    json j = {{"space", in.space.name()},
              {"base", to_json(anchor)},
              {"radii", rep.radii},
              {"values", rep.values},
              {"increasing_from", rep.increasing_from},
              {"eventually_increasing", rep.eventually_increasing},
              {"exceeds_prior_max", rep.exceeds_prior_max},
              {"pass", rep.pass}};
    emit(cfg, out, j.dump(2) + "\n");
  }
  return rep.pass ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barycenters in uniformly convex geodesic spaces", "geobary"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool tol, bool samples) {
    sub->add_option("--input", cfg.input_path, "Measure or space document (JSON)")->required();
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    if (tol) sub->add_option("--tol", cfg.tol, "Solver tolerance")->check(CLI::PositiveNumber);
    if (samples) {
      sub->add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber)->capture_default_str();
    }
    sub->add_option("--out", cfg.output_path, "Write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };

  auto* bary = app.add_subcommand("barycenter", "Compute the barycenter of a measure");
  common(bary, true, false);
  bary->add_option("--anchor", cfg.anchor, "Anchor point as JSON (default: first atom)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites on a space");
  common(verify, false, true);
  verify->add_option("--inject-fault", cfg.inject_fault, "Corrupt the space (midpoint)");

  auto* phi = app.add_subcommand("phi", "Tabulate lower bounds and sampled estimates of Phi(r, eps)");
  common(phi, false, true);
  phi->add_option("--r-grid", cfg.r_grid, "Comma-separated radii");
  phi->add_option("--eps-grid", cfg.eps_grid, "Comma-separated separations in (0, 2]");

  auto* probe = app.add_subcommand("probe", "Evaluate f along a geodesic ray");
  common(probe, false, false);
  probe->add_option("--anchor", cfg.anchor, "Base point of the ray as JSON (default: first atom)");
  probe->add_option("--radii", cfg.radii, "Comma-separated increasing distances")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "geobary: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (bary->parsed()) return run_barycenter(cfg, out, err);
    if (verify->parsed()) return run_verify(cfg, out, err);
    if (phi->parsed()) return run_phi(cfg, out, err);
    return run_probe(cfg, out, err);
  } catch (const ParseError& e) {
    err << "geobary: parse error in " << e.what() << "\n";
    return kInputError;
  } catch (const ConvergenceError& e) {
    err << "geobary: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const SamplingError& e) {
    err << "geobary: " << e.what() << "\n";
    return kSamplingFailure;
  } catch (const Error& e) {
    err << "geobary: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace geobary::cli

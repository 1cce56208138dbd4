// Copyright 2026 The tradeoff-capacity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tradeoff/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tradeoff/svg.hpp"

namespace tradeoff::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RawArgs {
  std::string command;
  std::string kind = "cq";
  std::string format;
};

void configure(CLI::App& app, RunConfig& c, RawArgs& raw) {
  app.add_option("command", raw.command, "curve | region | gain | verify | plot")
      ->required()
      ->check(CLI::IsMember({"curve", "region", "gain", "verify", "plot"}));
  app.add_option("--channel", c.channel, "dephasing | cloning | unruh")
      ->required()
      ->check(CLI::IsMember({"dephasing", "cloning", "unruh"}));
  app.add_option("--p", c.p, "dephasing probability p in [0, 1]");
  app.add_option("--n", c.n, "number of clones N >= 1");
  app.add_option("--z", c.z, "Unruh acceleration parameter z in [0, 1)");
  app.add_option("--kind", raw.kind, "cq | ce")->check(CLI::IsMember({"cq", "ce"}));
  app.add_option("--grid", c.grid, "mu-grid size (default 512)");
  app.add_option("--tail-tol", c.tail_tol, "Unruh truncation tolerance (default 1e-10)");
  app.add_option("--samples", c.samples, "random ensembles for verify (default 20000)");
  app.add_option("--seed", c.seed, "random seed for verify (default 7)");
  app.add_option("--lambda", c.lambda, "trade-off weight for verify");
  app.add_option("--output,-o", c.output, "output file (default: standard output)");
  app.add_option("--format", raw.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--values", c.values, "gain: comma-separated parameter values")
      ->delimiter(',');
  app.add_option("--with", c.with, "verify: second channel for the two-letter check");
  app.add_option("--ensemble-size", c.ensemble_size, "verify: ensemble size cap (2..6)");
  app.add_flag("--diagonal", c.diagonal, "verify: Schmidt-diagonal conditional states only");
  app.add_option("--figure", c.figure, "plot: curve | region | gain")
      ->check(CLI::IsMember({"curve", "region", "gain"}));
}

void finish(RunConfig& c, const RawArgs& raw) {
  static const std::pair<const char*, Command> commands[] = {
      {"curve", Command::Curve}, {"region", Command::Region}, {"gain", Command::Gain},
      {"verify", Command::Verify}, {"plot", Command::Plot}};
  for (const auto& [name, cmd] : commands) {
    if (raw.command == name) c.command = cmd;
  }
  c.kind = raw.kind == "ce" ? CurveKind::CE : CurveKind::CQ;
  if (raw.format == "csv") c.format = Format::Csv;
  if (raw.format == "json") c.format = Format::Json;
  if (raw.format == "svg") c.format = Format::Svg;
}

ChannelFamily family_with_value(const std::string& channel, double value, double tail_tol) {
  if (channel == "dephasing") return Dephasing{value};
  if (channel == "cloning") {
    if (!(std::isfinite(value) && value == std::floor(value) && value >= 1.0 && value < 2e9)) {
      throw DomainError("n", "number of clones must be a positive integer, got " +
                                 format_number(value));
    }
    return Cloning{static_cast<int>(value)};
  }
  if (channel == "unruh") return Unruh{value, tail_tol};
  throw UsageError("unknown channel '" + channel + "'");
}

Json params_json(const ChannelFamily& f) {
  Json j = Json::object();
  if (const auto* d = std::get_if<Dephasing>(&f)) {
    j["p"] = d->p;
  } else if (const auto* c = std::get_if<Cloning>(&f)) {
    j["n"] = c->n;
  } else {
    const auto& u = std::get<Unruh>(f);
    j["z"] = u.z;
    j["tail_tol"] = u.tail_tol;
  }
  return j;
}

Json curve_points_json(const TradeoffCurve& curve) {
  const char* second = curve.kind == CurveKind::CQ ? "Q" : "E";
  Json arr = Json::array();
  for (const RatePoint& p : curve.points) {
    Json o;
    o["mu"] = p.mu;
    o["C"] = p.c;
    o[second] = p.second;
    arr.push_back(std::move(o));
  }
  return arr;
}

std::string family_title(const ChannelFamily& f) {
  if (const auto* d = std::get_if<Dephasing>(&f)) return "dephasing p = " + format_number(d->p);
  if (const auto* c = std::get_if<Cloning>(&f)) return "1->N cloning N = " + std::to_string(c->n);
  return "Unruh z = " + format_number(std::get<Unruh>(f).z);
}

std::string parameter_label(const std::string& channel) {
  if (channel == "dephasing") return "dephasing parameter p";
  if (channel == "cloning") return "number of clones N";
  return "acceleration parameter z";
}

Format resolve_format(const RunConfig& c, Format fallback, std::initializer_list<Format> allowed) {
  const Format f = c.format.value_or(fallback);
  for (Format a : allowed) {
    if (a == f) return f;
  }
  throw UsageError("output format not supported by this command");
}

std::vector<GainSweepRow> sweep_rows(const RunConfig& c) {
  std::vector<ChannelFamily> families;
  if (c.values.empty()) {
    families.push_back(family_from_config(c));
  } else {
    for (double v : c.values) families.push_back(family_with_value(c.channel, v, c.tail_tol));
  }
  return gain_sweep(families, c.grid);
}

std::vector<RateTriple> corner_samples(const ChannelFamily& family) {
  std::vector<RateTriple> corners;
  for (int i = 0; i <= 16; ++i) corners.push_back(cef_corner(family, i / 32.0));
  return corners;
}

int execute(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::Curve: {
      const Format f = resolve_format(c, Format::Csv, {Format::Csv, Format::Json, Format::Svg});
      const ChannelFamily family = family_from_config(c);
      const TradeoffCurve curve = sample_curve(family, c.kind, c.grid);
      if (f == Format::Csv) write_curve_csv(out, curve);
      if (f == Format::Json) out << curve_json(curve) << '\n';
      if (f == Format::Svg) out << svg::curve_chart(curve, family_title(family));
      return kExitOk;
    }
    case Command::Region: {
      const Format f = resolve_format(c, Format::Json, {Format::Json, Format::Svg});
      const ChannelFamily family = family_from_config(c);
      const CQERegion region = build_region(family, c.grid);
      if (f == Format::Json) {
        out << region_json(region) << '\n';
      } else {
        out << svg::region_chart(region, corner_samples(family), family_title(family));
      }
      return kExitOk;
    }
    case Command::Gain: {
      const Format f = resolve_format(c, Format::Csv, {Format::Csv, Format::Json, Format::Svg});
      const std::vector<GainSweepRow> rows = sweep_rows(c);
      if (f == Format::Csv) write_gain_csv(out, rows);
      if (f == Format::Json) out << gain_json(rows) << '\n';
      if (f == Format::Svg) {
        out << svg::gain_chart(rows, parameter_label(c.channel), c.channel + " gains");
      }
      return kExitOk;
    }
    case Command::Verify: {
      resolve_format(c, Format::Json, {Format::Json});
      if (!c.lambda) throw UsageError("verify needs --lambda");
      const ChannelFamily family = family_from_config(c);
      SearchOptions options;
      options.n_samples = c.samples;
      options.seed = c.seed;
      options.ensemble_size = c.ensemble_size;
      options.diagonal = c.diagonal;
      const VerificationReport report =
          c.with.empty()
              ? random_ensemble_search(family, c.kind, *c.lambda, options)
              : two_letter_check(family, parse_family_spec(c.with, c.tail_tol), c.kind,
                                 *c.lambda, options);
      out << report_json(report) << '\n';
      return report.passed() ? kExitOk : kExitVerificationFailed;
    }
    case Command::Plot: {
      resolve_format(c, Format::Svg, {Format::Svg});
      if (c.figure == "gain") {
        out << svg::gain_chart(sweep_rows(c), parameter_label(c.channel), c.channel + " gains");
        return kExitOk;
      }
      const ChannelFamily family = family_from_config(c);
      if (c.figure == "region") {
        out << svg::region_chart(build_region(family, c.grid), corner_samples(family),
                                 family_title(family));
      } else {
        out << svg::curve_chart(sample_curve(family, c.kind, c.grid), family_title(family));
      }
      return kExitOk;
    }
  }
  return kExitUsage;
}

}  // namespace

RunConfig parse_arguments(int argc, const char* const* argv) {
  CLI::App app{"tradeoff"};
  RunConfig config;
  RawArgs raw;
  configure(app, config, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  finish(config, raw);
  return config;
}

ChannelFamily family_from_config(const RunConfig& c) {
  const int given = (c.p ? 1 : 0) + (c.n ? 1 : 0) + (c.z ? 1 : 0);
  if (given != 1) {
    throw UsageError("exactly one of --p, --n, --z must be given (" + std::to_string(given) +
                     " given)");
  }
  ChannelFamily family;
  if (c.channel == "dephasing") {
    if (!c.p) throw UsageError("dephasing takes --p");
    family = Dephasing{*c.p};
  } else if (c.channel == "cloning") {
    if (!c.n) throw UsageError("cloning takes --n");
    family = Cloning{*c.n};
  } else if (c.channel == "unruh") {
    if (!c.z) throw UsageError("unruh takes --z");
    family = Unruh{*c.z, c.tail_tol};
  } else {
    throw UsageError("unknown channel '" + c.channel + "'");
  }
  validate(family);
  return family;
}

ChannelFamily parse_family_spec(const std::string& spec, double tail_tol) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("expected name:value, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw UsageError("cannot read the value in '" + spec + "'");
  }
  ChannelFamily f = family_with_value(name, value, tail_tol);
  validate(f);
  return f;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output.empty()) return execute(config, out);
    std::ostringstream buffer;
    const int status = execute(config, buffer);
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << config.output << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedFamilyError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: invalid " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trade-off capacity curves, CQE regions and gains for Hadamard channels"};
  RunConfig config;
  RawArgs raw;
  configure(app, config, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }
  finish(config, raw);
  return run(config, out, err);
}

// ---------------------------------------------------------------------------

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_curve_csv(std::ostream& os, const TradeoffCurve& curve) {
  os << "mu,C," << (curve.kind == CurveKind::CQ ? "Q" : "E") << '\n';
  for (const RatePoint& p : curve.points) {
    os << format_number(p.mu) << ',' << format_number(p.c) << ',' << format_number(p.second)
       << '\n';
  }
}

TradeoffCurve read_curve_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw UsageError("empty curve file");
  TradeoffCurve curve;
  if (line == "mu,C,Q") {
    curve.kind = CurveKind::CQ;
  } else if (line == "mu,C,E") {
    curve.kind = CurveKind::CE;
  } else {
    throw UsageError("unexpected curve header '" + line + "'");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell[3];
    for (std::string& s : cell) {
      if (!std::getline(row, s, ',')) throw UsageError("short curve row '" + line + "'");
    }
    try {
      curve.points.push_back(
          RatePoint{std::stod(cell[1]), std::stod(cell[2]), curve.kind, std::stod(cell[0])});
    } catch (const std::exception&) {
      throw UsageError("unreadable curve row '" + line + "'");
    }
  }
  return curve;
}

void write_gain_csv(std::ostream& os, const std::vector<GainSweepRow>& rows) {
  os << "param,G_CQ,G_CE\n";
  for (const GainSweepRow& r : rows) {
    os << format_number(r.param) << ',' << format_number(r.cq.gain) << ','
       << format_number(r.ce.gain) << '\n';
  }
}

std::string region_json(const CQERegion& region) {
  Json j;
  j["channel"] = family_name(region.family);
  j["params"] = params_json(region.family);
  j["h"] = region.h;
  j["cq_curve"] = curve_points_json(region.cq_curve);
  j["ce_curve"] = curve_points_json(region.ce_curve);
  return j.dump(2);
}

std::string curve_json(const TradeoffCurve& curve) {
  Json j;
  j["channel"] = family_name(curve.family);
  j["params"] = params_json(curve.family);
  j["kind"] = kind_name(curve.kind);
  j["points"] = curve_points_json(curve);
  return j.dump(2);
}

std::string gain_json(const std::vector<GainSweepRow>& rows) {
  Json arr = Json::array();
  for (const GainSweepRow& r : rows) {
    Json o;
    o["param"] = r.param;
    o["G_CQ"] = r.cq.gain;
    o["G_CE"] = r.ce.gain;
    o["degenerate_cq"] = r.cq.degenerate;
    o["degenerate_ce"] = r.ce.degenerate;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

std::string report_json(const VerificationReport& r) {
  Json j;
  j["channel"] = r.family;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["kind"] = kind_name(r.kind);
  j["lambda"] = r.lambda;
  j["n_samples"] = r.n_samples;
  j["n_injected"] = r.n_injected;
  j["ensemble_size"] = r.ensemble_size;
  j["diagonal"] = r.diagonal;
  j["seed"] = r.seed;
  j["best_sampled"] = r.best_sampled;
  j["closed_form"] = r.closed_form;
  j["closed_form_mu"] = r.closed_form_mu;
  j["max_violation"] = r.max_violation;
  j["passed"] = r.passed();
  return j.dump(2);
}

}  // namespace tradeoff::cli

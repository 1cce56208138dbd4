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

#pragma once

// Command-line front end: argument parsing, dispatch, and the CSV / JSON
// encodings of curves, regions, gains and verification reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tradeoff/errors.hpp"
#include "tradeoff/gain.hpp"
#include "tradeoff/oracle.hpp"
#include "tradeoff/region.hpp"

namespace tradeoff::cli {

enum class Command { Curve, Region, Gain, Verify, Plot };
enum class Format { Csv, Json, Svg };

/// Bad or inconsistent flags (exit status 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct RunConfig {
  Command command = Command::Curve;
  std::string channel;              // dephasing | cloning | unruh
  std::optional<double> p;
  std::optional<int> n;
  std::optional<double> z;
  CurveKind kind = CurveKind::CQ;
  int grid = 512;
  double tail_tol = 1e-10;
  int samples = 20000;
  std::uint64_t seed = 7;
  std::optional<double> lambda;
  std::string output;               // empty: standard output
  std::optional<Format> format;     // default depends on the command
  std::vector<double> values;       // gain: parameter values to sweep
  std::string with;                 // verify: second channel, e.g. "dephasing:0.5"
  int ensemble_size = 6;
  bool diagonal = false;
  std::string figure = "curve";     // plot: curve | region | gain
};

/// Throws UsageError. --help is reported through CLI11's exceptions and
/// handled by main_entry.
RunConfig parse_arguments(int argc, const char* const* argv);

/// The family named by the config. Throws UsageError when the parameter
/// set does not match the channel, DomainError when a value is out of range.
ChannelFamily family_from_config(const RunConfig& config);

/// Parses "name:value" (e.g. "cloning:2").
ChannelFamily parse_family_spec(const std::string& spec, double tail_tol);

/// Runs the command, writing to config.output or `out`. Returns the exit
/// status; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map exceptions to exit statuses.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Encodings

/// Header mu,C,Q (or mu,C,E), values at 12 significant digits, '\n' endings.
void write_curve_csv(std::ostream& os, const TradeoffCurve& curve);

/// Reads what write_curve_csv wrote; the result is not marked convexified.
/// Throws UsageError on malformed input.
TradeoffCurve read_curve_csv(std::istream& is);

void write_gain_csv(std::ostream& os, const std::vector<GainSweepRow>& rows);

std::string region_json(const CQERegion& region);
std::string curve_json(const TradeoffCurve& curve);
std::string gain_json(const std::vector<GainSweepRow>& rows);
std::string report_json(const VerificationReport& report);

/// 12 significant digits, as used in the CSV files.
std::string format_number(double x);

}  // namespace tradeoff::cli

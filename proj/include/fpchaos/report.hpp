#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpchaos/theorems.hpp"

namespace fpchaos {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

/// 17 significant digits, '.' decimal point, independent of the locale.
std::string format_double(double x);

struct MomentReport {
  int q = 0;
  int m = 0;
  double lambda = 0.0;
  MomentMethod method = MomentMethod::product;
  Measure measure = Measure::poisson;
  Complex value;
  /// Closed-form target for the measure at rate λ: φ(Z(λ)^m) or the
  /// semicircle moment.
  double oracle = 0.0;
  double delta = 0.0;  // |value - oracle|
};

MomentReport make_moment_report(const GridKernel& f, int m, MomentMethod method, Measure measure);

struct NcSummary {
  int n = 0;
  std::uint64_t noncrossing = 0;
  std::optional<std::uint64_t> total;  // |P(n)| when enumerable
  std::vector<SetPartition> listing;
};

struct Nc0Summary {
  int m = 0;
  int q = 0;
  Nc0Classes classes;
  bool include_listing = false;
};

NcSummary summarize_nc(int n, bool include_listing);
Nc0Summary summarize_nc0(int m, int q, bool include_listing);

std::string render(const NcSummary& s, Format fmt);
std::string render(const Nc0Summary& s, Format fmt);
std::string render(const RiordanTable& t, Format fmt);
/// Entries of one moments run; `spread` is the largest pairwise distance
/// between the reported values.
std::string render(const std::vector<MomentReport>& reports, Format fmt);
std::string render(const IdentityReport& r, Format fmt);
std::string render(const IndicatorReport& r, Format fmt);
std::string render(const ConvergenceSeries& s, Format fmt);
std::string render(const TransferReport& r, Format fmt);
std::string render(const TamednessReport& r, Format fmt);

}  // namespace fpchaos

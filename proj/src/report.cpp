#include "fpchaos/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "fpchaos/error.hpp"

namespace fpchaos {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  fail(ErrorCode::invalid_argument, "unknown output format '" + name + "'");
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

MomentReport make_moment_report(const GridKernel& f, int m, MomentMethod method, Measure measure) {
  MomentReport r;
  r.q = f.arity();
  r.m = m;
  r.lambda = norm2(f);
  r.method = method;
  r.measure = measure;
  r.value = moment(f, m, method, measure);
  if (r.lambda > 0.0) {
    r.oracle = measure == Measure::poisson ? free_poisson_moment(r.lambda, m) : semicircular_moment(r.lambda, m);
  }
  r.delta = std::abs(r.value - Complex{r.oracle});
  return r;
}

NcSummary summarize_nc(int n, bool include_listing) {
  NcSummary s;
  s.n = n;
  for_each_nc(n, PartitionFilter{}, [&](const std::vector<int>& labels) {
    ++s.noncrossing;
    if (include_listing) s.listing.push_back(SetPartition::from_labels(labels));
  });
  if (n <= kMaxPartitionGround) {
    std::uint64_t total = 0;
    for_each_partition(n, PartitionFilter{}, [&](const std::vector<int>&) { ++total; });
    s.total = total;
  }
  return s;
}

Nc0Summary summarize_nc0(int m, int q, bool include_listing) {
  return Nc0Summary{m, q, nc0_classes(m, q), include_listing};
}

namespace {

json partitions_json(const std::vector<SetPartition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.blocks());
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

json terms_json(const std::vector<ContractionTerm>& terms) {
  json out = json::object();
  for (const auto& t : terms) out[t.label] = t.value;
  return out;
}

}  // namespace

std::string render(const NcSummary& s, Format fmt) {
  if (fmt == Format::json) {
    json j{{"n", s.n}, {"noncrossing", s.noncrossing}};
    j["total"] = s.total ? json(*s.total) : json(nullptr);
    if (!s.listing.empty()) j["partitions"] = partitions_json(s.listing);
    return dump(j);
  }
  std::ostringstream os;
  if (fmt == Format::csv) {
    os << "n,noncrossing,total\n" << s.n << ',' << s.noncrossing << ',';
    if (s.total) os << *s.total;
    os << '\n';
    return os.str();
  }
  os << s.noncrossing << " non-crossing";
  if (s.total) os << " of " << *s.total << " total";
  os << '\n';
  for (const auto& p : s.listing) os << p.to_string() << '\n';
  return os.str();
}

std::string render(const Nc0Summary& s, Format fmt) {
  const auto& c = s.classes;
  if (fmt == Format::json) {
    json j{{"m", s.m},
           {"q", s.q},
           {"pairings", c.pairings.size()},
           {"large_blocks", c.large_blocks.size()},
           {"at_least_two", c.at_least_two.size()}};
    if (s.include_listing) {
      j["listing"] = {{"pairings", partitions_json(c.pairings)},
                      {"large_blocks", partitions_json(c.large_blocks)},
                      {"at_least_two", partitions_json(c.at_least_two)}};
    }
    return dump(j);
  }
  std::ostringstream os;
  if (fmt == Format::csv) {
    os << "m,q,pairings,large_blocks,at_least_two\n"
       << s.m << ',' << s.q << ',' << c.pairings.size() << ',' << c.large_blocks.size() << ','
       << c.at_least_two.size() << '\n';
    return os.str();
  }
  os << "NC0_2 " << c.pairings.size() << '\n'
     << "NC0_>2 " << c.large_blocks.size() << '\n'
     << "NC0_>=2 " << c.at_least_two.size() << '\n';
  if (s.include_listing)
    for (const auto& p : c.at_least_two) os << p.to_string() << '\n';
  return os.str();
}

std::string render(const RiordanTable& t, Format fmt) {
  if (fmt == Format::json) {
    json counts = json::object();
    for (const auto& [j, c] : t.counts) counts[std::to_string(j)] = c;
    return dump(json{{"m", t.m}, {"counts", counts}, {"total", t.total()}});
  }
  std::ostringstream os;
  if (fmt == Format::csv) {
    os << "m,j,count\n";
    for (const auto& [j, c] : t.counts) os << t.m << ',' << j << ',' << c << '\n';
    return os.str();
  }
  for (const auto& [j, c] : t.counts) os << "R_{" << t.m << ',' << j << "}=" << c << ' ';
  os << "R_" << t.m << '=' << t.total() << '\n';
  return os.str();
}

std::string render(const std::vector<MomentReport>& reports, Format fmt) {
  double spread = 0.0;
  for (const auto& a : reports)
    for (const auto& b : reports) spread = std::max(spread, std::abs(a.value - b.value));
  if (fmt == Format::csv) {
    std::ostringstream os;
    os << "q,m,lambda,measure,method,value_re,value_im,oracle,delta\n";
    for (const auto& r : reports)
      os << r.q << ',' << r.m << ',' << format_double(r.lambda) << ',' << measure_name(r.measure) << ','
         << method_name(r.method) << ',' << format_double(r.value.real()) << ','
         << format_double(r.value.imag()) << ',' << format_double(r.oracle) << ',' << format_double(r.delta)
         << '\n';
    return os.str();
  }
  json rows = json::array();
  for (const auto& r : reports) {
    rows.push_back({{"q", r.q},
                    {"m", r.m},
                    {"lambda", r.lambda},
                    {"measure", measure_name(r.measure)},
                    {"method", method_name(r.method)},
                    {"value_re", r.value.real()},
                    {"value_im", r.value.imag()},
                    {"oracle", r.oracle},
                    {"delta", r.delta}});
  }
  return dump(json{{"reports", rows}, {"method_spread", spread}});
}

std::string render(const IdentityReport& r, Format fmt) {
  if (fmt == Format::csv) {
    std::ostringstream os;
    os << "q,lambda,lhs,rhs,delta,holds";
    for (const auto& t : r.terms) os << ',' << t.label;
    os << '\n'
       << r.q << ',' << format_double(r.lambda) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
       << ',' << format_double(r.delta) << ',' << (r.holds ? 1 : 0);
    for (const auto& t : r.terms) os << ',' << format_double(t.value);
    os << '\n';
    return os.str();
  }
  return dump(json{{"q", r.q},
                   {"lambda", r.lambda},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"terms", terms_json(r.terms)},
                   {"delta", r.delta},
                   {"tolerance", r.tolerance},
                   {"holds", r.holds}});
}

std::string render(const IndicatorReport& r, Format fmt) {
  if (fmt == Format::csv) {
    std::ostringstream os;
    os << "m,value,oracle,delta,match\n";
    for (const auto& c : r.moments)
      os << c.m << ',' << format_double(c.value) << ',' << format_double(c.oracle) << ','
         << format_double(c.delta) << ',' << (c.match ? 1 : 0) << '\n';
    return os.str();
  }
  json rows = json::array();
  for (const auto& c : r.moments)
    rows.push_back({{"m", c.m}, {"value", c.value}, {"oracle", c.oracle}, {"delta", c.delta}, {"match", c.match}});
  return dump(json{{"lambda", r.lambda},
                   {"is_indicator", r.is_indicator},
                   {"moments_match", r.moments_match},
                   {"consistent", r.consistent},
                   {"moments", rows}});
}

std::string render(const ConvergenceSeries& s, Format fmt) {
  if (fmt == Format::csv) {
    std::ostringstream os;
    os << "step,lambda,statistic,target,delta";
    if (!s.steps.empty())
      for (const auto& t : s.steps.front().contraction_norms) os << ',' << t.label;
    os << ",moment_gap\n";
    for (const auto& st : s.steps) {
      os << st.n << ',' << format_double(st.lambda) << ',' << format_double(st.statistic) << ','
         << format_double(st.target) << ',' << format_double(st.statistic_gap);
      for (const auto& t : st.contraction_norms) os << ',' << format_double(t.value);
      os << ',' << format_double(st.moment_gap) << '\n';
    }
    return os.str();
  }
  json steps = json::array();
  for (const auto& st : s.steps) {
    steps.push_back({{"step", st.n},
                     {"lambda", st.lambda},
                     {"statistic", st.statistic},
                     {"target", st.target},
                     {"delta", st.statistic_gap},
                     {"moment_gap", st.moment_gap},
                     {"contraction_norms", terms_json(st.contraction_norms)},
                     {"parameters", st.parameters}});
  }
  return dump(json{{"family", s.family},
                   {"q", s.q},
                   {"M", s.M},
                   {"tolerance", s.tolerance},
                   {"steps", steps},
                   {"final_statistic_gap", s.final_statistic_gap},
                   {"final_moment_gap", s.final_moment_gap},
                   {"final_within_tolerance", s.final_within_tolerance}});
}

std::string render(const TransferReport& r, Format fmt) {
  if (fmt == Format::csv) {
    std::ostringstream os;
    os << "m,poisson_re,poisson_im,poisson_oracle,wigner_re,wigner_im,wigner_oracle,"
          "poisson_engine_delta,wigner_engine_delta\n";
    for (const auto& row : r.rows)
      os << row.m << ',' << format_double(row.poisson.real()) << ',' << format_double(row.poisson.imag()) << ','
         << format_double(row.poisson_oracle) << ',' << format_double(row.wigner.real()) << ','
         << format_double(row.wigner.imag()) << ',' << format_double(row.wigner_oracle) << ','
         << format_double(row.poisson_engine_delta) << ',' << format_double(row.wigner_engine_delta) << '\n';
    return os.str();
  }
  json poisson = json::array();
  json wigner = json::array();
  for (const auto& row : r.rows) {
    poisson.push_back({{"m", row.m},
                       {"value_re", row.poisson.real()},
                       {"value_im", row.poisson.imag()},
                       {"oracle", row.poisson_oracle},
                       {"delta", std::abs(row.poisson - Complex{row.poisson_oracle})},
                       {"engine_delta", row.poisson_engine_delta}});
    wigner.push_back({{"m", row.m},
                      {"value_re", row.wigner.real()},
                      {"value_im", row.wigner.imag()},
                      {"oracle", row.wigner_oracle},
                      {"delta", std::abs(row.wigner - Complex{row.wigner_oracle})},
                      {"engine_delta", row.wigner_engine_delta}});
  }
  return dump(json{{"q", r.q},
                   {"lambda", r.lambda},
                   {"M", r.M},
                   {"tolerance", r.tolerance},
                   {"poisson", poisson},
                   {"wigner", wigner},
                   {"poisson_matches_oracle", r.poisson_matches_oracle},
                   {"wigner_matches_oracle", r.wigner_matches_oracle}});
}

std::string render(const TamednessReport& r, Format fmt) {
  if (fmt == Format::csv) {
    std::ostringstream os;
    os << "sigma,max,bounded";
    const std::size_t n = r.entries.empty() ? 0 : r.entries.front().values.size();
    for (std::size_t i = 1; i <= n; ++i) os << ",n" << i;
    os << '\n';
    for (const auto& e : r.entries) {
      os << csv_quote(e.sigma.to_string()) << ',' << format_double(e.max) << ',' << (e.bounded ? 1 : 0);
      for (double v : e.values) os << ',' << format_double(v);
      os << '\n';
    }
    return os.str();
  }
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"sigma", e.sigma.blocks()}, {"values", e.values}, {"max", e.max}, {"bounded", e.bounded}});
  return dump(json{{"q", r.q},
                   {"m", r.m},
                   {"threshold", r.threshold},
                   {"bounded", r.bounded},
                   {"scope", r.scope},
                   {"entries", entries}});
}

}  // namespace fpchaos

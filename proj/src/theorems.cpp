#include "fpchaos/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "fpchaos/error.hpp"

namespace fpchaos {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

double real_moment(Complex v, const char* what) {
  require(std::abs(v.imag()) <= 1e-10 * std::max(1.0, std::abs(v.real())), ErrorCode::domain,
          std::string(what) + ": moment has a non-negligible imaginary part");
  return v.real();
}

void check_moment_order(const GridKernel& f, int M, const char* what) {
  require(M >= 1, ErrorCode::invalid_argument, std::string(what) + ": M must be >= 1");
  require(M <= 14, ErrorCode::size_limit, std::string(what) + ": M exceeds 14");
  require(M * f.arity() <= kMaxNcGround, ErrorCode::size_limit,
          std::string(what) + ": M*q exceeds " + std::to_string(kMaxNcGround));
}

}  // namespace

double fourth_moment_statistic(const GridKernel& f, Measure measure) {
  const double m4 = real_moment(moment_diagram(f, 4, measure), "fourth moment statistic");
  const double m3 = real_moment(moment_diagram(f, 3, measure), "fourth moment statistic");
  return m4 - 2.0 * m3;
}

std::vector<ContractionTerm> contraction_norms(const GridKernel& f) {
  const int q = f.arity();
  require(q >= 1, ErrorCode::invalid_argument, "contraction norms need q >= 1");
  std::vector<ContractionTerm> terms;
  const bool odd = q % 2 == 1;
  const int special = odd ? (q + 1) / 2 : q / 2;
  const std::string special_label = (odd ? "star" : "arc") + std::to_string(special) + "-f";
  const GridKernel order_q =
      odd ? star_contraction(f, f, special) - f : arc_contraction(f, f, special) - f;
  terms.push_back({special_label, norm2(order_q)});
  for (int r = 1; r <= q - 1; ++r) {
    if (!odd && r == special) continue;
    terms.push_back({"arc" + std::to_string(r), norm2(arc_contraction(f, f, r))});
  }
  for (int r = 1; r <= q; ++r) {
    if (odd && r == special) continue;
    terms.push_back({"star" + std::to_string(r), norm2(star_contraction(f, f, r))});
  }
  return terms;
}

IdentityReport fourth_moment_identity(const GridKernel& f, double tol) {
  require_mirror_symmetric(f, "fourth moment identity");
  IdentityReport r;
  r.q = f.arity();
  r.lambda = norm2(f);
  require(r.lambda > 0.0, ErrorCode::invalid_argument, "fourth moment identity needs a non-zero kernel");
  const double m4 = real_moment(moment_product(f, 4, Measure::poisson), "fourth moment identity");
  const double m3 = real_moment(moment_product(f, 3, Measure::poisson), "fourth moment identity");
  r.lhs = m4 - 2.0 * m3 + r.lambda;
  r.terms = contraction_norms(f);
  r.rhs = 2.0 * r.lambda * r.lambda;
  for (const auto& t : r.terms) r.rhs += t.value;
  r.delta = std::abs(r.lhs - r.rhs);
  r.tolerance = tol;
  r.holds = r.delta <= tol * std::max(1.0, std::abs(r.lhs));
  return r;
}

IndicatorReport indicator_characterization(const GridKernel& f, int max_m, double tol) {
  require(f.arity() == 1, ErrorCode::domain, "indicator characterization is for q = 1");
  require(max_m >= 2, ErrorCode::invalid_argument, "indicator characterization needs max_m >= 2");
  for (const auto& v : f.values())
    require(v.imag() == 0.0, ErrorCode::invalid_argument, "indicator characterization needs a real kernel");
  IndicatorReport r;
  r.lambda = norm2(f);
  require(r.lambda > 0.0, ErrorCode::invalid_argument, "indicator characterization needs a non-zero kernel");
  r.is_indicator = std::all_of(f.values().begin(), f.values().end(), [](const Complex& v) {
    return std::abs(v.real()) <= 1e-12 || std::abs(v.real() - 1.0) <= 1e-12;
  });
  r.moments_match = true;
  for (int m = 2; m <= max_m; ++m) {
    MomentComparison c;
    c.m = m;
    c.value = real_moment(moment_diagram(f, m, Measure::poisson), "indicator characterization");
    c.oracle = free_poisson_moment(r.lambda, m);
    c.delta = c.value - c.oracle;
    c.match = close(c.value, c.oracle, tol);
    r.moments_match = r.moments_match && c.match;
    r.moments.push_back(c);
  }
  r.consistent = r.is_indicator == r.moments_match;
  return r;
}

ConvergenceSeries convergence_experiment(const FamilySpec& family, int steps, int M, double tol) {
  require(steps >= 1, ErrorCode::invalid_argument, "convergence experiment needs steps >= 1");
  require(M >= 2, ErrorCode::invalid_argument, "convergence experiment needs M >= 2");
  ConvergenceSeries s;
  s.family = family_name(family.kind);
  s.q = family.q;
  s.M = M;
  s.tolerance = tol;
  for (int n = 1; n <= steps; ++n) {
    const GridKernel f = family_member(family, n);
    require_mirror_symmetric(f, "convergence experiment");
    check_moment_order(f, std::max(M, 4), "convergence experiment");
    ConvergenceStep step;
    step.n = n;
    step.lambda = norm2(f);
    require(step.lambda > 0.0, ErrorCode::invalid_argument, "convergence experiment: zero kernel in family");
    step.statistic = fourth_moment_statistic(f, Measure::poisson);
    step.target = 2.0 * step.lambda * step.lambda - step.lambda;
    step.statistic_gap = std::abs(step.statistic - step.target);
    for (int m = 2; m <= M; ++m) {
      const double value = real_moment(moment_diagram(f, m, Measure::poisson), "convergence experiment");
      step.moment_gap = std::max(step.moment_gap, std::abs(value - free_poisson_moment(step.lambda, m)));
    }
    step.contraction_norms = contraction_norms(f);
    step.parameters = family_parameters(family, n);
    s.steps.push_back(std::move(step));
  }
  s.final_statistic_gap = s.steps.back().statistic_gap;
  s.final_moment_gap = s.steps.back().moment_gap;
  s.final_within_tolerance = s.final_statistic_gap < tol && s.final_moment_gap < tol;
  return s;
}

TransferReport transfer_experiment(const GridKernel& f, int M, double tol) {
  require_mirror_symmetric(f, "transfer experiment");
  check_moment_order(f, M, "transfer experiment");
  TransferReport r;
  r.q = f.arity();
  r.lambda = norm2(f);
  require(r.lambda > 0.0, ErrorCode::invalid_argument, "transfer experiment needs a non-zero kernel");
  r.M = M;
  r.tolerance = tol;
  r.poisson_matches_oracle = true;
  r.wigner_matches_oracle = true;
  for (int m = 1; m <= M; ++m) {
    TransferRow row;
    row.m = m;
    row.poisson = moment_diagram(f, m, Measure::poisson);
    row.wigner = moment_diagram(f, m, Measure::wigner);
    row.poisson_oracle = free_poisson_moment(r.lambda, m);
    row.wigner_oracle = semicircular_moment(r.lambda, m);
    row.poisson_engine_delta = std::abs(row.poisson - moment_product(f, m, Measure::poisson));
    row.wigner_engine_delta = std::abs(row.wigner - moment_product(f, m, Measure::wigner));
    r.poisson_matches_oracle = r.poisson_matches_oracle && close(row.poisson, Complex{row.poisson_oracle}, tol);
    r.wigner_matches_oracle = r.wigner_matches_oracle && close(row.wigner, Complex{row.wigner_oracle}, tol);
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace fpchaos

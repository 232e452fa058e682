#include "bandmatch/transform.hpp"

#include <cmath>

namespace bandmatch {

namespace {

void require_eps(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0) || !std::isfinite(eps))
    throw Error("eps must lie in (0, 1)");
}

}  // namespace

double power_of_one_plus(double eps, int e) {
  return std::pow(1.0 + eps, static_cast<double>(e));
}

int floor_log_one_plus(double eps, double w) {
  require_eps(eps);
  if (!(w >= 1.0) || !std::isfinite(w)) throw Error("weight must be a finite value >= 1");
  int e = static_cast<int>(std::floor(std::log(w) / std::log1p(eps)));
  if (e < 0) e = 0;
  while (e > 0 && power_of_one_plus(eps, e) > w) --e;
  while (power_of_one_plus(eps, e + 1) <= w) ++e;
  return e;
}

long long unit_fraction_denominator(double eps) {
  require_eps(eps);
  long long d = static_cast<long long>(std::llround(1.0 / eps));
  if (d >= 1 && std::fabs(eps * static_cast<double>(d) - 1.0) <= 1e-9) return d;
  double down = 1.0 / std::ceil(1.0 / eps);
  double up = 1.0 / std::floor(1.0 / eps);
  throw Error("eps = " + std::to_string(eps) +
              " is not a unit fraction; nearest candidates are " + std::to_string(down) +
              " and " + std::to_string(up) + " (see snap_epsilon)");
}

double snap_epsilon(double eps) {
  require_eps(eps);
  // The small shrink keeps 1/eps values that are one ulp above an integer
  // (e.g. eps = 1/30) from being pushed to the next denominator.
  double d = std::ceil((1.0 / eps) * (1.0 - 1e-12));
  return 1.0 / d;
}

namespace {

void clamp_kernel_serial(std::vector<Edge>& edges, double threshold, double scale) {
  for (Edge& e : edges) {
    double w = e.weight < threshold ? 1.0 : e.weight * scale;
    e.weight = w < 1.0 ? 1.0 : w;
  }
}

void clamp_kernel_parallel(std::vector<Edge>& edges, double threshold, double scale) {
  const long long m = static_cast<long long>(edges.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < m; ++i) {
    Edge& e = edges[i];
    double w = e.weight < threshold ? 1.0 : e.weight * scale;
    e.weight = w < 1.0 ? 1.0 : w;
  }
}

}  // namespace

ClampResult clamp_rescale(const WeightedHypergraph& h, double eps, Execution exec) {
  require_eps(eps);
  ClampResult out{h, 1.0};
  if (h.edges.empty()) return out;

  const double w_max = h.max_weight();
  const double cap = static_cast<double>(h.n) / eps;
  if (w_max <= cap) return out;

  const double threshold = w_max * eps / static_cast<double>(h.n);
  const double scale = static_cast<double>(h.n) / (w_max * eps);
  out.scale = scale;
  if (exec == Execution::parallel)
    clamp_kernel_parallel(out.graph.edges, threshold, scale);
  else
    clamp_kernel_serial(out.graph.edges, threshold, scale);
  return out;
}

namespace {

void round_kernel_serial(const std::vector<Edge>& edges, double eps, std::vector<int>& exp) {
  for (std::size_t i = 0; i < edges.size(); ++i) exp[i] = floor_log_one_plus(eps, edges[i].weight);
}

void round_kernel_parallel(const std::vector<Edge>& edges, double eps, std::vector<int>& exp) {
  const long long m = static_cast<long long>(edges.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < m; ++i) exp[i] = floor_log_one_plus(eps, edges[i].weight);
}

}  // namespace

RoundedInstance round_to_powers(WeightedHypergraph h, double eps, Execution exec) {
  require_eps(eps);
  RoundedInstance r;
  r.eps = eps;
  r.exponents.resize(h.edges.size());
  if (exec == Execution::parallel)
    round_kernel_parallel(h.edges, eps, r.exponents);
  else
    round_kernel_serial(h.edges, eps, r.exponents);
  r.original_weights.reserve(h.edges.size());
  for (const Edge& e : h.edges) r.original_weights.push_back(e.weight);
  r.base = std::move(h);
  return r;
}

IntegerizedInstance integerize(const WeightedHypergraph& h, double eps) {
  const long long d = unit_fraction_denominator(eps);
  IntegerizedInstance out{h, d};
  for (Edge& e : out.graph.edges) {
    if (e.weight < 1.0) throw Error("integerize requires weights >= 1");
    e.weight = std::floor(e.weight * static_cast<double>(d));
  }
  return out;
}

}  // namespace bandmatch

#pragma once

// Globally adaptive Gauss-Legendre quadrature.
//
// Every panel is integrated with a 15-point and a 30-point Gauss-Legendre
// rule; the 30-point value is kept and |G30 - G15| is the panel's error
// estimate. The panel with the largest estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |value|) or the panel budget runs out.

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace lgt::quad {

struct Options {
  double abs_tol = 1e-300;
  double rel_tol = 1e-10;
  int initial_panels = 1;
  int max_panels = 20000;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;

  double rel_error() const { return value != 0.0 ? abs_error / std::fabs(value) : abs_error; }
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Rule gauss_legendre_rule(int n);

const Rule& rule15();
const Rule& rule30();

namespace detail {

template <class F>
double apply_rule(const Rule& rule, F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel make_panel(F& f, double a, double b) {
  const double coarse = apply_rule(rule15(), f, a, b);
  const double fine = apply_rule(rule30(), f, a, b);
  return {a, b, fine, std::fabs(fine - coarse)};
}

}  // namespace detail

template <class F>
Result integrate(F&& f, double a, double b, const Options& opts = {}) {
  Result res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  const int evals_per_panel = static_cast<int>(rule15().nodes.size() + rule30().nodes.size());
  std::priority_queue<detail::Panel> heap;
  const int n0 = std::max(1, opts.initial_panels);
  double value = 0.0;
  double error = 0.0;
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
    auto panel = detail::make_panel(f, lo, hi);
    value += panel.value;
    error += panel.error;
    heap.push(panel);
  }
  int panels = n0;
  res.evaluations = n0 * evals_per_panel;
  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::fabs(value)); };
  while (error > tolerance() && panels < opts.max_panels) {
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::make_panel(f, worst.a, mid);
    auto right = detail::make_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
    res.evaluations += 2 * evals_per_panel;
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  res.value = value;
  res.abs_error = error;
  res.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(value));
  return res;
}

}  // namespace lgt::quad

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "multlag/error.hpp"

namespace multlag {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 60;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1) {
      fail(ErrorCode::InvalidArgument, "quadrature tolerances must be positive and max_subdivisions >= 1");
    }
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule make_gauss_legendre_rule(int n);

/// The 15-point rule used by integrate_adaptive, built once.
const GaussLegendreRule& gauss_legendre_15();

template <class F>
double gauss_legendre_panel(F& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

/**
 * Globally adaptive 15-point Gauss-Legendre quadrature with bisection.
 *
 * Each panel is compared against the sum over its two halves; the panel with
 * the largest discrepancy is bisected until the summed discrepancy meets
 * max(abs_tol, rel_tol * |I|) or max_subdivisions bisections were spent.
 */
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  const GaussLegendreRule& rule = gauss_legendre_15();

  struct Panel {
    double a, b, left, right, error;
  };
  auto make_panel = [&](double lo, double hi, double coarse) {
    const double mid = 0.5 * (lo + hi);
    const double left = gauss_legendre_panel(f, lo, mid, rule);
    const double right = gauss_legendre_panel(f, mid, hi, rule);
    return Panel{lo, hi, left, right, std::fabs(coarse - (left + right))};
  };
  auto by_error = [](const Panel& p, const Panel& q) { return p.error < q.error; };

  std::vector<Panel> heap;
  heap.push_back(make_panel(a, b, gauss_legendre_panel(f, a, b, rule)));

  auto totals = [&heap]() {
    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : heap) {
      value += p.left + p.right;
      error += p.error;
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::fabs(value)) &&
         result.subdivisions < spec.max_subdivisions) {
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(make_panel(worst.a, mid, worst.left));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(make_panel(mid, worst.b, worst.right));
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++result.subdivisions;
    std::tie(value, error) = totals();
  }
  result.value = value;
  result.error_estimate = error;
  result.converged = error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
  return result;
}

}  // namespace multlag

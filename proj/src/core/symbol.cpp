// Copyright 2026 The schatten authors
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

#include "core/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schatten {

namespace {

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// Derivative of sum c[k] x^k via Horner on falling-factorial coefficients.
double poly_derivative(const std::vector<double>& c, int order, double x) {
  const int degree = static_cast<int>(c.size()) - 1;
  if (order > degree) return 0.0;
  double acc = 0.0;
  for (int i = degree; i >= order; --i) {
    double falling = 1.0;
    for (int r = 0; r < order; ++r) falling *= static_cast<double>(i - r);
    acc = acc * x + c[static_cast<size_t>(i)] * falling;
  }
  return acc;
}

}  // namespace

Symbol Symbol::abs_pow(double p) {
  if (!(p > 0) || !std::isfinite(p))
    throw std::invalid_argument("abs_pow: exponent must be a finite positive real");
  const int max_order = p >= 2 ? 2 : (p > 1 ? 1 : 0);
  auto eval = [p](int order, double x) -> double {
    const double ax = std::abs(x);
    switch (order) {
      case 0:
        return std::pow(ax, p);
      case 1:
        if (x == 0.0) return 0.0;
        return p * std::pow(ax, p - 1) * sgn(x);
      default:
        if (x == 0.0) return p == 2 ? 2.0 : 0.0;
        return p * (p - 1) * std::pow(ax, p - 2);
    }
  };
  return Symbol(max_order, eval);
}

Symbol Symbol::polynomial(std::vector<double> coeffs) {
  for (double c : coeffs)
    if (!std::isfinite(c))
      throw std::invalid_argument("polynomial: coefficients must be finite");
  auto eval = [coeffs = std::move(coeffs)](int order, double x) -> double {
    return poly_derivative(coeffs, order, x);
  };
  return Symbol(std::numeric_limits<int>::max(), eval);
}

double Symbol::derivative(int order, double x) const {
  if (order < 0) throw std::invalid_argument("derivative: order must be >= 0");
  if (order > max_order_)
    throw std::domain_error("derivative: order " + std::to_string(order) +
                            " exceeds the symbol's max_order " +
                            std::to_string(max_order_));
  return eval_(order, x);
}

namespace {

// D^j with respect to the trailing argument of f^[m](prefix..., lambda).
//
// Writing g(l) = f^[m-1](prefix..., l), a = prefix.back() and
// F(l) = (g(a) - g(l)) / (a - l), repeated differentiation of
// (a - l) F(l) = g(a) - g(l) gives
//     F^(j)(l) = (j F^(j-1)(l) - g^(j)(l)) / (a - l),        l != a,
// and expanding g around a gives the confluent value
//     F^(j)(a) = g^(j+1)(a) / (j + 1).
// Together these evaluate the recursive definition (derivative branch at
// coincident trailing nodes) without reordering the nodes.
double dd_rec(const Symbol& f, std::span<const double> prefix, double lambda,
              int deriv) {
  if (prefix.empty()) return f.derivative(deriv, lambda);
  const double a = prefix.back();
  const auto rest = prefix.first(prefix.size() - 1);
  if (a == lambda) return dd_rec(f, rest, a, deriv + 1) / (deriv + 1);
  if (deriv == 0)
    return (dd_rec(f, rest, a, 0) - dd_rec(f, rest, lambda, 0)) / (a - lambda);
  return (deriv * dd_rec(f, prefix, lambda, deriv - 1) -
          dd_rec(f, rest, lambda, deriv)) /
         (a - lambda);
}

// Nodes within 1e-12 * (1 + max|node|) of each other collapse to their
// cluster mean; positions are preserved.
std::vector<double> snap_nodes(std::span<const double> nodes) {
  double scale = 0.0;
  for (double x : nodes) {
    if (!std::isfinite(x))
      throw std::invalid_argument("divided_difference: nodes must be finite");
    scale = std::max(scale, std::abs(x));
  }
  const double tol = 1e-12 * (1.0 + scale);

  std::vector<size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return nodes[i] < nodes[j]; });

  std::vector<double> snapped(nodes.size());
  size_t start = 0;
  while (start < order.size()) {
    size_t stop = start + 1;
    while (stop < order.size() &&
           nodes[order[stop]] - nodes[order[stop - 1]] <= tol)
      ++stop;
    double mean = 0.0;
    for (size_t k = start; k < stop; ++k) mean += nodes[order[k]];
    mean /= static_cast<double>(stop - start);
    for (size_t k = start; k < stop; ++k) snapped[order[k]] = mean;
    start = stop;
  }
  return snapped;
}

}  // namespace

double divided_difference(const Symbol& f, std::span<const double> nodes) {
  if (nodes.empty())
    throw std::invalid_argument("divided_difference: at least one node required");
  const std::vector<double> snapped = snap_nodes(nodes);
  return dd_rec(f, std::span<const double>(snapped).first(snapped.size() - 1),
                snapped.back(), 0);
}

}  // namespace schatten

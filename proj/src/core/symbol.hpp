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

#ifndef SCHATTEN_CORE_SYMBOL_HPP_
#define SCHATTEN_CORE_SYMBOL_HPP_

#include <functional>
#include <span>
#include <vector>

namespace schatten {

/// Scalar function with derivative oracles up to a declared order.
class Symbol {
 public:
  /// f(x) = |x|^p for p > 0.  Conventions at the origin: f'(0) = 0 for
  /// p > 1, f''(0) = 2 for p = 2 and 0 for p > 2.  max_order is 2 for
  /// p >= 2, 1 for 1 < p < 2, and 0 otherwise.
  static Symbol abs_pow(double p);

  /// Polynomial sum coeffs[k] x^k; derivatives of every order (zero beyond
  /// the degree).
  static Symbol polynomial(std::vector<double> coeffs);

  double value(double x) const { return eval_(0, x); }

  /// order-th derivative at x; order 0 is the value.  Throws
  /// std::domain_error when the order exceeds max_order.
  double derivative(int order, double x) const;

  int max_order() const { return max_order_; }

 private:
  Symbol(int max_order, std::function<double(int, double)> eval)
      : max_order_(max_order), eval_(std::move(eval)) {}

  int max_order_;
  std::function<double(int, double)> eval_;
};

/// Divided difference f^[k] at the k+1 given nodes, via the recursion with
/// the derivative branch at coincident trailing nodes.  Nodes closer than
/// 1e-12 * (1 + max|node|) are snapped to their cluster mean first, so the
/// two recursion branches never mix under cancellation.  Symmetric under
/// node permutation (a tested property, not an assumption of the recursion).
double divided_difference(const Symbol& f, std::span<const double> nodes);

}  // namespace schatten

#endif  // SCHATTEN_CORE_SYMBOL_HPP_

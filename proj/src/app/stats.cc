// Copyright 2026 The pcft Authors.
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

#include "pcft/app/stats.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pcft::app {

namespace {

double nearest_rank(const std::vector<double>& sorted, double pct) {
  size_t rank = static_cast<size_t>(std::ceil(pct / 100.0 * sorted.size()));
  return sorted[std::clamp<size_t>(rank, 1, sorted.size()) - 1];
}

double r_squared(const Eigen::VectorXd& y, const Eigen::VectorXd& fitted) {
  double mean = y.mean();
  double ss_tot = (y.array() - mean).square().sum();
  double ss_res = (y - fitted).squaredNorm();
  // A single distinct y: perfect unless the fit misses it beyond rounding.
  if (ss_tot == 0) return ss_res <= 1e-18 * y.squaredNorm() ? 1.0 : 0.0;
  return 1.0 - ss_res / ss_tot;
}

Fit least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
  Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
  return Fit{std::vector<double>(c.data(), c.data() + c.size()), r_squared(y, a * c)};
}

}  // namespace

Summary summarize(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::sort(samples.begin(), samples.end());
  double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / samples.size();
  return Summary{mean, nearest_rank(samples, 50), nearest_rank(samples, 95)};
}

Fit fit_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("bad fit input");
  Eigen::MatrixXd a(x.size(), 1);
  for (size_t i = 0; i < x.size(); ++i) a(i, 0) = x[i];
  return least_squares(a, Eigen::Map<const Eigen::VectorXd>(y.data(), y.size()));
}

Fit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw std::invalid_argument("bad fit input");
  Eigen::MatrixXd a(x.size(), 3);
  for (size_t i = 0; i < x.size(); ++i) {
    a(i, 0) = 1;
    a(i, 1) = x[i];
    a(i, 2) = x[i] * x[i];
  }
  return least_squares(a, Eigen::Map<const Eigen::VectorXd>(y.data(), y.size()));
}

}  // namespace pcft::app

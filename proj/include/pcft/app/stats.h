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

#ifndef PCFT_APP_STATS_H_
#define PCFT_APP_STATS_H_

#include <vector>

namespace pcft::app {

struct Summary {
  double mean;
  double p50;
  double p95;
};

// Nearest-rank percentiles. `samples` must be non-empty.
Summary summarize(std::vector<double> samples);

struct Fit {
  std::vector<double> coefficients;  // lowest degree first
  double r_squared;
};

// y = b * x, least squares. R^2 = 1 - SS_res / SS_tot with SS_tot taken
// about the mean of y.
Fit fit_through_origin(const std::vector<double>& x, const std::vector<double>& y);

// y = c0 + c1 x + c2 x^2, least squares.
Fit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pcft::app

#endif  // PCFT_APP_STATS_H_

// Copyright 2026 The hccolour Authors
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

#include "hccolour/numerics.h"

#include <cmath>
#include <string>

#include "hccolour/error.h"

namespace hccolour {

double LambertW(double x, const Tolerance& tol) {
  if (!(x >= 0.0)) {
    Fail(ErrorKind::kDomain, "LambertW: argument must be >= 0, got " +
                                 std::to_string(x));
  }
  if (tol.abs_tol <= 0.0 || tol.max_iter < 1) {
    Fail(ErrorKind::kInput, "LambertW: invalid tolerance");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w = std::log1p(x);
  const double target = tol.abs_tol * (1.0 + x);
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double fp = ew * (w + 1.0);
    const double step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
    const double next = w - step;
    const bool settled = std::abs(step) <= 4.0 * 2.220446049250313e-16 * std::abs(next);
    w = next < 0.0 ? 0.5 * w : next;
    if (settled) {
      if (std::abs(w * std::exp(w) - x) <= target) return w;
      break;
    }
  }
  // Settled but the residual check failed, or out of iterations; one
  // Newton polish before giving up.
  const double ew = std::exp(w);
  w -= (w * ew - x) / (ew * (w + 1.0));
  if (std::abs(w * std::exp(w) - x) <= target) return w;
  Fail(ErrorKind::kNumeric, "LambertW: no convergence for x=" + std::to_string(x));
}

double CompensatedTotal(std::span<const double> values) {
  CompensatedSum sum;
  for (double v : values) sum.Add(v);
  return sum.value();
}

}  // namespace hccolour

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

#ifndef HCCOLOUR_NUMERICS_H_
#define HCCOLOUR_NUMERICS_H_

#include <span>

namespace hccolour {

struct Tolerance {
  double abs_tol = 1e-12;
  int max_iter = 100;
};

// Principal branch of the Lambert W function on x >= 0, i.e. the w >= 0
// with w * exp(w) = x. Halley iteration from log(1 + x); the result
// satisfies |w e^w - x| <= abs_tol * (1 + x).
//
// Throws ErrorKind::kDomain for x < 0 (or NaN) and ErrorKind::kNumeric if
// the iteration does not settle within max_iter steps.
double LambertW(double x, const Tolerance& tol = {});

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    Add(x);
    return *this;
  }
  void Merge(const CompensatedSum& other) {
    Add(other.sum_);
    Add(other.compensation_);
  }
  double value() const { return sum_ + compensation_; }

 private:
  static double abs(double x) { return x < 0 ? -x : x; }
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double CompensatedTotal(std::span<const double> values);

}  // namespace hccolour

#endif  // HCCOLOUR_NUMERICS_H_

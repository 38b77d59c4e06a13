// Copyright 2026 The tswr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSWR_TESTS_TEST_UTIL_HPP_
#define TSWR_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <random>

#include "tswr/model.hpp"

namespace tswr::testing {

// Seeded generators for property-style tests.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  // Log-uniform over [10^lo_exp, 10^hi_exp].
  double log_uniform(double lo_exp, double hi_exp) {
    return std::pow(10.0, uniform(lo_exp, hi_exp));
  }
  ChannelState channel() { return {log_uniform(-1, 1), log_uniform(-1, 1)}; }
  SystemConfig config() {
    SystemConfig cfg;
    cfg.p_tot = log_uniform(-1, 1);
    cfg.eta = uniform(0.3, 1.0);
    return cfg;
  }
  PolicyPoint policy() { return {uniform(0.001, 0.999), uniform(0.001, 0.999)}; }

 private:
  std::mt19937_64 rng_;
};

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace tswr::testing

#endif  // TSWR_TESTS_TEST_UTIL_HPP_

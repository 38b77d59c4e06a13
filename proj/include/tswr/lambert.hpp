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

#ifndef TSWR_LAMBERT_HPP_
#define TSWR_LAMBERT_HPP_

namespace tswr {

/// A solved instance of w * e^w = argument on the principal branch, together
/// with the achieved residual |value * e^value - argument|.
struct WEvaluation {
  double argument;
  double value;
  double residual;
};

/// Principal-branch Lambert W: the unique w >= -1 with w * e^w = x.
/// Defined for x >= -1/e; throws std::domain_error below the branch point
/// and std::runtime_error if the iteration fails to converge.
double lambert_w0(double x);

/// lambert_w0 plus its certified residual.
WEvaluation lambert_w0_eval(double x);

}  // namespace tswr

#endif  // TSWR_LAMBERT_HPP_

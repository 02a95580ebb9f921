// Copyright 2026 The FairSDP Authors.
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

#ifndef FAIRSDP_PLOT_HPP_
#define FAIRSDP_PLOT_HPP_

#include <string>
#include <vector>

#include "fairsdp/sweep.hpp"

namespace fairsdp {

// Renders sweep results as a self-contained SVG: score versus lambda,
// one solid (temporal) and one dashed (specificity) polyline per mu
// value, scores averaged over seeds at each grid point.  The output is a
// pure function of the input, byte for byte, so repeated runs compare
// equal.
std::string render_sweep_svg(const std::vector<SweepPoint>& points,
                             SweepMetric metric);

}  // namespace fairsdp

#endif  // FAIRSDP_PLOT_HPP_

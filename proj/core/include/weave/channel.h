// Copyright 2026 The weave Authors
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

#ifndef WEAVE_CHANNEL_H
#define WEAVE_CHANNEL_H

#include <vector>

#include "weave/density_state.h"

namespace weave {

/// A CPTP map given by Kraus operators acting on an ordered list of subsystems. The
/// operators act on the joint space of `targets` with targets[0] most significant.
class KrausChannel {
 public:
  /// Throws ValidationError unless sum K^dag K = I within tol::kKrausCompleteness.
  KrausChannel(std::vector<Matrix> kraus, IndexSet targets);

  static KrausChannel unitary(Matrix u, IndexSet targets);

  const std::vector<Matrix>& kraus() const { return kraus_; }
  const IndexSet& targets() const { return targets_; }
  Eigen::Index dim() const { return kraus_.front().cols(); }

 private:
  std::vector<Matrix> kraus_;
  IndexSet targets_;
};

/// sum_i K_i rho K_i^dag with K_i embedded on the channel's targets. A pure input under a
/// single Kraus operator stays pure; everything else comes back dense.
DensityState apply_channel(const DensityState& s, const KrausChannel& channel,
                           const Limits& limits = {});

/// Common gates and channels.
namespace gates {

/// Control is the first target, flip target the second.
KrausChannel cnot(int control, int target);
/// rho -> I/d on one qudit.
KrausChannel fully_depolarizing(int dim, int target);
KrausChannel identity(int dim, int target);

}  // namespace gates
}  // namespace weave

#endif  // WEAVE_CHANNEL_H

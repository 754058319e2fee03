// Copyright 2026 The ragged Authors
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

#pragma once

#include <cstdint>
#include <vector>

#include "ragged/layout.hpp"

namespace ragged {

// Kernels take every input as an argument and touch no global state.
// Columnar versions read flat buffers (OpenMP-parallel when available); the
// *_rowwise versions iterate element by element through the generic access
// API and serve as the reference.

/// Sum of every element of a list-offset array over float64. Throws
/// LayoutError for any other layout.
double path_length(const ArrayNode& lists);
double path_length_rowwise(const NodePtr& lists);

/// Record of muon columns, checked on construction:
///   nMuon: int64, Muon_charge: list<int64>,
///   Muon_pt, Muon_eta, Muon_phi: list<float64>
/// with every event's four lists of length nMuon.
class EventBatch {
 public:
  /// Throws ValidationError naming the missing field or violated rule.
  explicit EventBatch(NodePtr node);

  const NodePtr& node() const noexcept { return node_; }
  std::int64_t size() const noexcept { return node_->length(); }

 private:
  NodePtr node_;
};

inline constexpr double kMassCut = 70.0;

/// Selected dimuon invariant masses, a primitive float64 node.
class MassSpectrum {
 public:
  explicit MassSpectrum(std::vector<double> masses);

  const NodePtr& node() const noexcept { return node_; }
  std::int64_t size() const noexcept { return node_->length(); }
  double operator[](std::int64_t i) const { return node_->as_primitive().value<double>(i); }
  std::vector<double> values() const;

 private:
  NodePtr node_;
};

/// Keeps sqrt(2 pt1 pt2 (cosh(eta1 - eta2) - cos(phi1 - phi2))) for events
/// with exactly two opposite-charge muons and a mass strictly above kMassCut,
/// in event order.
MassSpectrum invariant_mass(const EventBatch& events);
MassSpectrum invariant_mass_rowwise(const EventBatch& events);

/// Deterministic synthetic events: 1-3 muons (2 most likely), pt in (0, 120],
/// eta in [-2.4, 2.4], phi in [-pi, pi), charge +-1.
EventBatch gen_events(std::int64_t n, std::uint64_t seed);

}  // namespace ragged

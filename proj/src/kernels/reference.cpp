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

// Serial reference kernels. They walk the arrays one element at a time
// through the generic access API (get_list, get_record, element_at) and are
// kept deliberately naive: tests compare the columnar kernels against them.

#include <cmath>

#include "ragged/kernels.hpp"

namespace ragged {

namespace {

double number(const Element& e) { return Value(std::get<Scalar>(e)).as_double(); }

std::int64_t integer(const Element& e) { return std::get<std::int64_t>(std::get<Scalar>(e)); }

}  // namespace

double path_length_rowwise(const NodePtr& lists) {
  double total = 0.0;
  for (std::int64_t i = 0; i < lists->length(); ++i) {
    auto inner = get_list(*lists, i);
    for (std::int64_t j = 0; j < inner->length(); ++j) {
      total += number(element_at(inner, j));
    }
  }
  return total;
}

MassSpectrum invariant_mass_rowwise(const EventBatch& events) {
  std::vector<double> layout;
  for (std::int64_t i = 0; i < events.size(); ++i) {
    RecordView event = get_record(events.node(), i);
    if (integer(event["nMuon"]) != 2) continue;
    auto charge = std::get<NodePtr>(event["Muon_charge"]);
    if (integer(element_at(charge, 0)) == integer(element_at(charge, 1))) continue;
    auto pt = std::get<NodePtr>(event["Muon_pt"]);
    auto eta = std::get<NodePtr>(event["Muon_eta"]);
    auto phi = std::get<NodePtr>(event["Muon_phi"]);
    double result = std::sqrt(2 * number(element_at(pt, 0)) * number(element_at(pt, 1)) *
                              (std::cosh(number(element_at(eta, 0)) - number(element_at(eta, 1))) -
                               std::cos(number(element_at(phi, 0)) - number(element_at(phi, 1)))));
    if (result > kMassCut) layout.push_back(result);
  }
  return MassSpectrum(std::move(layout));
}

}  // namespace ragged

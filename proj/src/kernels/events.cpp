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

#include <cmath>
#include <numbers>
#include <random>

#include "ragged/kernels.hpp"

namespace ragged {

namespace {

const NodePtr& require_field(const RecordArray& r, const char* name) {
  auto idx = r.field_index(name);
  if (!idx) throw ValidationError({"$", "missing field", name});
  return r.contents()[*idx];
}

void require_primitive(const NodePtr& node, DType dtype, const char* name) {
  const auto* p = node->get_if<PrimitiveArray>();
  if (!p || p->dtype() != dtype) {
    throw ValidationError(
        {std::string("$.") + name, "field type", "expected " + std::string(dtype_name(dtype))});
  }
}

const ListOffsetArray& require_list(const NodePtr& node, DType dtype, const char* name) {
  const auto* l = node->get_if<ListOffsetArray>();
  if (!l) {
    throw ValidationError({std::string("$.") + name, "field type",
                           "expected list of " + std::string(dtype_name(dtype))});
  }
  require_primitive(l->content(), dtype, name);
  return *l;
}

}  // namespace

EventBatch::EventBatch(NodePtr node) : node_(std::move(node)) {
  ensure_valid(*node_);
  if (node_->kind() != NodeKind::Record) {
    throw ValidationError(
        {"$", "event batch must be a record", "got " + std::string(kind_name(node_->kind()))});
  }
  const auto& r = node_->as_record();
  const auto& n_muon = require_field(r, "nMuon");
  require_primitive(n_muon, DType::Int64, "nMuon");
  const char* list_names[] = {"Muon_charge", "Muon_pt", "Muon_eta", "Muon_phi"};
  const DType list_types[] = {DType::Int64, DType::Float64, DType::Float64, DType::Float64};
  const ListOffsetArray* lists[4];
  for (int f = 0; f < 4; ++f) {
    lists[f] = &require_list(require_field(r, list_names[f]), list_types[f], list_names[f]);
  }
  const auto& counts = n_muon->as_primitive();
  for (std::int64_t i = 0; i < r.length(); ++i) {
    auto expected = counts.value<std::int64_t>(i);
    for (int f = 0; f < 4; ++f) {
      auto len = lists[f]->offset(i + 1) - lists[f]->offset(i);
      if (len != expected) {
        throw ValidationError({std::string("$.") + list_names[f], "muon list length",
                               "event " + std::to_string(i) + " has " + std::to_string(len) +
                                   " entries but nMuon = " + std::to_string(expected)});
      }
    }
  }
}

MassSpectrum::MassSpectrum(std::vector<double> masses) : node_(make_primitive(std::move(masses))) {}

std::vector<double> MassSpectrum::values() const {
  std::vector<double> out(static_cast<std::size_t>(size()));
  for (std::int64_t i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
  return out;
}

EventBatch gen_events(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> multiplicity({1.0, 2.0, 1.0});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> eta(-2.4, 2.4);
  std::uniform_real_distribution<double> phi(-std::numbers::pi, std::numbers::pi);
  std::bernoulli_distribution positive(0.5);

  std::vector<std::int64_t> counts, offsets{0}, charge;
  std::vector<double> pts, etas, phis;
  counts.reserve(static_cast<std::size_t>(n));
  offsets.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i < n; ++i) {
    int k = multiplicity(rng) + 1;
    counts.push_back(k);
    offsets.push_back(offsets.back() + k);
    for (int m = 0; m < k; ++m) {
      charge.push_back(positive(rng) ? 1 : -1);
      pts.push_back(120.0 * (1.0 - unit(rng)));
      etas.push_back(eta(rng));
      phis.push_back(phi(rng));
    }
  }

  // The four muon lists share one offsets buffer.
  Buffer shared = Buffer::from_vector(std::move(offsets));
  auto list = [&](NodePtr content) {
    return std::make_shared<const ArrayNode>(ListOffsetArray(shared, std::move(content), n));
  };
  return EventBatch(make_record(
      {
          {"nMuon", make_primitive(std::move(counts))},
          {"Muon_charge", list(make_primitive(std::move(charge)))},
          {"Muon_pt", list(make_primitive(std::move(pts)))},
          {"Muon_eta", list(make_primitive(std::move(etas)))},
          {"Muon_phi", list(make_primitive(std::move(phis)))},
      },
      n));
}

}  // namespace ragged

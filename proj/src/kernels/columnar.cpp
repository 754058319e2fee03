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

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ragged/kernels.hpp"

namespace ragged {

namespace {

struct ListColumn {
  const ListOffsetArray* list;
  const PrimitiveArray* values;

  explicit ListColumn(const NodePtr& node)
      : list(&node->as_list_offset()), values(&list->content()->as_primitive()) {}

  template <class T>
  T at(std::int64_t event, std::int64_t k) const {
    return values->value<T>(list->offset(event) + k);
  }
};

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

double path_length(const ArrayNode& lists) {
  const auto& l = lists.as_list_offset();
  const auto& content = l.content()->as_primitive();
  if (content.dtype() != DType::Float64) {
    throw LayoutError("path_length needs float64 content, got " +
                      std::string(dtype_name(content.dtype())));
  }
  std::int64_t n = l.length();
  std::int64_t begin = n > 0 ? l.offset(0) : 0;
  std::int64_t end = n > 0 ? l.offset(n) : 0;

  double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t i = begin; i < end; ++i) {
    total += content.value<double>(i);
  }
  return total;
}

MassSpectrum invariant_mass(const EventBatch& events) {
  const auto& r = events.node()->as_record();
  const auto& n_muon = get_field(*events.node(), "nMuon")->as_primitive();
  const ListColumn charge(get_field(*events.node(), "Muon_charge"));
  const ListColumn pt(get_field(*events.node(), "Muon_pt"));
  const ListColumn eta(get_field(*events.node(), "Muon_eta"));
  const ListColumn phi(get_field(*events.node(), "Muon_phi"));
  const std::int64_t n = r.length();

  // Contiguous partitions per thread, concatenated in partition order so the
  // output follows event order.
  std::vector<std::vector<double>> parts(static_cast<std::size_t>(thread_count()));

#pragma omp parallel
  {
#ifdef _OPENMP
    const std::int64_t t = omp_get_thread_num();
    const std::int64_t nt = omp_get_num_threads();
#else
    const std::int64_t t = 0;
    const std::int64_t nt = 1;
#endif
    const std::int64_t lo = n * t / nt;
    const std::int64_t hi = n * (t + 1) / nt;
    auto& out = parts[static_cast<std::size_t>(t)];
    for (std::int64_t i = lo; i < hi; ++i) {
      if (n_muon.value<std::int64_t>(i) != 2) continue;
      if (charge.at<std::int64_t>(i, 0) == charge.at<std::int64_t>(i, 1)) continue;
      const double pt1 = pt.at<double>(i, 0), pt2 = pt.at<double>(i, 1);
      const double eta1 = eta.at<double>(i, 0), eta2 = eta.at<double>(i, 1);
      const double phi1 = phi.at<double>(i, 0), phi2 = phi.at<double>(i, 1);
      const double mass =
          std::sqrt(2 * pt1 * pt2 * (std::cosh(eta1 - eta2) - std::cos(phi1 - phi2)));
      if (mass > kMassCut) out.push_back(mass);
    }
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<double> masses;
  masses.reserve(total);
  for (const auto& p : parts) masses.insert(masses.end(), p.begin(), p.end());
  return MassSpectrum(std::move(masses));
}

}  // namespace ragged

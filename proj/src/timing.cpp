/*
 * Copyright 2026 The cram-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cramsim/timing.hpp"

namespace cramsim {

const char* to_string(OpKind kind) noexcept {
  switch (kind) {
    case OpKind::full_axis_projection: return "full_axis_projection";
    case OpKind::region_projection: return "region_projection";
    case OpKind::controller_object: return "controller_object";
    case OpKind::controller_fixed: return "controller_fixed";
  }
  return "unknown";
}

void CycleTrace::add(OpKind kind, std::uint64_t count) {
  if (count == 0) return;
  entries_.push_back({kind, count});
}

void CycleTrace::append(const CycleTrace& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::uint64_t CycleTrace::total(OpKind kind) const noexcept {
  std::uint64_t n = 0;
  for (const auto& e : entries_)
    if (e.kind == kind) n += e.count;
  return n;
}

std::uint64_t minimal_cycles_imc(std::uint64_t n_objects) noexcept { return 8 * n_objects + 8; }

std::uint64_t minimal_cycles_total(std::uint64_t n_objects) noexcept { return 10 * n_objects + 12; }

std::uint64_t trace_cycles(const CycleTrace& trace, const CostTable& costs) noexcept {
  std::uint64_t cycles = 0;
  for (const auto& e : trace.entries()) cycles += e.count * costs[e.kind];
  return cycles;
}

std::uint64_t imc_cycles(const CycleTrace& trace, const CostTable& costs) noexcept {
  std::uint64_t cycles = 0;
  for (const auto& e : trace.entries()) {
    if (e.kind == OpKind::full_axis_projection || e.kind == OpKind::region_projection)
      cycles += e.count * costs[e.kind];
  }
  return cycles;
}

std::uint64_t diffusion_op_count(std::uint64_t pulses, std::uint64_t substeps_per_pulse,
                                 std::uint64_t cells) noexcept {
  return pulses * substeps_per_pulse * cells * kOpsPerCellSubstep;
}

}  // namespace cramsim

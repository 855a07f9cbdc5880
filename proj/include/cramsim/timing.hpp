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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cramsim {

enum class OpKind : std::uint8_t {
  full_axis_projection,
  region_projection,
  controller_object,
  controller_fixed,
};

inline constexpr std::size_t kOpKindCount = 4;

const char* to_string(OpKind kind) noexcept;

struct TraceEntry {
  OpKind kind;
  std::uint64_t count;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Ordered log of primitive array and controller operations.
class CycleTrace {
 public:
  /// Zero counts are dropped; every stored entry has count >= 1.
  void add(OpKind kind, std::uint64_t count = 1);
  void append(const CycleTrace& other);

  const std::vector<TraceEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t total(OpKind kind) const noexcept;

  friend bool operator==(const CycleTrace&, const CycleTrace&) = default;

 private:
  std::vector<TraceEntry> entries_;
};

/// Cycles charged per operation. The defaults make a minimal N-object
/// region proposal cost 8N+8 array cycles and 10N+12 with the controller.
struct CostTable {
  std::array<std::uint64_t, kOpKindCount> cycles{8, 8, 2, 4};

  std::uint64_t operator[](OpKind kind) const noexcept {
    return cycles[static_cast<std::size_t>(kind)];
  }
  std::uint64_t& operator[](OpKind kind) noexcept { return cycles[static_cast<std::size_t>(kind)]; }
};

std::uint64_t minimal_cycles_imc(std::uint64_t n_objects) noexcept;
std::uint64_t minimal_cycles_total(std::uint64_t n_objects) noexcept;

std::uint64_t trace_cycles(const CycleTrace& trace, const CostTable& costs = {}) noexcept;
/// Cycles spent in the array only (projection entries).
std::uint64_t imc_cycles(const CycleTrace& trace, const CostTable& costs = {}) noexcept;

/// Primitive operation totals for throughput reporting.
struct OpCount {
  std::uint64_t diffusion_ops = 0;   // 4 adds + 1 scale per cell per substep
  std::uint64_t projection_ops = 0;  // cell reads across all projections

  OpCount& operator+=(const OpCount& o) noexcept {
    diffusion_ops += o.diffusion_ops;
    projection_ops += o.projection_ops;
    return *this;
  }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

inline constexpr std::uint64_t kOpsPerCellSubstep = 5;

std::uint64_t diffusion_op_count(std::uint64_t pulses, std::uint64_t substeps_per_pulse,
                                 std::uint64_t cells) noexcept;

}  // namespace cramsim

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

#include <cstddef>
#include <cstdint>

#include "cramsim/grid.hpp"

namespace cramsim {

inline constexpr double kMaxCoupling = 0.25;  // explicit 4-neighbour stability bound

/// Knobs of image-restoration mode. The diffusion-enable pulse is modeled by
/// its width (substeps_per_pulse), amplitude (a linear conductance scale on
/// alpha) and count (pulses). alpha is dt/(R*C) for one substep.
struct DiffusionConfig {
  double alpha = 0.2;
  std::size_t substeps_per_pulse = 8;
  double amplitude = 1.0;
  std::size_t pulses = 1;
  double vth = 0.5;
  bool redigitize_between_pulses = true;

  double coupling() const noexcept { return alpha * amplitude; }
  /// Throws ConfigError when any field violates its range.
  void validate() const;
};

/// One forward-Euler step of the RC network. Every cell, ring included,
/// exchanges charge with its in-grid 4-neighbours; the outer edge is
/// reflecting so total charge is conserved. Double-buffered.
AnalogState diffuse_substep(const AnalogState& state, double coupling);

/// In-place variant writing into `scratch` and swapping.
void diffuse_substep_into(const AnalogState& state, double coupling, AnalogState& out);

/// Embed, then run `pulses` DE pulses. Between pulses (not after the last)
/// the interior is re-digitized at vth and the ring is cleared.
AnalogState apply_pulses(const BinaryFrame& frame, const DiffusionConfig& cfg, std::size_t ring = 1);

/// Inverter re-digitization: pixel = 1 iff voltage > vth. The ring is dropped.
BinaryFrame threshold_restore(const AnalogState& state, double vth);

BinaryFrame restore_image(const BinaryFrame& frame, const DiffusionConfig& cfg, std::size_t ring = 1);

bool blank_frame_detect(const BinaryFrame& frame, std::size_t max_ones = 0);

enum class ProbeLocation { center, corner };

struct ProbeResult {
  ProbeLocation location = ProbeLocation::center;
  std::uint64_t steps_to_threshold = 0;
};

inline constexpr std::uint64_t kDefaultProbeBudget = 1'000'000;

/// Writes a 4x4 blob of ones at the grid center (or the top-left corner,
/// against the dummy ring) and diffuses without re-digitization until every
/// blob cell is below vth. Throws GuardError if that never happens within
/// `max_substeps`.
ProbeResult probe_diffusion_speed(std::size_t grid_w, std::size_t grid_h, ProbeLocation location,
                                  const DiffusionConfig& cfg, std::size_t ring = 1,
                                  std::uint64_t max_substeps = kDefaultProbeBudget);

const char* to_string(ProbeLocation location) noexcept;

}  // namespace cramsim

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

#include "cramsim/diffusion.hpp"

#include <algorithm>
#include <string>

#include "cramsim/error.hpp"

namespace cramsim {
namespace {

void check_coupling(double coupling) {
  if (!(coupling > 0.0 && coupling <= kMaxCoupling))
    throw ConfigError("diffusion coupling " + std::to_string(coupling) + " outside (0, 0.25]");
}

}  // namespace

void DiffusionConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= kMaxCoupling))
    throw ConfigError("diffusion.alpha must be in (0, 0.25], got " + std::to_string(alpha));
  if (!(amplitude >= 0.0))
    throw ConfigError("diffusion.amplitude must be >= 0, got " + std::to_string(amplitude));
  if (coupling() > kMaxCoupling)
    throw ConfigError("diffusion.alpha * diffusion.amplitude exceeds the stability bound 0.25");
  if (substeps_per_pulse == 0) throw ConfigError("diffusion.substeps must be positive");
  if (pulses == 0) throw ConfigError("diffusion.pulses must be positive");
  if (!(vth > 0.0 && vth < 1.0))
    throw ConfigError("diffusion.vth must be in (0, 1), got " + std::to_string(vth));
}

void diffuse_substep_into(const AnalogState& state, double coupling, AnalogState& out) {
  check_coupling(coupling);
  if (out.width() != state.width() || out.height() != state.height() || out.ring() != state.ring())
    out = AnalogState(state.width(), state.height(), state.ring());
  const std::size_t pw = state.padded_width();
  const std::size_t ph = state.padded_height();
  const double* in = state.volts().data();
  double* dst = out.volts().data();

  for (std::size_t r = 0; r < ph; ++r) {
    const double* row = in + r * pw;
    const double* up = r > 0 ? row - pw : nullptr;
    const double* down = r + 1 < ph ? row + pw : nullptr;
    double* o = dst + r * pw;
    for (std::size_t c = 0; c < pw; ++c) {
      const double v = row[c];
      double flux = 0.0;
      if (up) flux += up[c] - v;
      if (down) flux += down[c] - v;
      if (c > 0) flux += row[c - 1] - v;
      if (c + 1 < pw) flux += row[c + 1] - v;
      o[c] = v + coupling * flux;
    }
  }
}

AnalogState diffuse_substep(const AnalogState& state, double coupling) {
  AnalogState out(state.width(), state.height(), state.ring());
  diffuse_substep_into(state, coupling, out);
  return out;
}

AnalogState apply_pulses(const BinaryFrame& frame, const DiffusionConfig& cfg, std::size_t ring) {
  cfg.validate();
  AnalogState state = embed(frame, ring);
  const double k = cfg.coupling();
  if (k == 0.0) return state;  // DE held at zero conductance: nothing moves
  AnalogState scratch(state.width(), state.height(), state.ring());
  for (std::size_t p = 0; p < cfg.pulses; ++p) {
    for (std::size_t s = 0; s < cfg.substeps_per_pulse; ++s) {
      diffuse_substep_into(state, k, scratch);
      std::swap(state, scratch);
    }
    if (cfg.redigitize_between_pulses && p + 1 < cfg.pulses) {
      for (double& v : state.volts()) v = v > cfg.vth ? 1.0 : 0.0;
      state.clear_ring();
    }
  }
  return state;
}

BinaryFrame threshold_restore(const AnalogState& state, double vth) {
  BinaryFrame out(state.width(), state.height());
  for (std::size_t r = 0; r < state.height(); ++r)
    for (std::size_t c = 0; c < state.width(); ++c) out.set(r, c, state.pixel(r, c) > vth);
  return out;
}

BinaryFrame restore_image(const BinaryFrame& frame, const DiffusionConfig& cfg, std::size_t ring) {
  return threshold_restore(apply_pulses(frame, cfg, ring), cfg.vth);
}

bool blank_frame_detect(const BinaryFrame& frame, std::size_t max_ones) {
  return frame.popcount() <= max_ones;
}

ProbeResult probe_diffusion_speed(std::size_t grid_w, std::size_t grid_h, ProbeLocation location,
                                  const DiffusionConfig& cfg, std::size_t ring,
                                  std::uint64_t max_substeps) {
  cfg.validate();
  constexpr std::size_t kBlob = 4;
  if (grid_w < kBlob || grid_h < kBlob)
    throw ConfigError("probe grid must be at least 4x4");
  const std::size_t r0 = location == ProbeLocation::center ? grid_h / 2 - kBlob / 2 : 0;
  const std::size_t c0 = location == ProbeLocation::center ? grid_w / 2 - kBlob / 2 : 0;

  BinaryFrame frame(grid_w, grid_h);
  for (std::size_t r = r0; r < r0 + kBlob; ++r)
    for (std::size_t c = c0; c < c0 + kBlob; ++c) frame.set(r, c, true);

  const double k = cfg.coupling();
  if (k == 0.0)
    throw GuardError("probe cannot terminate: diffusion coupling is zero");

  AnalogState state = embed(frame, ring);
  AnalogState scratch(grid_w, grid_h, ring);
  for (std::uint64_t step = 1; step <= max_substeps; ++step) {
    diffuse_substep_into(state, k, scratch);
    std::swap(state, scratch);
    double peak = 0.0;
    for (std::size_t r = r0; r < r0 + kBlob; ++r)
      for (std::size_t c = c0; c < c0 + kBlob; ++c) peak = std::max(peak, state.pixel(r, c));
    if (peak < cfg.vth) return ProbeResult{location, step};
  }
  throw GuardError("probe did not cross vth within " + std::to_string(max_substeps) + " substeps");
}

const char* to_string(ProbeLocation location) noexcept {
  return location == ProbeLocation::center ? "center" : "corner";
}

}  // namespace cramsim

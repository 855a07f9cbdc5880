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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cramsim/diffusion.hpp"
#include "cramsim/oracle.hpp"
#include "cramsim/projection.hpp"
#include "cramsim/synth.hpp"
#include "cramsim/timing.hpp"

namespace cramsim {

/// Everything a CLI run depends on. Serialized as flat `section.key = value`
/// lines; every key can also be set individually (CLI overrides).
struct RunConfig {
  std::size_t width = kDefaultWidth;
  std::size_t height = kDefaultHeight;
  std::size_t ring = 1;

  DiffusionConfig diffusion;
  bool restore = true;
  std::size_t blank_max_ones = 0;
  bool emit_analog = false;

  RpConfig rp;
  bool propose_restore = false;
  CostTable costs;

  std::vector<double> iou_thresholds = kDefaultIouThresholds;
  std::vector<double> sweep_amplitudes;
  std::vector<std::size_t> sweep_substeps;

  SynthConfig synth;

  std::size_t probe_width = 64;
  std::size_t probe_height = 64;
  std::uint64_t probe_max_substeps = kDefaultProbeBudget;

  std::size_t threads = 0;

  /// Throws ConfigError for unknown keys or unparsable values.
  void set(std::string_view key, std::string_view value);
  std::string get(std::string_view key) const;

  /// Applies every `key = value` line; `#` starts a comment.
  void parse(std::string_view text);
  void load(const std::filesystem::path& path);

  /// Canonical dump of every key, in a fixed order.
  std::string to_text() const;

  void validate() const;

  PipelineConfig pipeline() const;
  SynthConfig synth_config() const;  // synth with frame geometry applied
  std::vector<SweepSetting> sweep() const;
};

std::vector<std::string> config_keys();

}  // namespace cramsim

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
#include <vector>

#include "cramsim/box.hpp"
#include "cramsim/diffusion.hpp"
#include "cramsim/grid.hpp"
#include "cramsim/projection.hpp"

namespace cramsim {

enum class Connectivity { four = 4, eight = 8 };

struct Component {
  std::size_t label = 0;
  std::size_t pixels = 0;
  Box bbox;
};

/// Two-pass union-find labeling. Labels start at 1 in raster order of each
/// component's first pixel.
std::vector<Component> ccl(const BinaryFrame& frame, Connectivity connectivity = Connectivity::eight);

/// Bounding boxes of ccl(), sorted.
std::vector<Box> ccl_boxes(const BinaryFrame& frame, Connectivity connectivity = Connectivity::eight);

struct MatchPair {
  std::size_t pred = 0;
  std::size_t gt = 0;
  double iou = 0.0;
};

struct MatchResult {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::vector<MatchPair> pairs;
};

/// Greedy one-to-one matching in descending IoU; ties go to the lower
/// (gt, pred) index pair. A pair is eligible iff IoU >= threshold.
MatchResult match_boxes(const std::vector<Box>& pred, const std::vector<Box>& gt, double iou_threshold);

struct EvalReport {
  double iou_threshold = 0.5;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;           // micro-averaged over all frames
  double weighted_f1 = 0.0;  // per-frame F1 weighted by ground-truth count
  std::size_t setting_id = 0;
};

/// Precision/recall/F1 from counts; each is 0 when its denominator is 0.
void finalize_scores(EvalReport& report);

struct LabeledFrame {
  BinaryFrame frame;
  std::vector<Box> gt;
};

struct PipelineConfig {
  bool restore = true;
  DiffusionConfig diffusion;
  std::size_t ring = 1;
  RpConfig rp;
};

/// Boxes the pipeline proposes for a single frame.
std::vector<Box> run_pipeline(const BinaryFrame& frame, const PipelineConfig& cfg);

inline const std::vector<double> kDefaultIouThresholds{0.3, 0.5, 0.7};

/// One report per threshold, tp/fp/fn summed over frames. `threads` caps the
/// worker count (0 = hardware concurrency); results do not depend on it.
std::vector<EvalReport> evaluate(const std::vector<LabeledFrame>& frames, const PipelineConfig& cfg,
                                 const std::vector<double>& iou_thresholds = kDefaultIouThresholds,
                                 std::size_t threads = 1);

struct SweepSetting {
  std::size_t id = 0;
  double amplitude = 1.0;
  std::size_t substeps = 8;
};

/// Amplitude-major grid of settings; ids count from 0.
std::vector<SweepSetting> sweep_grid(const std::vector<double>& amplitudes,
                                     const std::vector<std::size_t>& substeps);

std::vector<EvalReport> evaluate_sweep(const std::vector<LabeledFrame>& frames,
                                       const PipelineConfig& base,
                                       const std::vector<SweepSetting>& settings,
                                       const std::vector<double>& iou_thresholds = kDefaultIouThresholds,
                                       std::size_t threads = 1);

}  // namespace cramsim

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
#include <vector>

#include "cramsim/box.hpp"
#include "cramsim/grid.hpp"
#include "cramsim/timing.hpp"

namespace cramsim {

/// Projection-line sensing. The reference voltage comes from a 4-bit DAC;
/// lambda sets how fast a floating line charges with the number of enabled
/// 1-cells on it.
struct ProjectionConfig {
  int dac_code = 7;
  double lambda = 0.7;

  double vref() const noexcept { return static_cast<double>(dac_code) / 15.0; }
  void validate() const;
};

enum class SizeMetric { area, max_side };

struct RpConfig {
  std::size_t size_min = 4;
  SizeMetric size_metric = SizeMetric::area;
  std::size_t slot_r = 4;
  std::size_t slot_c = 4;
  std::size_t max_iters = 16;
  bool consolidate = true;  // run the controller update pass after ISS
  ProjectionConfig projection;

  void validate() const;
};

/// Which set of lines is read out: `rows` senses one horizontal line per
/// row, `cols` one vertical line per column.
enum class Axis { rows, cols };

inline Axis other(Axis a) noexcept { return a == Axis::rows ? Axis::cols : Axis::rows; }

/// Normalized voltage of a line with n enabled 1-cells: 1 - exp(-n/lambda).
double line_voltage(std::size_t n_ones, const ProjectionConfig& cfg);

/// Senses every line on `axis`. `mask` enables indices on the orthogonal
/// axis and must match its length with at least one entry set.
std::vector<std::uint8_t> project(const BinaryFrame& frame, Axis axis,
                                  const std::vector<bool>& mask, const ProjectionConfig& cfg);

/// Same readout restricted to a rectangle: lines in `lines` on `axis`, cells
/// enabled in `enabled` on the orthogonal axis. Bit i is for line lines.lo+i.
std::vector<std::uint8_t> project_window(const BinaryFrame& frame, Axis axis, Interval lines,
                                         Interval enabled, const ProjectionConfig& cfg);

/// Maximal runs of consecutive set bits, ascending.
std::vector<Interval> runs_from_bits(const std::vector<std::uint8_t>& bits);

struct IssResult {
  std::vector<Box> boxes;
  std::size_t iterations = 0;
  CycleTrace trace;
  std::uint64_t cell_reads = 0;
};

/// Iterative selective search: a full-frame row projection followed by
/// alternating per-candidate projections until the candidate count repeats
/// or max_iters is reached.
IssResult iss(const BinaryFrame& frame, const RpConfig& cfg);

/// Controller consolidation: drop boxes below size_min, then merge any pair
/// whose row gap < slot_r and column gap < slot_c until nothing merges.
/// Output is sorted by (r0, c0) and independent of input order.
std::vector<Box> rp_update(const std::vector<Box>& new_boxes, const RpConfig& cfg);

struct RegionProposal {
  std::vector<Box> boxes;
  CycleTrace trace;
  std::size_t iterations = 0;
  std::uint64_t cell_reads = 0;
};

RegionProposal region_propose(const BinaryFrame& frame, const RpConfig& cfg);

}  // namespace cramsim

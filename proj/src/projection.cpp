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

#include "cramsim/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cramsim/error.hpp"

namespace cramsim {

void ProjectionConfig::validate() const {
  if (dac_code < 0 || dac_code > 15)
    throw ConfigError("projection.dac_code must be in 0..15, got " + std::to_string(dac_code));
  if (!(lambda > 0.0)) throw ConfigError("projection.lambda must be positive");
}

void RpConfig::validate() const {
  if (max_iters < 2) throw ConfigError("rp.max_iters must be >= 2");
  projection.validate();
}

double line_voltage(std::size_t n_ones, const ProjectionConfig& cfg) {
  return 1.0 - std::exp(-static_cast<double>(n_ones) / cfg.lambda);
}

std::vector<std::uint8_t> project(const BinaryFrame& frame, Axis axis,
                                  const std::vector<bool>& mask, const ProjectionConfig& cfg) {
  cfg.validate();
  const std::size_t lines = axis == Axis::rows ? frame.height() : frame.width();
  const std::size_t ortho = axis == Axis::rows ? frame.width() : frame.height();
  if (mask.size() != ortho)
    throw ConfigError("projection mask length " + std::to_string(mask.size()) +
                      " does not match orthogonal axis length " + std::to_string(ortho));
  if (std::find(mask.begin(), mask.end(), true) == mask.end())
    throw ConfigError("projection mask enables no lines");

  const double vref = cfg.vref();
  std::vector<std::uint8_t> bits(lines, 0);
  for (std::size_t i = 0; i < lines; ++i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < ortho; ++j) {
      if (!mask[j]) continue;
      n += axis == Axis::rows ? frame.at(i, j) : frame.at(j, i);
    }
    bits[i] = line_voltage(n, cfg) > vref ? 1 : 0;
  }
  return bits;
}

std::vector<std::uint8_t> project_window(const BinaryFrame& frame, Axis axis, Interval lines,
                                         Interval enabled, const ProjectionConfig& cfg) {
  const double vref = cfg.vref();
  std::vector<std::uint8_t> bits(lines.length(), 0);
  for (std::size_t i = lines.lo; i <= lines.hi; ++i) {
    std::size_t n = 0;
    if (axis == Axis::rows) {
      for (std::size_t j = enabled.lo; j <= enabled.hi; ++j) n += frame.at(i, j);
    } else {
      for (std::size_t j = enabled.lo; j <= enabled.hi; ++j) n += frame.at(j, i);
    }
    bits[i - lines.lo] = line_voltage(n, cfg) > vref ? 1 : 0;
  }
  return bits;
}

std::vector<Interval> runs_from_bits(const std::vector<std::uint8_t>& bits) {
  std::vector<Interval> runs;
  std::size_t i = 0;
  while (i < bits.size()) {
    if (!bits[i]) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < bits.size() && bits[i]) ++i;
    runs.push_back({start, i - 1});
  }
  return runs;
}

IssResult iss(const BinaryFrame& frame, const RpConfig& cfg) {
  cfg.validate();
  IssResult res;
  if (frame.empty()) return res;
  const Interval all_rows{0, frame.height() - 1};
  const Interval all_cols{0, frame.width() - 1};

  // First pass: every column enabled, read out all row lines.
  std::vector<Box> candidates;
  for (const Interval& run : runs_from_bits(project_window(frame, Axis::rows, all_rows, all_cols,
                                                           cfg.projection))) {
    candidates.push_back({run.lo, run.hi, all_cols.lo, all_cols.hi});
  }
  res.iterations = 1;
  res.trace.add(OpKind::full_axis_projection);
  res.cell_reads += frame.size();

  Axis axis = Axis::cols;
  while (!candidates.empty() && res.iterations < cfg.max_iters) {
    ++res.iterations;
    std::vector<Box> next;
    for (const Box& cand : candidates) {
      const Interval lines = axis == Axis::rows ? cand.rows() : cand.cols();
      const Interval enabled = axis == Axis::rows ? cand.cols() : cand.rows();
      res.cell_reads += lines.length() * enabled.length();
      for (const Interval& run :
           runs_from_bits(project_window(frame, axis, lines, enabled, cfg.projection))) {
        Box refined = cand;
        if (axis == Axis::rows) {
          refined.r0 = lines.lo + run.lo;
          refined.r1 = lines.lo + run.hi;
        } else {
          refined.c0 = lines.lo + run.lo;
          refined.c1 = lines.lo + run.hi;
        }
        next.push_back(refined);
      }
    }
    res.trace.add(OpKind::region_projection, candidates.size());
    const bool stable = next.size() == candidates.size();
    candidates = std::move(next);
    if (stable) break;
    axis = other(axis);
  }
  res.boxes = std::move(candidates);
  return res;
}

std::vector<Box> rp_update(const std::vector<Box>& new_boxes, const RpConfig& cfg) {
  std::vector<Box> boxes;
  for (const Box& b : new_boxes) {
    const std::size_t size =
        cfg.size_metric == SizeMetric::area ? b.area() : std::max(b.height(), b.width());
    if (size >= cfg.size_min) boxes.push_back(b);
  }
  std::sort(boxes.begin(), boxes.end());

  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < boxes.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < boxes.size(); ++j) {
        if (gap(boxes[i].rows(), boxes[j].rows()) < cfg.slot_r &&
            gap(boxes[i].cols(), boxes[j].cols()) < cfg.slot_c) {
          boxes[i] = bounding_union(boxes[i], boxes[j]);
          boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
          break;
        }
      }
    }
  }
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

RegionProposal region_propose(const BinaryFrame& frame, const RpConfig& cfg) {
  IssResult found = iss(frame, cfg);
  RegionProposal out;
  out.trace = std::move(found.trace);
  out.iterations = found.iterations;
  out.cell_reads = found.cell_reads;
  if (cfg.consolidate) {
    out.boxes = rp_update(found.boxes, cfg);
    out.trace.add(OpKind::controller_object, found.boxes.size());
    out.trace.add(OpKind::controller_fixed);
  } else {
    out.boxes = std::move(found.boxes);
    std::sort(out.boxes.begin(), out.boxes.end());
  }
  return out;
}

}  // namespace cramsim

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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cramsim {

/// Inclusive index range [lo, hi].
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t length() const noexcept { return hi - lo + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Number of empty lines strictly between two intervals; 0 when they touch
/// or overlap.
inline std::size_t gap(const Interval& a, const Interval& b) noexcept {
  if (a.hi < b.lo) return b.lo - a.hi - 1;
  if (b.hi < a.lo) return a.lo - b.hi - 1;
  return 0;
}

/// Inclusive rectangle in (row, col) order.
struct Box {
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  std::size_t c0 = 0;
  std::size_t c1 = 0;

  Interval rows() const noexcept { return {r0, r1}; }
  Interval cols() const noexcept { return {c0, c1}; }
  std::size_t height() const noexcept { return r1 - r0 + 1; }
  std::size_t width() const noexcept { return c1 - c0 + 1; }
  std::size_t area() const noexcept { return height() * width(); }
  bool contains(std::size_t row, std::size_t col) const noexcept {
    return row >= r0 && row <= r1 && col >= c0 && col <= c1;
  }

  // Lexicographic on (r0, c0, r1, c1).
  friend auto operator<=>(const Box& a, const Box& b) noexcept {
    if (auto c = a.r0 <=> b.r0; c != 0) return c;
    if (auto c = a.c0 <=> b.c0; c != 0) return c;
    if (auto c = a.r1 <=> b.r1; c != 0) return c;
    return a.c1 <=> b.c1;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

inline Box bounding_union(const Box& a, const Box& b) noexcept {
  return {std::min(a.r0, b.r0), std::max(a.r1, b.r1), std::min(a.c0, b.c0), std::max(a.c1, b.c1)};
}

double iou(const Box& a, const Box& b) noexcept;

// JSON array of {"x0","y0","x1","y1"} objects (x = column), sorted by (y0, x0).
std::string boxes_to_json(std::vector<Box> boxes);
std::vector<Box> boxes_from_json(const std::string& text);

}  // namespace cramsim

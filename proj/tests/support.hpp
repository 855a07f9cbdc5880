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

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cramsim/box.hpp"
#include "cramsim/grid.hpp"
#include "scratch.hpp"

namespace cramsim::testing {

inline BinaryFrame random_frame(std::size_t w, std::size_t h, double density, std::mt19937_64& rng) {
  BinaryFrame f(w, h);
  std::bernoulli_distribution coin(density);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) f.set(r, c, coin(rng));
  return f;
}

inline AnalogState random_state(std::size_t w, std::size_t h, std::size_t ring, std::mt19937_64& rng) {
  AnalogState s(w, h, ring);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double& v : s.volts()) v = u(rng);
  return s;
}

/// Reference RC update written cell by cell from the neighbour list, on a
/// plain 2-D vector. Independent of the library stencil.
inline std::vector<std::vector<double>> reference_substep(const std::vector<std::vector<double>>& v,
                                                          double k) {
  const long h = static_cast<long>(v.size());
  const long w = static_cast<long>(v[0].size());
  auto out = v;
  const std::pair<long, long> dirs[] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  for (long r = 0; r < h; ++r) {
    for (long c = 0; c < w; ++c) {
      double delta = 0.0;
      for (auto [dr, dc] : dirs) {
        const long rr = r + dr;
        const long cc = c + dc;
        if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
        delta += v[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] -
                 v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += k * delta;
    }
  }
  return out;
}

/// Padded grid (ring of zeros) as nested vectors.
inline std::vector<std::vector<double>> padded_grid(const BinaryFrame& f, std::size_t ring) {
  std::vector<std::vector<double>> g(f.height() + 2 * ring, std::vector<double>(f.width() + 2 * ring, 0.0));
  for (std::size_t r = 0; r < f.height(); ++r)
    for (std::size_t c = 0; c < f.width(); ++c) g[r + ring][c + ring] = f.at(r, c);
  return g;
}

/// Reference single-pulse restoration: reference_substep repeated, then
/// strict threshold on the interior.
inline BinaryFrame reference_restore(const BinaryFrame& f, double k, std::size_t substeps,
                                     std::size_t ring, double vth) {
  auto g = padded_grid(f, ring);
  for (std::size_t s = 0; s < substeps; ++s) g = reference_substep(g, k);
  BinaryFrame out(f.width(), f.height());
  for (std::size_t r = 0; r < f.height(); ++r)
    for (std::size_t c = 0; c < f.width(); ++c) out.set(r, c, g[r + ring][c + ring] > vth);
  return out;
}

/// Flood-fill component bounding boxes (sorted). Independent of the
/// union-find labeler.
inline std::vector<Box> flood_fill_boxes(const BinaryFrame& f, bool eight) {
  const long h = static_cast<long>(f.height());
  const long w = static_cast<long>(f.width());
  std::vector<std::uint8_t> seen(f.size(), 0);
  std::vector<Box> boxes;
  for (long r = 0; r < h; ++r) {
    for (long c = 0; c < w; ++c) {
      const auto idx = static_cast<std::size_t>(r * w + c);
      if (!f.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) || seen[idx]) continue;
      Box b{static_cast<std::size_t>(r), static_cast<std::size_t>(r), static_cast<std::size_t>(c),
            static_cast<std::size_t>(c)};
      std::vector<std::pair<long, long>> stack{{r, c}};
      seen[idx] = 1;
      while (!stack.empty()) {
        auto [pr, pc] = stack.back();
        stack.pop_back();
        b = bounding_union(b, Box{static_cast<std::size_t>(pr), static_cast<std::size_t>(pr),
                                  static_cast<std::size_t>(pc), static_cast<std::size_t>(pc)});
        for (long dr = -1; dr <= 1; ++dr) {
          for (long dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            if (!eight && dr != 0 && dc != 0) continue;
            const long nr = pr + dr;
            const long nc = pc + dc;
            if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
            const auto nidx = static_cast<std::size_t>(nr * w + nc);
            if (seen[nidx] || !f.at(static_cast<std::size_t>(nr), static_cast<std::size_t>(nc))) continue;
            seen[nidx] = 1;
            stack.push_back({nr, nc});
          }
        }
      }
      boxes.push_back(b);
    }
  }
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

namespace detail {

inline void guillotine(const Box& region, std::size_t k, std::mt19937_64& rng, std::vector<Box>& out) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  if (k == 0) return;
  if (k == 1) {
    const std::size_t h = pick(1, std::min<std::size_t>(region.height(), 16));
    const std::size_t w = pick(1, std::min<std::size_t>(region.width(), 16));
    const std::size_t r0 = region.r0 + pick(0, region.height() - h);
    const std::size_t c0 = region.c0 + pick(0, region.width() - w);
    out.push_back({r0, r0 + h - 1, c0, c0 + w - 1});
    return;
  }
  const std::size_t band = pick(1, 3);
  const bool rows_ok = region.height() >= k + band;
  const bool cols_ok = region.width() >= k + band;
  if (!rows_ok && !cols_ok) {
    guillotine(region, k - 1, rng, out);
    return;
  }
  const bool split_rows = rows_ok && (!cols_ok || pick(0, 1) == 0);
  const std::size_t k1 = pick(1, k - 1);
  const std::size_t len = split_rows ? region.height() : region.width();
  // First part gets [k1, len - band - (k - k1)] lines.
  const std::size_t first = pick(k1, len - band - (k - k1));
  Box a = region;
  Box b = region;
  if (split_rows) {
    a.r1 = region.r0 + first - 1;
    b.r0 = region.r0 + first + band;
  } else {
    a.c1 = region.c0 + first - 1;
    b.c0 = region.c0 + first + band;
  }
  guillotine(a, k1, rng, out);
  guillotine(b, k - k1, rng, out);
}

}  // namespace detail

/// Axis-separable scene: solid rectangles placed by recursive guillotine
/// cuts with an empty band of 1..3 lines at every cut.
struct SeparableScene {
  BinaryFrame frame;
  std::vector<Box> rects;
};

inline SeparableScene separable_scene(std::size_t w, std::size_t h, std::size_t min_objects,
                                      std::size_t max_objects, std::mt19937_64& rng) {
  SeparableScene s{BinaryFrame(w, h), {}};
  const std::size_t k = std::uniform_int_distribution<std::size_t>(min_objects, max_objects)(rng);
  detail::guillotine(Box{0, h - 1, 0, w - 1}, k, rng, s.rects);
  for (const Box& b : s.rects)
    for (std::size_t r = b.r0; r <= b.r1; ++r)
      for (std::size_t c = b.c0; c <= b.c1; ++c) s.frame.set(r, c, true);
  std::sort(s.rects.begin(), s.rects.end());
  return s;
}

}  // namespace cramsim::testing

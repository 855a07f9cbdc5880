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

namespace cramsim {

enum class SceneLayout { random, diagonal };

/// Synthetic traffic-like scenes: a few solid rectangles covering about
/// `occupancy` of the frame, salt noise, and optional zero stripes cut through
/// objects to mimic surfaces that emit no events.
struct SynthConfig {
  std::size_t width = kDefaultWidth;
  std::size_t height = kDefaultHeight;
  std::size_t frames = 16;
  SceneLayout layout = SceneLayout::random;
  std::size_t objects_min = 1;
  std::size_t objects_max = 5;
  double occupancy = 0.05;
  std::size_t min_side = 6;
  std::size_t min_separation = 6;  // zero lines between neighbouring objects
  double noise = 0.01;
  std::size_t frag_gap = 2;  // stripe width; 0 disables fragmentation
  double frag_prob = 0.5;
  std::size_t diagonal_objects = 3;
  std::size_t diagonal_blob = 4;
  std::uint64_t seed = 1;

  void validate() const;
};

struct Scene {
  BinaryFrame clean;  // objects only, unfragmented
  BinaryFrame noise;  // salt-noise mask alone
  BinaryFrame input;  // fragmented objects OR noise
  std::vector<Box> gt;
};

/// Scene number `index` of the corpus; depends only on (cfg, index).
Scene generate_scene(const SynthConfig& cfg, std::size_t index);

std::vector<Scene> generate_corpus(const SynthConfig& cfg);

/// n square blobs of side `blob` along the diagonal, `gap` empty lines
/// between consecutive blobs (and before the first). Row and column extents
/// are pairwise disjoint.
BinaryFrame diagonal_frame(std::size_t n, std::size_t width, std::size_t height,
                           std::size_t blob = 4, std::size_t gap = 6);

/// Smallest square frame that fits diagonal_frame(n, ...).
std::size_t diagonal_extent(std::size_t n, std::size_t blob = 4, std::size_t gap = 6) noexcept;

}  // namespace cramsim

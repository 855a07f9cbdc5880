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

#include "cramsim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cramsim/error.hpp"
#include "cramsim/oracle.hpp"

namespace cramsim {
namespace {

using Rng = std::mt19937_64;

constexpr std::size_t kMinFragmentSide = 3;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Guillotine placement: split the region with a zero band so any two
// objects are separated by a full empty band on one axis.
void place(const Box& region, std::size_t k, Rng& rng, const SynthConfig& cfg, double target_area,
           std::vector<Box>& out) {
  if (k == 0) return;
  const std::size_t rh = region.height();
  const std::size_t rw = region.width();
  const std::size_t side = cfg.min_side;

  if (k == 1) {
    if (rh < side || rw < side) return;
    const double aspect = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    const auto h = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::lround(std::sqrt(target_area * aspect))), side, rh);
    const auto w = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::lround(target_area / static_cast<double>(h))), side, rw);
    const std::size_t r0 = region.r0 + uniform(rng, 0, rh - h);
    const std::size_t c0 = region.c0 + uniform(rng, 0, rw - w);
    out.push_back({r0, r0 + h - 1, c0, c0 + w - 1});
    return;
  }

  const std::size_t k1 = uniform(rng, 1, k - 1);
  const std::size_t k2 = k - k1;
  const std::size_t need = k * side + cfg.min_separation;
  const bool split_rows_ok = rh >= need;
  const bool split_cols_ok = rw >= need;
  if (!split_rows_ok && !split_cols_ok) {
    place(region, k - 1, rng, cfg, target_area, out);
    return;
  }
  bool split_cols = split_cols_ok;
  if (split_rows_ok && split_cols_ok) {
    split_cols = std::uniform_real_distribution<double>(0.0, 1.0)(rng) <
                 static_cast<double>(rw) / static_cast<double>(rw + rh);
  }

  const std::size_t len = split_cols ? rw : rh;
  const std::size_t usable = len - cfg.min_separation;
  const std::size_t lo = k1 * side;
  const std::size_t hi = usable - k2 * side;
  const double share = static_cast<double>(usable) * static_cast<double>(k1) / static_cast<double>(k);
  const double jitter = std::uniform_real_distribution<double>(-0.15, 0.15)(rng) * static_cast<double>(usable);
  const auto first = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(0.0, std::round(share + jitter))), lo, hi);

  Box a = region;
  Box b = region;
  if (split_cols) {
    a.c1 = region.c0 + first - 1;
    b.c0 = region.c0 + first + cfg.min_separation;
  } else {
    a.r1 = region.r0 + first - 1;
    b.r0 = region.r0 + first + cfg.min_separation;
  }
  place(a, k1, rng, cfg, target_area, out);
  place(b, k2, rng, cfg, target_area, out);
}

void fill(BinaryFrame& frame, const Box& b, bool value) {
  for (std::size_t r = b.r0; r <= b.r1; ++r)
    for (std::size_t c = b.c0; c <= b.c1; ++c) frame.set(r, c, value);
}

// Cut one zero stripe fully across the object, leaving two pieces.
void fragment(BinaryFrame& frame, const Box& obj, std::size_t stripe, Rng& rng) {
  const std::size_t min_len = 2 * kMinFragmentSide + stripe;
  const bool vertical_ok = obj.width() >= min_len;
  const bool horizontal_ok = obj.height() >= min_len;
  if (!vertical_ok && !horizontal_ok) return;
  bool vertical = vertical_ok;
  if (vertical_ok && horizontal_ok) vertical = std::bernoulli_distribution(0.5)(rng);
  if (vertical) {
    const std::size_t c = obj.c0 + kMinFragmentSide + uniform(rng, 0, obj.width() - min_len);
    fill(frame, Box{obj.r0, obj.r1, c, c + stripe - 1}, false);
  } else {
    const std::size_t r = obj.r0 + kMinFragmentSide + uniform(rng, 0, obj.height() - min_len);
    fill(frame, Box{r, r + stripe - 1, obj.c0, obj.c1}, false);
  }
}

}  // namespace

void SynthConfig::validate() const {
  if (width == 0 || height == 0) throw ConfigError("frame geometry must be positive");
  if (objects_min > objects_max) throw ConfigError("synth.objects_min exceeds synth.objects_max");
  if (!(occupancy >= 0.0 && occupancy <= 1.0)) throw ConfigError("synth.occupancy must be in [0, 1]");
  if (!(noise >= 0.0 && noise <= 1.0)) throw ConfigError("synth.noise must be in [0, 1]");
  if (!(frag_prob >= 0.0 && frag_prob <= 1.0)) throw ConfigError("synth.frag_prob must be in [0, 1]");
  if (min_side == 0) throw ConfigError("synth.min_side must be positive");
  if (layout == SceneLayout::diagonal &&
      diagonal_extent(diagonal_objects, diagonal_blob, min_separation) > std::min(width, height))
    throw ConfigError("diagonal layout of " + std::to_string(diagonal_objects) +
                      " objects does not fit the frame");
}

Scene generate_scene(const SynthConfig& cfg, std::size_t index) {
  cfg.validate();
  std::seed_seq seq{static_cast<std::uint64_t>(cfg.seed), static_cast<std::uint64_t>(index)};
  Rng rng(seq);

  Scene scene;
  scene.clean = BinaryFrame(cfg.width, cfg.height);
  std::vector<Box> objects;
  if (cfg.layout == SceneLayout::diagonal) {
    scene.clean = diagonal_frame(cfg.diagonal_objects, cfg.width, cfg.height, cfg.diagonal_blob,
                                 cfg.min_separation);
  } else {
    const std::size_t k = uniform(rng, cfg.objects_min, cfg.objects_max);
    if (k > 0) {
      const double target = cfg.occupancy * static_cast<double>(cfg.width * cfg.height) /
                            static_cast<double>(k);
      place(Box{0, cfg.height - 1, 0, cfg.width - 1}, k, rng, cfg, target, objects);
    }
    for (const Box& b : objects) fill(scene.clean, b, true);
  }
  scene.gt = ccl_boxes(scene.clean);

  scene.input = scene.clean;
  if (cfg.frag_gap > 0) {
    std::bernoulli_distribution coin(cfg.frag_prob);
    for (const Box& b : scene.gt)
      if (coin(rng)) fragment(scene.input, b, cfg.frag_gap, rng);
  }

  scene.noise = BinaryFrame(cfg.width, cfg.height);
  if (cfg.noise > 0.0) {
    std::bernoulli_distribution salt(cfg.noise);
    for (std::size_t r = 0; r < cfg.height; ++r) {
      for (std::size_t c = 0; c < cfg.width; ++c) {
        if (salt(rng)) {
          scene.noise.set(r, c, true);
          scene.input.set(r, c, true);
        }
      }
    }
  }
  return scene;
}

std::vector<Scene> generate_corpus(const SynthConfig& cfg) {
  std::vector<Scene> scenes;
  scenes.reserve(cfg.frames);
  for (std::size_t i = 0; i < cfg.frames; ++i) scenes.push_back(generate_scene(cfg, i));
  return scenes;
}

std::size_t diagonal_extent(std::size_t n, std::size_t blob, std::size_t gap) noexcept {
  return n * (blob + gap) + gap;
}

BinaryFrame diagonal_frame(std::size_t n, std::size_t width, std::size_t height, std::size_t blob,
                           std::size_t gap) {
  if (diagonal_extent(n, blob, gap) > std::min(width, height))
    throw ConfigError("diagonal layout does not fit the frame");
  BinaryFrame frame(width, height);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t at = gap + i * (blob + gap);
    fill(frame, Box{at, at + blob - 1, at, at + blob - 1}, true);
  }
  return frame;
}

}  // namespace cramsim

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

#include <doctest.h>

#include <cmath>

#include "cramsim/error.hpp"
#include "cramsim/oracle.hpp"
#include "cramsim/run_config.hpp"
#include "cramsim/synth.hpp"
#include "support.hpp"

using namespace cramsim;

TEST_SUITE("synth") {
  TEST_CASE("scenes are deterministic in (seed, index)") {
    SynthConfig cfg;
    const Scene a = generate_scene(cfg, 3);
    const Scene b = generate_scene(cfg, 3);
    CHECK(a.input == b.input);
    CHECK(a.gt == b.gt);
    CHECK_FALSE(generate_scene(cfg, 4).input == a.input);
    cfg.seed = 2;
    CHECK_FALSE(generate_scene(cfg, 3).input == a.input);
  }

  TEST_CASE("salt noise count is binomial") {
    SynthConfig cfg;
    const double n = static_cast<double>(cfg.width * cfg.height);
    const double mean = n * cfg.noise;
    const double sigma = std::sqrt(n * cfg.noise * (1.0 - cfg.noise));
    double total = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      const double k = static_cast<double>(generate_scene(cfg, i).noise.popcount());
      CHECK(std::abs(k - mean) < 5.0 * sigma);
      total += k;
    }
    CHECK(std::abs(total - 16 * mean) < 5.0 * 4.0 * sigma);
    cfg.noise = 0.0;
    CHECK(generate_scene(cfg, 0).noise.popcount() == 0);
  }

  TEST_CASE("ground truth, separation and fragmentation") {
    SynthConfig cfg;
    cfg.frag_prob = 1.0;
    for (std::size_t i = 0; i < 40; ++i) {
      const Scene s = generate_scene(cfg, i);
      CHECK(s.gt == ccl_boxes(s.clean));
      CHECK(s.gt.size() <= cfg.objects_max);
      for (const Box& b : s.gt) {
        CHECK(b.height() >= cfg.min_side);
        CHECK(b.width() >= cfg.min_side);
      }
      for (std::size_t x = 0; x < s.gt.size(); ++x)
        for (std::size_t y = x + 1; y < s.gt.size(); ++y)
          CHECK(std::max(gap(s.gt[x].rows(), s.gt[y].rows()), gap(s.gt[x].cols(), s.gt[y].cols())) >=
                cfg.min_separation);
      for (std::size_t r = 0; r < cfg.height; ++r) {
        for (std::size_t c = 0; c < cfg.width; ++c) {
          const bool obj_or_noise = s.clean.at(r, c) || s.noise.at(r, c);
          if (s.input.at(r, c)) CHECK(obj_or_noise);
          if (s.noise.at(r, c)) CHECK(s.input.at(r, c));
        }
      }
      // Each object splits into at most two pieces.
      for (const Box& b : s.gt) {
        BinaryFrame piece(b.width(), b.height());
        for (std::size_t r = b.r0; r <= b.r1; ++r)
          for (std::size_t c = b.c0; c <= b.c1; ++c)
            piece.set(r - b.r0, c - b.c0, s.input.at(r, c) && !s.noise.at(r, c));
        CHECK(ccl(piece, Connectivity::four).size() <= 2);
      }
    }
  }

  TEST_CASE("diagonal layout") {
    CHECK(diagonal_extent(3) == 36);
    CHECK(diagonal_extent(3, 4, 2) == 20);
    const BinaryFrame f = diagonal_frame(3, 36, 36);
    CHECK(ccl_boxes(f) == std::vector<Box>{{6, 9, 6, 9}, {16, 19, 16, 19}, {26, 29, 26, 29}});
    CHECK(ccl_boxes(diagonal_frame(3, 20, 20, 4, 2)) ==
          std::vector<Box>{{2, 5, 2, 5}, {8, 11, 8, 11}, {14, 17, 14, 17}});
    CHECK_THROWS_AS((void)diagonal_frame(4, 36, 36), ConfigError);
    SynthConfig cfg;
    cfg.layout = SceneLayout::diagonal;
    cfg.diagonal_objects = 5;
    cfg.noise = 0.0;
    CHECK(generate_scene(cfg, 0).gt.size() == 5);
  }

  TEST_CASE("validation") {
    SynthConfig cfg;
    cfg.objects_min = 6;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = SynthConfig{};
    cfg.noise = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }
}

TEST_SUITE("run_config") {
  TEST_CASE("parse applies keys, comments and blank lines") {
    RunConfig cfg;
    cfg.parse("# comment\n\ndiffusion.alpha = 0.1   # trailing\nrp.slot = 6\neval.iou = 0.5,0.75\n"
              "synth.layout = diagonal\nrp.size_metric = max_side\n");
    CHECK(cfg.diffusion.alpha == 0.1);
    CHECK(cfg.rp.slot_r == 6);
    CHECK(cfg.rp.slot_c == 6);
    CHECK(cfg.iou_thresholds == std::vector<double>{0.5, 0.75});
    CHECK(cfg.synth.layout == SceneLayout::diagonal);
    CHECK(cfg.rp.size_metric == SizeMetric::max_side);
    CHECK(cfg.get("rp.slot_c") == "6");
  }

  TEST_CASE("errors") {
    RunConfig cfg;
    CHECK_THROWS_AS(cfg.set("no.such.key", "1"), ConfigError);
    CHECK_THROWS_AS(cfg.set("diffusion.alpha", "abc"), ConfigError);
    CHECK_THROWS_AS(cfg.set("diffusion.substeps", "-1"), ConfigError);
    CHECK_THROWS_AS(cfg.set("restore.enabled", "maybe"), ConfigError);
    CHECK_THROWS_AS(cfg.parse("diffusion.alpha 0.1\n"), ConfigError);
    CHECK_THROWS_AS((void)cfg.get("rp.slot"), ConfigError);
    cfg.set("diffusion.amplitude", "2");
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }

  TEST_CASE("to_text round trips through parse") {
    RunConfig a;
    a.set("diffusion.alpha", "0.125");
    a.set("eval.sweep.amplitudes", "0.5,1");
    a.set("eval.sweep.substeps", "4,8,16");
    a.set("synth.seed", "99");
    a.set("cost.region_projection", "5");
    RunConfig b;
    b.parse(a.to_text());
    CHECK(b.to_text() == a.to_text());
    for (const std::string& key : config_keys()) {
      if (key == "rp.slot") continue;
      CHECK(a.get(key) == b.get(key));
    }
    CHECK(b.sweep().size() == 6);
    CHECK(b.costs[OpKind::region_projection] == 5);
  }

  TEST_CASE("empty sweep falls back to the base setting") {
    RunConfig cfg;
    const auto s = cfg.sweep();
    REQUIRE(s.size() == 1);
    CHECK(s[0].amplitude == cfg.diffusion.amplitude);
    CHECK(s[0].substeps == cfg.diffusion.substeps_per_pulse);
  }
}

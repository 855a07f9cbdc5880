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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cramsim/diffusion.hpp"
#include "cramsim/oracle.hpp"
#include "cramsim/projection.hpp"
#include "cramsim/synth.hpp"
#include "cramsim/timing.hpp"
#include "process.hpp"
#include "support.hpp"

using namespace cramsim;
namespace fs = std::filesystem;

namespace {

// Tolerances and limits.
constexpr double kCycleTimeLimitS = 1.0;
constexpr std::size_t kOracleFrames = 1000;
constexpr double kOracleTimeLimitS = 30.0;
constexpr std::size_t kConservationStates = 100;
constexpr std::size_t kConservationSteps = 1000;
constexpr double kConservationRelTol = 1e-12;
constexpr std::size_t kEquivarianceSubsteps = 8;
constexpr std::size_t kBenefitFrames = 500;
constexpr double kBenefitTimeLimitS = 120.0;
constexpr double kBenefitIou = 0.5;
constexpr std::size_t kSweepFrames = 500;
constexpr double kSweepMaxSpread = 0.05;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome cycle_formulas() {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t n = 0; n <= 16; ++n) {
    const std::size_t side = std::max<std::size_t>(diagonal_extent(n), 8);
    const RegionProposal rp = region_propose(diagonal_frame(n, side, side), RpConfig{});
    const std::uint64_t imc = imc_cycles(rp.trace);
    const std::uint64_t total = trace_cycles(rp.trace);
    if (rp.boxes.size() != n || imc != minimal_cycles_imc(n) || total != minimal_cycles_total(n))
      return {false, "N=" + std::to_string(n) + ": imc " + std::to_string(imc) + ", total " +
                         std::to_string(total)};
  }
  const double s = seconds_since(t0);
  return {s < kCycleTimeLimitS, fmt("N=0..16 exact, %.3f s", s)};
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260101);
  RpConfig cfg;
  cfg.size_min = 1;
  cfg.slot_r = 0;
  cfg.slot_c = 0;
  for (std::size_t i = 0; i < kOracleFrames; ++i) {
    const testing::SeparableScene scene = testing::separable_scene(64, 64, 1, 5, rng);
    const std::vector<Box> got = region_propose(scene.frame, cfg).boxes;
    const std::vector<Box> want = ccl_boxes(scene.frame);
    if (got != want) return {false, "mismatch on frame " + std::to_string(i)};
  }
  const double s = seconds_since(t0);
  return {s < kOracleTimeLimitS, fmt("%.0f frames identical, %.2f s", kOracleFrames, s)};
}

Outcome denoise_fill() {
  const DiffusionConfig cfg;
  std::size_t isolated = 0;
  std::size_t removed = 0;
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      BinaryFrame f(16, 16);
      f.set(r, c, true);
      ++isolated;
      removed += restore_image(f, cfg).popcount() == 0;
    }
  }
  std::size_t holes = 0;
  std::size_t filled = 0;
  for (std::size_t side = 5; side <= 16; ++side) {
    for (std::size_t r0 = 0; r0 + side <= 16; ++r0) {
      for (std::size_t c0 = 0; c0 + side <= 16; ++c0) {
        for (std::size_t hr = r0 + 1; hr + 1 < r0 + side; ++hr) {
          for (std::size_t hc = c0 + 1; hc + 1 < c0 + side; ++hc) {
            BinaryFrame f(16, 16);
            for (std::size_t r = r0; r < r0 + side; ++r)
              for (std::size_t c = c0; c < c0 + side; ++c) f.set(r, c, !(r == hr && c == hc));
            ++holes;
            filled += restore_image(f, cfg).at(hr, hc);
          }
        }
      }
    }
  }
  return {removed == isolated && filled == holes,
          std::to_string(removed) + "/" + std::to_string(isolated) + " isolated removed, " +
              std::to_string(filled) + "/" + std::to_string(holes) + " holes filled"};
}

Outcome conservation_equivariance() {
  std::mt19937_64 rng(4242);
  double worst = 0.0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kConservationStates; ++i) {
    const AnalogState start = testing::random_state(32, 32, 1, rng);
    AnalogState s = start;
    const double q0 = s.total_charge();
    for (std::size_t k = 0; k < kConservationSteps; ++k) s = diffuse_substep(s, 0.2);
    worst = std::max(worst, std::abs(s.total_charge() - q0) / q0);

    auto run = [](AnalogState x) {
      for (std::size_t k = 0; k < kEquivarianceSubsteps; ++k) x = diffuse_substep(x, 0.2);
      return threshold_restore(x, 0.5);
    };
    const BinaryFrame base = run(start);
    mismatches += !(run(start.transposed()) == base.transposed());
    mismatches += !(run(start.flipped_horizontal()) == base.flipped_horizontal());
    mismatches += !(run(start.flipped_vertical()) == base.flipped_vertical());
  }
  return {worst < kConservationRelTol && mismatches == 0,
          fmt("max relative charge drift %.2e, %.0f symmetry mismatches", worst,
              static_cast<double>(mismatches))};
}

Outcome center_vs_corner() {
  const DiffusionConfig cfg;
  const auto center = probe_diffusion_speed(64, 64, ProbeLocation::center, cfg).steps_to_threshold;
  const auto corner = probe_diffusion_speed(64, 64, ProbeLocation::corner, cfg).steps_to_threshold;
  return {center < corner, fmt("center %.0f substeps, corner %.0f substeps", static_cast<double>(center),
                               static_cast<double>(corner))};
}

std::vector<LabeledFrame> corpus(const SynthConfig& cfg) {
  std::vector<LabeledFrame> frames;
  for (Scene& s : generate_corpus(cfg)) frames.push_back({std::move(s.input), std::move(s.gt)});
  return frames;
}

double f1_at(const std::vector<LabeledFrame>& frames, const PipelineConfig& cfg, double iou) {
  return evaluate(frames, cfg, {iou}, 0).front().f1;
}

Outcome restoration_benefit() {
  const auto t0 = std::chrono::steady_clock::now();
  SynthConfig synth;
  synth.frames = kBenefitFrames;
  synth.noise = 0.01;
  synth.seed = 6;
  const auto frames = corpus(synth);

  PipelineConfig both;
  PipelineConfig neither;
  neither.restore = false;
  neither.rp.consolidate = false;
  PipelineConfig rp_only;
  rp_only.restore = false;

  const double f_both = f1_at(frames, both, kBenefitIou);
  const double f_neither = f1_at(frames, neither, kBenefitIou);
  const double f_rp = f1_at(frames, rp_only, kBenefitIou);
  const double s = seconds_since(t0);
  return {f_both > f_neither && f_rp > f_neither && s < kBenefitTimeLimitS,
          fmt("F1 restore+update %.4f, update only %.4f, neither %.4f", f_both, f_rp, f_neither) +
              fmt(", %.1f s", s)};
}

Outcome robustness_sweep() {
  SynthConfig synth;
  synth.frames = kSweepFrames;
  synth.noise = 0.01;
  synth.frag_gap = 0;
  synth.seed = 7;
  const auto frames = corpus(synth);
  const auto settings = sweep_grid({0.5, 1.0}, {4, 8, 16});
  const auto reports = evaluate_sweep(frames, PipelineConfig{}, settings, {kBenefitIou}, 0);
  double lo = 1.0;
  double hi = 0.0;
  for (const EvalReport& r : reports) {
    lo = std::min(lo, r.f1);
    hi = std::max(hi, r.f1);
  }
  return {reports.size() == 6 && hi - lo < kSweepMaxSpread,
          fmt("%.0f settings, F1 in [%.4f, %.4f]", static_cast<double>(reports.size()), lo, hi)};
}

Outcome cli_determinism() {
  const fs::path dir = testing::scratch_dir("acceptance_cli");
  const fs::path cfg = dir / "run.cfg";
  testing::write_text(cfg,
                      "synth.frames = 24\nsynth.seed = 11\nrestore.emit_analog = true\n"
                      "eval.sweep.amplitudes = 0.5,1\neval.sweep.substeps = 4,8\npropose.restore = true\n");
  std::string failed;
  auto twice = [&](const std::string& name, const std::function<std::vector<std::string>(const fs::path&)>& args) {
    const fs::path a = dir / (name + "_a");
    const fs::path b = dir / (name + "_b");
    const int ra = testing::run_cli(args(a));
    const int rb = testing::run_cli(args(b));
    if (ra != 0 || rb != 0 || testing::tree_contents(a) != testing::tree_contents(b) ||
        testing::tree_contents(a).empty())
      failed += (failed.empty() ? "" : ",") + name;
  };
  const std::string c = cfg.string();
  twice("synth", [&](const fs::path& out) {
    return std::vector<std::string>{"synth", "--config", c, "--out", out.string()};
  });
  const std::string corpus_dir = (dir / "synth_a").string();
  const std::string frames = (dir / "synth_a" / "frames").string();
  twice("restore", [&](const fs::path& out) {
    return std::vector<std::string>{"restore", "--config", c, "--input", frames, "--out", out.string()};
  });
  twice("propose", [&](const fs::path& out) {
    return std::vector<std::string>{"propose", "--config", c, "--input", frames, "--out", out.string()};
  });
  twice("eval", [&](const fs::path& out) {
    return std::vector<std::string>{"eval", "--config", c, "--corpus", corpus_dir, "--out", out.string()};
  });
  twice("probe", [&](const fs::path& out) {
    return std::vector<std::string>{"probe", "--config", c, "--out", out.string()};
  });
  fs::remove_all(dir);
  if (!failed.empty()) return {false, "outputs differ or command failed: " + failed};
  return {true, "synth, restore, propose, eval, probe byte-identical on re-run"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "cycle formulas", cycle_formulas},
      {2, "oracle equivalence", oracle_equivalence},
      {3, "denoise and fill", denoise_fill},
      {4, "conservation and equivariance", conservation_equivariance},
      {5, "center faster than corner", center_vs_corner},
      {6, "restoration benefit", restoration_benefit},
      {7, "robustness sweep", robustness_sweep},
      {8, "CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %d %-30s %s  (%s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures;
}

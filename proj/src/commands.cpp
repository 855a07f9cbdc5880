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

#include "cramsim/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cramsim/error.hpp"
#include "cramsim/io.hpp"
#include "cramsim/parallel.hpp"

namespace cramsim {
namespace {

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw Error(ErrorKind::input, "cannot create directory " + dir.string() +
                                      (ec ? ": " + ec.message() : std::string()));
}

std::string frame_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%05zu", i);
  return buf;
}

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::size_t effective_threads(const RunConfig& cfg) {
  if (const char* env = std::getenv("CRAM_SIM_THREADS"); env && *env) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw ConfigError("CRAM_SIM_THREADS must be a non-negative integer");
    return static_cast<std::size_t>(n);
  }
  return cfg.threads;
}

std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs) {
  if (inputs.empty()) throw Error(ErrorKind::input, "no input frames given");
  std::vector<fs::path> files;
  for (const fs::path& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(in))
        if (entry.is_regular_file() && entry.path().extension() == ".pbm") found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(in)) {
      files.push_back(in);
    } else {
      throw Error(ErrorKind::input, "input not found: " + in.string());
    }
  }
  return files;
}

void cmd_synth(const RunConfig& cfg, const fs::path& out_dir) {
  cfg.validate();
  const SynthConfig synth = cfg.synth_config();
  make_dir(out_dir / "frames");
  make_dir(out_dir / "clean");
  make_dir(out_dir / "gt");

  std::vector<std::string> rows(synth.frames);
  parallel_for(synth.frames, effective_threads(cfg), [&](std::size_t i) {
    const Scene scene = generate_scene(synth, i);
    const std::string name = frame_name(i);
    save_frame(scene.input, out_dir / "frames" / (name + ".pbm"));
    save_frame(scene.clean, out_dir / "clean" / (name + ".pbm"));
    write_file_atomic(out_dir / "gt" / (name + ".json"), boxes_to_json(scene.gt));
    rows[i] = name + ',' + std::to_string(scene.gt.size()) + ',' + std::to_string(scene.noise.popcount()) + '\n';
  });

  std::string manifest = "frame_id,n_objects,noise_pixels\n";
  for (const std::string& r : rows) manifest += r;
  write_file_atomic(out_dir / "manifest.csv", manifest);
  write_file_atomic(out_dir / "config.cfg", cfg.to_text());
}

void cmd_restore(const RunConfig& cfg, const std::vector<fs::path>& inputs, const fs::path& out_dir) {
  cfg.validate();
  const std::vector<fs::path> files = expand_inputs(inputs);
  make_dir(out_dir);

  std::vector<std::string> rows(files.size());
  parallel_for(files.size(), effective_threads(cfg), [&](std::size_t i) {
    const BinaryFrame frame = load_frame(files[i]);
    const AnalogState analog = apply_pulses(frame, cfg.diffusion, cfg.ring);
    const BinaryFrame restored = threshold_restore(analog, cfg.diffusion.vth);
    const std::string stem = files[i].stem().string();
    save_frame(restored, out_dir / (stem + ".pbm"));
    if (cfg.emit_analog) save_analog(analog, out_dir / (stem + ".pgm"));
    const bool blank = blank_frame_detect(restored, cfg.blank_max_ones);
    rows[i] = stem + ',' + std::to_string(restored.popcount()) + ',' + (blank ? "true" : "false") + '\n';
  });

  std::string csv = "frame_id,popcount,blank\n";
  for (const std::string& r : rows) csv += r;
  write_file_atomic(out_dir / "restore.csv", csv);
}

void cmd_propose(const RunConfig& cfg, const std::vector<fs::path>& inputs, const fs::path& out_dir) {
  cfg.validate();
  const std::vector<fs::path> files = expand_inputs(inputs);
  make_dir(out_dir);

  std::vector<std::string> rows(files.size());
  parallel_for(files.size(), effective_threads(cfg), [&](std::size_t i) {
    BinaryFrame frame = load_frame(files[i]);
    OpCount ops;
    if (cfg.propose_restore) {
      frame = restore_image(frame, cfg.diffusion, cfg.ring);
      ops.diffusion_ops = diffusion_op_count(
          cfg.diffusion.pulses, cfg.diffusion.substeps_per_pulse,
          (frame.width() + 2 * cfg.ring) * (frame.height() + 2 * cfg.ring));
    }
    const RegionProposal rp = region_propose(frame, cfg.rp);
    ops.projection_ops = rp.cell_reads;
    const std::string stem = files[i].stem().string();
    write_file_atomic(out_dir / (stem + ".json"), boxes_to_json(rp.boxes));
    rows[i] = stem + ',' + std::to_string(rp.boxes.size()) + ',' +
              std::to_string(imc_cycles(rp.trace, cfg.costs)) + ',' +
              std::to_string(trace_cycles(rp.trace, cfg.costs)) + ',' +
              std::to_string(ops.diffusion_ops) + ',' + std::to_string(ops.projection_ops) + '\n';
  });

  std::string csv = "frame_id,n_objects,imc_cycles,total_cycles,diffusion_ops,projection_ops\n";
  for (const std::string& r : rows) csv += r;
  write_file_atomic(out_dir / "cycles.csv", csv);
}

void cmd_eval(const RunConfig& cfg, const fs::path& corpus_dir, const fs::path& out_dir) {
  cfg.validate();
  const std::vector<fs::path> files = expand_inputs({corpus_dir / "frames"});
  if (files.empty()) throw Error(ErrorKind::input, "corpus has no frames: " + corpus_dir.string());

  std::vector<LabeledFrame> frames(files.size());
  parallel_for(files.size(), effective_threads(cfg), [&](std::size_t i) {
    frames[i].frame = load_frame(files[i]);
    frames[i].gt = boxes_from_json(read_file(corpus_dir / "gt" / (files[i].stem().string() + ".json")));
  });

  const std::vector<SweepSetting> settings = cfg.sweep();
  const std::vector<EvalReport> reports =
      evaluate_sweep(frames, cfg.pipeline(), settings, cfg.iou_thresholds, effective_threads(cfg));

  make_dir(out_dir);
  std::string csv = "iou,tp,fp,fn,precision,recall,f1,setting_id\n";
  std::string weighted = "iou,weighted_f1,setting_id\n";
  for (const EvalReport& r : reports) {
    csv += real(r.iou_threshold) + ',' + std::to_string(r.tp) + ',' + std::to_string(r.fp) + ',' +
           std::to_string(r.fn) + ',' + real(r.precision) + ',' + real(r.recall) + ',' + real(r.f1) +
           ',' + std::to_string(r.setting_id) + '\n';
    weighted += real(r.iou_threshold) + ',' + real(r.weighted_f1) + ',' + std::to_string(r.setting_id) + '\n';
  }
  std::string table = "setting_id,amplitude,substeps,restore,rp_update\n";
  for (const SweepSetting& s : settings) {
    table += std::to_string(s.id) + ',' + real(s.amplitude) + ',' + std::to_string(s.substeps) + ',' +
             (cfg.restore ? "true" : "false") + ',' + (cfg.rp.consolidate ? "true" : "false") + '\n';
  }
  write_file_atomic(out_dir / "eval.csv", csv);
  write_file_atomic(out_dir / "eval_weighted.csv", weighted);
  write_file_atomic(out_dir / "settings.csv", table);
}

void cmd_probe(const RunConfig& cfg, const fs::path& out_dir) {
  cfg.validate();
  std::string csv = "location,steps\n";
  for (ProbeLocation loc : {ProbeLocation::center, ProbeLocation::corner}) {
    const ProbeResult r = probe_diffusion_speed(cfg.probe_width, cfg.probe_height, loc, cfg.diffusion,
                                                cfg.ring, cfg.probe_max_substeps);
    csv += std::string(to_string(loc)) + ',' + std::to_string(r.steps_to_threshold) + '\n';
  }
  make_dir(out_dir);
  write_file_atomic(out_dir / "probe.csv", csv);
}

}  // namespace cramsim

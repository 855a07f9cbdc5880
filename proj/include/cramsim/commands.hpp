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

#include <filesystem>
#include <vector>

#include "cramsim/run_config.hpp"

namespace cramsim {

namespace fs = std::filesystem;

// Corpus layout written by cmd_synth and read by cmd_eval:
//   <dir>/frames/frame_NNNNN.pbm   pipeline input (objects, stripes, noise)
//   <dir>/clean/frame_NNNNN.pbm    objects only
//   <dir>/gt/frame_NNNNN.json      ground-truth boxes
//   <dir>/manifest.csv             frame_id,n_objects,noise_pixels
//   <dir>/config.cfg               effective configuration
void cmd_synth(const RunConfig& cfg, const fs::path& out_dir);

/// Restores every input frame (files, or directories of .pbm files) into
/// out_dir/<stem>.pbm, optional <stem>.pgm analog snapshots, and
/// out_dir/restore.csv with blank-frame flags.
void cmd_restore(const RunConfig& cfg, const std::vector<fs::path>& inputs, const fs::path& out_dir);

/// Region proposal per input frame: out_dir/<stem>.json plus out_dir/cycles.csv.
void cmd_propose(const RunConfig& cfg, const std::vector<fs::path>& inputs, const fs::path& out_dir);

/// Evaluates a synthetic corpus over the configured sweep: eval.csv,
/// eval_weighted.csv, settings.csv.
void cmd_eval(const RunConfig& cfg, const fs::path& corpus_dir, const fs::path& out_dir);

/// Center and corner diffusion-speed probe: out_dir/probe.csv.
void cmd_probe(const RunConfig& cfg, const fs::path& out_dir);

/// Expands inputs into a sorted list of .pbm files.
std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs);

/// Worker count: CRAM_SIM_THREADS when set, otherwise cfg.threads.
std::size_t effective_threads(const RunConfig& cfg);

}  // namespace cramsim

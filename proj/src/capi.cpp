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

#include "cram_sim.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "cramsim/commands.hpp"
#include "cramsim/diffusion.hpp"
#include "cramsim/error.hpp"
#include "cramsim/io.hpp"
#include "cramsim/projection.hpp"
#include "cramsim/run_config.hpp"

struct cram_config {
  cramsim::RunConfig cfg;
};

struct cram_frame {
  cramsim::BinaryFrame frame;
};

struct cram_boxes {
  std::vector<cramsim::Box> boxes;
};

namespace {

thread_local std::string g_last_error;

cram_status fail(cram_status code, const std::string& what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
cram_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return CRAM_OK;
  } catch (const cramsim::Error& e) {
    return fail(static_cast<cram_status>(static_cast<int>(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CRAM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CRAM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CRAM_ERR_INTERNAL, "unknown error");
  }
}

cram_status null_arg(const char* name) {
  return fail(CRAM_ERR_INPUT, std::string("null argument: ") + name);
}

cram_status copy_out(const std::string& value, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = value.size() + 1;
  if (!buf) return CRAM_OK;
  if (len < value.size() + 1) return fail(CRAM_ERR_INPUT, "buffer too small");
  std::memcpy(buf, value.c_str(), value.size() + 1);
  return CRAM_OK;
}

std::vector<std::filesystem::path> paths(const char* const* inputs, size_t n) {
  std::vector<std::filesystem::path> out;
  for (size_t i = 0; i < n; ++i) {
    if (!inputs[i]) throw cramsim::Error(cramsim::ErrorKind::input, "null input path");
    out.emplace_back(inputs[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char* cram_version(void) { return "1.0.0"; }

const char* cram_last_error(void) { return g_last_error.c_str(); }

cram_status cram_config_create(cram_config** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = new cram_config{}; });
}

void cram_config_destroy(cram_config* cfg) { delete cfg; }

cram_status cram_config_load(cram_config* cfg, const char* path) {
  if (!cfg || !path) return null_arg("cfg/path");
  return guarded([&] { cfg->cfg.load(path); });
}

cram_status cram_config_set(cram_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return null_arg("cfg/key/value");
  return guarded([&] { cfg->cfg.set(key, value); });
}

cram_status cram_config_get(const cram_config* cfg, const char* key, char* buf, size_t len,
                            size_t* needed) {
  if (!cfg || !key) return null_arg("cfg/key");
  std::string value;
  const cram_status st = guarded([&] { value = cfg->cfg.get(key); });
  if (st != CRAM_OK) return st;
  return copy_out(value, buf, len, needed);
}

cram_status cram_config_validate(const cram_config* cfg) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] { cfg->cfg.validate(); });
}

cram_status cram_frame_create(uint32_t width, uint32_t height, cram_frame** out) {
  if (!out) return null_arg("out");
  if (width == 0 || height == 0 || width > cramsim::kMaxFrameDim || height > cramsim::kMaxFrameDim)
    return fail(CRAM_ERR_INPUT, "frame dimensions outside 1..4096");
  return guarded([&] { *out = new cram_frame{cramsim::BinaryFrame(width, height)}; });
}

cram_status cram_frame_load(const char* path, cram_frame** out) {
  if (!path || !out) return null_arg("path/out");
  return guarded([&] { *out = new cram_frame{cramsim::load_frame(path)}; });
}

cram_status cram_frame_save(const cram_frame* frame, const char* path) {
  if (!frame || !path) return null_arg("frame/path");
  return guarded([&] { cramsim::save_frame(frame->frame, path); });
}

cram_status cram_frame_from_events(const char* path, uint32_t t_start, uint32_t t_end, uint32_t width,
                                   uint32_t height, cram_polarity polarity, cram_frame** out) {
  if (!path || !out) return null_arg("path/out");
  return guarded([&] {
    const auto events = cramsim::load_events(path);
    const auto mode =
        polarity == CRAM_POLARITY_POSITIVE ? cramsim::PolarityMode::positive_only : cramsim::PolarityMode::any;
    *out = new cram_frame{cramsim::frame_from_events(events, t_start, t_end, width, height, mode)};
  });
}

void cram_frame_destroy(cram_frame* frame) { delete frame; }

uint32_t cram_frame_width(const cram_frame* frame) {
  return frame ? static_cast<uint32_t>(frame->frame.width()) : 0;
}

uint32_t cram_frame_height(const cram_frame* frame) {
  return frame ? static_cast<uint32_t>(frame->frame.height()) : 0;
}

int cram_frame_get(const cram_frame* frame, uint32_t x, uint32_t y) {
  if (!frame || x >= frame->frame.width() || y >= frame->frame.height()) return -1;
  return frame->frame.at(y, x);
}

cram_status cram_frame_set(cram_frame* frame, uint32_t x, uint32_t y, int value) {
  if (!frame) return null_arg("frame");
  if (x >= frame->frame.width() || y >= frame->frame.height())
    return fail(CRAM_ERR_INPUT, "pixel outside frame");
  frame->frame.set(y, x, value != 0);
  return CRAM_OK;
}

size_t cram_frame_popcount(const cram_frame* frame) { return frame ? frame->frame.popcount() : 0; }

cram_status cram_restore(const cram_config* cfg, const cram_frame* in, cram_frame** out) {
  if (!cfg || !in || !out) return null_arg("cfg/in/out");
  return guarded([&] {
    *out = new cram_frame{cramsim::restore_image(in->frame, cfg->cfg.diffusion, cfg->cfg.ring)};
  });
}

int cram_blank_frame(const cram_frame* frame, size_t max_ones) {
  if (!frame) return -1;
  return cramsim::blank_frame_detect(frame->frame, max_ones) ? 1 : 0;
}

cram_status cram_propose(const cram_config* cfg, const cram_frame* frame, cram_boxes** out,
                         uint64_t* imc_cycles, uint64_t* total_cycles) {
  if (!cfg || !frame || !out) return null_arg("cfg/frame/out");
  return guarded([&] {
    cramsim::RegionProposal rp = cramsim::region_propose(frame->frame, cfg->cfg.rp);
    if (imc_cycles) *imc_cycles = cramsim::imc_cycles(rp.trace, cfg->cfg.costs);
    if (total_cycles) *total_cycles = cramsim::trace_cycles(rp.trace, cfg->cfg.costs);
    *out = new cram_boxes{std::move(rp.boxes)};
  });
}

size_t cram_boxes_count(const cram_boxes* boxes) { return boxes ? boxes->boxes.size() : 0; }

cram_status cram_boxes_get(const cram_boxes* boxes, size_t index, cram_box* out) {
  if (!boxes || !out) return null_arg("boxes/out");
  if (index >= boxes->boxes.size()) return fail(CRAM_ERR_INPUT, "box index out of range");
  const cramsim::Box& b = boxes->boxes[index];
  *out = cram_box{static_cast<uint32_t>(b.c0), static_cast<uint32_t>(b.r0), static_cast<uint32_t>(b.c1),
                  static_cast<uint32_t>(b.r1)};
  return CRAM_OK;
}

cram_status cram_boxes_json(const cram_boxes* boxes, char* buf, size_t len, size_t* needed) {
  if (!boxes) return null_arg("boxes");
  std::string json;
  const cram_status st = guarded([&] { json = cramsim::boxes_to_json(boxes->boxes); });
  if (st != CRAM_OK) return st;
  return copy_out(json, buf, len, needed);
}

void cram_boxes_destroy(cram_boxes* boxes) { delete boxes; }

cram_status cram_probe(const cram_config* cfg, cram_probe_location location, uint64_t* steps) {
  if (!cfg || !steps) return null_arg("cfg/steps");
  return guarded([&] {
    const auto loc = location == CRAM_PROBE_CORNER ? cramsim::ProbeLocation::corner
                                                   : cramsim::ProbeLocation::center;
    const auto& c = cfg->cfg;
    *steps = cramsim::probe_diffusion_speed(c.probe_width, c.probe_height, loc, c.diffusion, c.ring,
                                            c.probe_max_substeps)
                 .steps_to_threshold;
  });
}

uint64_t cram_minimal_cycles_imc(uint64_t n_objects) { return cramsim::minimal_cycles_imc(n_objects); }

uint64_t cram_minimal_cycles_total(uint64_t n_objects) { return cramsim::minimal_cycles_total(n_objects); }

cram_status cram_cmd_synth(const cram_config* cfg, const char* out_dir) {
  if (!cfg || !out_dir) return null_arg("cfg/out_dir");
  return guarded([&] { cramsim::cmd_synth(cfg->cfg, out_dir); });
}

cram_status cram_cmd_restore(const cram_config* cfg, const char* const* inputs, size_t n_inputs,
                             const char* out_dir) {
  if (!cfg || (!inputs && n_inputs) || !out_dir) return null_arg("cfg/inputs/out_dir");
  return guarded([&] { cramsim::cmd_restore(cfg->cfg, paths(inputs, n_inputs), out_dir); });
}

cram_status cram_cmd_propose(const cram_config* cfg, const char* const* inputs, size_t n_inputs,
                             const char* out_dir) {
  if (!cfg || (!inputs && n_inputs) || !out_dir) return null_arg("cfg/inputs/out_dir");
  return guarded([&] { cramsim::cmd_propose(cfg->cfg, paths(inputs, n_inputs), out_dir); });
}

cram_status cram_cmd_eval(const cram_config* cfg, const char* corpus_dir, const char* out_dir) {
  if (!cfg || !corpus_dir || !out_dir) return null_arg("cfg/corpus_dir/out_dir");
  return guarded([&] { cramsim::cmd_eval(cfg->cfg, corpus_dir, out_dir); });
}

cram_status cram_cmd_probe(const cram_config* cfg, const char* out_dir) {
  if (!cfg || !out_dir) return null_arg("cfg/out_dir");
  return guarded([&] { cramsim::cmd_probe(cfg->cfg, out_dir); });
}

}  // extern "C"

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

#include "cramsim/run_config.hpp"

#include <charconv>
#include <functional>
#include <string>

#include "cramsim/error.hpp"
#include "cramsim/io.hpp"

namespace cramsim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
  throw ConfigError("bad value '" + std::string(value) + "' for " + std::string(key) + ": expected " +
                    expected);
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
  v = trim(v);
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
    bad_value(key, v, "a non-negative integer");
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  v = trim(v);
  double out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) bad_value(key, v, "a number");
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  v = trim(v);
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  bad_value(key, v, "a boolean");
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view key, std::string_view v, Parse parse) {
  std::vector<T> out;
  v = trim(v);
  if (v.empty()) return out;
  while (true) {
    const std::size_t comma = v.find(',');
    out.push_back(static_cast<T>(parse(key, v.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

std::string fmt(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, ptr);
}
std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string fmt_list(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) out += fmt(static_cast<double>(xs[i]));
    else out += fmt(static_cast<std::uint64_t>(xs[i]));
  }
  return out;
}

struct Field {
  const char* key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;  // empty for write-only aliases
};

#define CRAM_SIZE(KEY, MEMBER)                                                                      \
  Field {                                                                                           \
    KEY, [](RunConfig& c, std::string_view v) { c.MEMBER = parse_u64(KEY, v); },                   \
        [](const RunConfig& c) { return fmt(static_cast<std::uint64_t>(c.MEMBER)); }                \
  }
#define CRAM_REAL(KEY, MEMBER)                                                                      \
  Field {                                                                                           \
    KEY, [](RunConfig& c, std::string_view v) { c.MEMBER = parse_double(KEY, v); },                \
        [](const RunConfig& c) { return fmt(c.MEMBER); }                                            \
  }
#define CRAM_BOOL(KEY, MEMBER)                                                                      \
  Field {                                                                                           \
    KEY, [](RunConfig& c, std::string_view v) { c.MEMBER = parse_bool(KEY, v); },                  \
        [](const RunConfig& c) { return fmt(c.MEMBER); }                                            \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      CRAM_SIZE("frame.width", width),
      CRAM_SIZE("frame.height", height),
      CRAM_SIZE("frame.ring", ring),

      CRAM_REAL("diffusion.alpha", diffusion.alpha),
      CRAM_REAL("diffusion.amplitude", diffusion.amplitude),
      CRAM_SIZE("diffusion.substeps", diffusion.substeps_per_pulse),
      CRAM_SIZE("diffusion.pulses", diffusion.pulses),
      CRAM_REAL("diffusion.vth", diffusion.vth),
      CRAM_BOOL("diffusion.redigitize", diffusion.redigitize_between_pulses),

      CRAM_BOOL("restore.enabled", restore),
      CRAM_SIZE("restore.blank_max_ones", blank_max_ones),
      CRAM_BOOL("restore.emit_analog", emit_analog),

      Field{"projection.dac_code",
            [](RunConfig& c, std::string_view v) {
              const auto code = parse_u64("projection.dac_code", v);
              if (code > 15) bad_value("projection.dac_code", v, "an integer in 0..15");
              c.rp.projection.dac_code = static_cast<int>(code);
            },
            [](const RunConfig& c) { return std::to_string(c.rp.projection.dac_code); }},
      CRAM_REAL("projection.lambda", rp.projection.lambda),

      CRAM_SIZE("rp.size_min", rp.size_min),
      Field{"rp.size_metric",
            [](RunConfig& c, std::string_view v) {
              v = trim(v);
              if (v == "area") c.rp.size_metric = SizeMetric::area;
              else if (v == "max_side") c.rp.size_metric = SizeMetric::max_side;
              else bad_value("rp.size_metric", v, "'area' or 'max_side'");
            },
            [](const RunConfig& c) {
              return std::string(c.rp.size_metric == SizeMetric::area ? "area" : "max_side");
            }},
      Field{"rp.slot",
            [](RunConfig& c, std::string_view v) {
              c.rp.slot_r = c.rp.slot_c = parse_u64("rp.slot", v);
            },
            {}},
      CRAM_SIZE("rp.slot_r", rp.slot_r),
      CRAM_SIZE("rp.slot_c", rp.slot_c),
      CRAM_SIZE("rp.max_iters", rp.max_iters),
      CRAM_BOOL("rp.update", rp.consolidate),

      CRAM_BOOL("propose.restore", propose_restore),

      CRAM_SIZE("cost.full_axis_projection", costs.cycles[0]),
      CRAM_SIZE("cost.region_projection", costs.cycles[1]),
      CRAM_SIZE("cost.controller_object", costs.cycles[2]),
      CRAM_SIZE("cost.controller_fixed", costs.cycles[3]),

      Field{"eval.iou",
            [](RunConfig& c, std::string_view v) {
              c.iou_thresholds = parse_list<double>("eval.iou", v, parse_double);
            },
            [](const RunConfig& c) { return fmt_list(c.iou_thresholds); }},
      Field{"eval.sweep.amplitudes",
            [](RunConfig& c, std::string_view v) {
              c.sweep_amplitudes = parse_list<double>("eval.sweep.amplitudes", v, parse_double);
            },
            [](const RunConfig& c) { return fmt_list(c.sweep_amplitudes); }},
      Field{"eval.sweep.substeps",
            [](RunConfig& c, std::string_view v) {
              c.sweep_substeps = parse_list<std::size_t>("eval.sweep.substeps", v, parse_u64);
            },
            [](const RunConfig& c) { return fmt_list(c.sweep_substeps); }},

      CRAM_SIZE("synth.frames", synth.frames),
      Field{"synth.layout",
            [](RunConfig& c, std::string_view v) {
              v = trim(v);
              if (v == "random") c.synth.layout = SceneLayout::random;
              else if (v == "diagonal") c.synth.layout = SceneLayout::diagonal;
              else bad_value("synth.layout", v, "'random' or 'diagonal'");
            },
            [](const RunConfig& c) {
              return std::string(c.synth.layout == SceneLayout::random ? "random" : "diagonal");
            }},
      CRAM_SIZE("synth.objects_min", synth.objects_min),
      CRAM_SIZE("synth.objects_max", synth.objects_max),
      CRAM_REAL("synth.occupancy", synth.occupancy),
      CRAM_SIZE("synth.min_side", synth.min_side),
      CRAM_SIZE("synth.min_separation", synth.min_separation),
      CRAM_REAL("synth.noise", synth.noise),
      CRAM_SIZE("synth.frag_gap", synth.frag_gap),
      CRAM_REAL("synth.frag_prob", synth.frag_prob),
      CRAM_SIZE("synth.diagonal_objects", synth.diagonal_objects),
      CRAM_SIZE("synth.diagonal_blob", synth.diagonal_blob),
      CRAM_SIZE("synth.seed", synth.seed),

      CRAM_SIZE("probe.width", probe_width),
      CRAM_SIZE("probe.height", probe_height),
      CRAM_SIZE("probe.max_substeps", probe_max_substeps),

      CRAM_SIZE("threads", threads),
  };
  return table;
}

#undef CRAM_SIZE
#undef CRAM_REAL
#undef CRAM_BOOL

const Field& find_field(std::string_view key) {
  for (const Field& f : fields())
    if (key == f.key) return f;
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
  find_field(trim(key)).set(*this, value);
}

std::string RunConfig::get(std::string_view key) const {
  const Field& f = find_field(trim(key));
  if (!f.get) throw ConfigError("config key '" + std::string(key) + "' is write-only");
  return f.get(*this);
}

void RunConfig::parse(std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::load(const std::filesystem::path& path) { parse(read_file(path)); }

std::string RunConfig::to_text() const {
  std::string out;
  for (const Field& f : fields()) {
    if (!f.get) continue;
    out += f.key;
    out += " = ";
    out += f.get(*this);
    out += '\n';
  }
  return out;
}

void RunConfig::validate() const {
  if (width == 0 || height == 0 || width > 4096 || height > 4096)
    throw ConfigError("frame geometry must be within 1..4096");
  diffusion.validate();
  rp.validate();
  synth_config().validate();
  for (double t : iou_thresholds)
    if (!(t > 0.0 && t <= 1.0)) throw ConfigError("eval.iou thresholds must be in (0, 1]");
  if (iou_thresholds.empty()) throw ConfigError("eval.iou needs at least one threshold");
  for (const SweepSetting& s : sweep()) {
    DiffusionConfig d = diffusion;
    d.amplitude = s.amplitude;
    d.substeps_per_pulse = s.substeps;
    d.validate();
  }
  if (probe_width < 4 || probe_height < 4) throw ConfigError("probe grid must be at least 4x4");
}

PipelineConfig RunConfig::pipeline() const {
  PipelineConfig p;
  p.restore = restore;
  p.diffusion = diffusion;
  p.ring = ring;
  p.rp = rp;
  return p;
}

SynthConfig RunConfig::synth_config() const {
  SynthConfig s = synth;
  s.width = width;
  s.height = height;
  return s;
}

std::vector<SweepSetting> RunConfig::sweep() const {
  const std::vector<double> amps =
      sweep_amplitudes.empty() ? std::vector<double>{diffusion.amplitude} : sweep_amplitudes;
  const std::vector<std::size_t> subs = sweep_substeps.empty()
                                            ? std::vector<std::size_t>{diffusion.substeps_per_pulse}
                                            : sweep_substeps;
  return sweep_grid(amps, subs);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const Field& f : fields()) keys.emplace_back(f.key);
  return keys;
}

}  // namespace cramsim

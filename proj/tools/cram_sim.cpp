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

// cram-sim: command-line front end over the libcramsim C API.
//
//   cram-sim <synth|restore|propose|eval|probe> --config <path> [--key value ...] [--out <dir>]
//
// Exit codes: 0 success, 1 input/parse error, 2 configuration error,
// 3 internal guard (e.g. probe non-termination).

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "cram_sim.h"

namespace {

struct ConfigDeleter {
  void operator()(cram_config* c) const { cram_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<cram_config, ConfigDeleter>;

int report(cram_status st) {
  if (st != CRAM_OK) std::fprintf(stderr, "cram-sim: %s\n", cram_last_error());
  return static_cast<int>(st);
}

// Remaining arguments are `--key value` or `--key=value` config overrides.
cram_status apply_overrides(cram_config* cfg, const std::vector<std::string>& extras) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& arg = extras[i];
    if (arg.rfind("--", 0) != 0) {
      std::fprintf(stderr, "cram-sim: unexpected argument '%s'\n", arg.c_str());
      return CRAM_ERR_INPUT;
    }
    std::string key = arg.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else if (i + 1 < extras.size()) {
      value = extras[++i];
    } else {
      std::fprintf(stderr, "cram-sim: missing value for --%s\n", key.c_str());
      return CRAM_ERR_INPUT;
    }
    if (cram_status st = cram_config_set(cfg, key.c_str(), value.c_str()); st != CRAM_OK) return st;
  }
  return CRAM_OK;
}

std::vector<const char*> c_strings(const std::vector<std::string>& xs) {
  std::vector<const char*> out;
  out.reserve(xs.size());
  for (const auto& s : xs) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavioral simulator for CRAM in-memory image restoration and region proposal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cram_version()));

  std::string config_path;
  std::string out_dir = "cram-sim-out";
  std::vector<std::string> inputs;
  std::string corpus;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Config file (flat `section.key = value` lines)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory");
    sub->allow_extras();
    return sub;
  };

  auto* synth = add_common(app.add_subcommand("synth", "Generate a synthetic corpus with ground truth"));
  auto* restore = add_common(app.add_subcommand("restore", "Run diffusion restoration on frames"));
  restore->add_option("--input", inputs, "PBM frames or directories")->required();
  auto* propose = add_common(app.add_subcommand("propose", "Region proposal with cycle report"));
  propose->add_option("--input", inputs, "PBM frames or directories")->required();
  auto* eval = add_common(app.add_subcommand("eval", "Evaluate a corpus against ground truth"));
  eval->add_option("--corpus", corpus, "Corpus directory written by `synth`")->required();
  auto* probe = add_common(app.add_subcommand("probe", "Center vs corner diffusion-speed probe"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(CRAM_ERR_INPUT);
  }

  cram_config* raw = nullptr;
  if (cram_status st = cram_config_create(&raw); st != CRAM_OK) return report(st);
  ConfigPtr cfg(raw);
  if (cram_status st = cram_config_load(cfg.get(), config_path.c_str()); st != CRAM_OK) {
    // An unreadable file is an input error; bad contents are config errors.
    return report(st);
  }

  CLI::App* active = app.get_subcommands().front();
  if (cram_status st = apply_overrides(cfg.get(), active->remaining()); st != CRAM_OK) return report(st);
  if (cram_status st = cram_config_validate(cfg.get()); st != CRAM_OK) return report(st);

  const auto in = c_strings(inputs);
  cram_status st = CRAM_OK;
  if (active == synth) {
    st = cram_cmd_synth(cfg.get(), out_dir.c_str());
  } else if (active == restore) {
    st = cram_cmd_restore(cfg.get(), in.data(), in.size(), out_dir.c_str());
  } else if (active == propose) {
    st = cram_cmd_propose(cfg.get(), in.data(), in.size(), out_dir.c_str());
  } else if (active == eval) {
    st = cram_cmd_eval(cfg.get(), corpus.c_str(), out_dir.c_str());
  } else if (active == probe) {
    st = cram_cmd_probe(cfg.get(), out_dir.c_str());
  }
  return report(st);
}

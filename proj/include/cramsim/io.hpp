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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cramsim/grid.hpp"

namespace cramsim {

inline constexpr std::size_t kMaxFrameDim = 4096;

// PBM (P4) binary bitmap. 1 = black = event pixel, rows packed MSB first.
std::string encode_pbm(const BinaryFrame& frame);
BinaryFrame decode_pbm(std::string_view bytes);
BinaryFrame load_frame(const std::filesystem::path& path);
void save_frame(const BinaryFrame& frame, const std::filesystem::path& path);

/// 8-bit grayscale image, used for analog snapshots.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

// PGM (P5, maxval 255); voltage v is stored as round(v * 255).
GrayImage to_gray(const AnalogState& state, bool include_ring = false);
std::string encode_pgm(const GrayImage& image);
GrayImage decode_pgm(std::string_view bytes);
void save_analog(const AnalogState& state, const std::filesystem::path& path,
                 bool include_ring = false);

// Event streams. CSV has a `t,x,y,p` header; the binary form is packed
// little-endian records of u32 t, u16 x, u16 y, u8 p (9 bytes each).
// Readers reject timestamps that go backwards.
inline constexpr std::size_t kEventRecordSize = 9;

std::vector<Event> parse_events_csv(std::string_view text);
std::vector<Event> parse_events_binary(std::string_view bytes);
std::string encode_events_csv(const std::vector<Event>& events);
std::string encode_events_binary(const std::vector<Event>& events);

/// Dispatches on extension: `.csv` is text, anything else binary.
std::vector<Event> load_events(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
/// Write via a temp file in the same directory followed by rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace cramsim

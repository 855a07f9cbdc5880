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
#include <span>
#include <vector>

namespace cramsim {

inline constexpr std::size_t kDefaultWidth = 320;
inline constexpr std::size_t kDefaultHeight = 240;

/// One address event from the sensor: timestamp in microseconds, pixel
/// column/row and polarity bit.
struct Event {
  std::uint32_t t = 0;
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  std::uint8_t p = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Event-based binary image. Row-major, one byte per pixel holding 0 or 1.
class BinaryFrame {
 public:
  BinaryFrame() = default;
  BinaryFrame(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return bits_[row * width_ + col]; }
  void set(std::size_t row, std::size_t col, bool value) {
    bits_[row * width_ + col] = value ? 1 : 0;
  }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t popcount() const noexcept;

  BinaryFrame transposed() const;
  BinaryFrame flipped_horizontal() const;
  BinaryFrame flipped_vertical() const;

  friend bool operator==(const BinaryFrame&, const BinaryFrame&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Analog cell voltages (VDD == 1.0) for a frame surrounded by a dummy ring
/// of `ring` cells on every side. Indexing is in padded coordinates:
/// row/col 0 is the outermost ring cell.
class AnalogState {
 public:
  AnalogState() = default;
  AnalogState(std::size_t width, std::size_t height, std::size_t ring);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t ring() const noexcept { return ring_; }
  std::size_t padded_width() const noexcept { return width_ + 2 * ring_; }
  std::size_t padded_height() const noexcept { return height_ + 2 * ring_; }
  std::size_t cell_count() const noexcept { return volts_.size(); }

  double at(std::size_t prow, std::size_t pcol) const { return volts_[prow * padded_width() + pcol]; }
  double& at(std::size_t prow, std::size_t pcol) { return volts_[prow * padded_width() + pcol]; }

  // Interior (frame) coordinates.
  double pixel(std::size_t row, std::size_t col) const { return at(row + ring_, col + ring_); }
  double& pixel(std::size_t row, std::size_t col) { return at(row + ring_, col + ring_); }

  std::span<const double> volts() const noexcept { return volts_; }
  std::span<double> volts() noexcept { return volts_; }

  double total_charge() const noexcept;
  void clear_ring() noexcept;

  AnalogState transposed() const;
  AnalogState flipped_horizontal() const;
  AnalogState flipped_vertical() const;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::size_t ring_ = 0;
  std::vector<double> volts_;
};

enum class PolarityMode { any, positive_only };

/// Accumulate events with t in [t_start, t_end) into a binary frame.
/// Throws EventRangeError naming the first event outside the frame.
BinaryFrame frame_from_events(std::span<const Event> events, std::uint32_t t_start,
                              std::uint32_t t_end, std::size_t width, std::size_t height,
                              PolarityMode mode = PolarityMode::any);

/// Load the frame into the cell array: interior = pixel value, ring = 0.
AnalogState embed(const BinaryFrame& frame, std::size_t ring = 1);

}  // namespace cramsim

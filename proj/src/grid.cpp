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

#include "cramsim/grid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cramsim/error.hpp"

namespace cramsim {

BinaryFrame::BinaryFrame(std::size_t width, std::size_t height)
    : width_(width), height_(height), bits_(width * height, 0) {}

std::size_t BinaryFrame::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryFrame BinaryFrame::transposed() const {
  BinaryFrame out(height_, width_);
  for (std::size_t r = 0; r < height_; ++r)
    for (std::size_t c = 0; c < width_; ++c) out.set(c, r, at(r, c));
  return out;
}

BinaryFrame BinaryFrame::flipped_horizontal() const {
  BinaryFrame out(width_, height_);
  for (std::size_t r = 0; r < height_; ++r)
    for (std::size_t c = 0; c < width_; ++c) out.set(r, width_ - 1 - c, at(r, c));
  return out;
}

BinaryFrame BinaryFrame::flipped_vertical() const {
  BinaryFrame out(width_, height_);
  for (std::size_t r = 0; r < height_; ++r)
    for (std::size_t c = 0; c < width_; ++c) out.set(height_ - 1 - r, c, at(r, c));
  return out;
}

AnalogState::AnalogState(std::size_t width, std::size_t height, std::size_t ring)
    : width_(width), height_(height), ring_(ring),
      volts_((width + 2 * ring) * (height + 2 * ring), 0.0) {}

double AnalogState::total_charge() const noexcept {
  return std::accumulate(volts_.begin(), volts_.end(), 0.0);
}

void AnalogState::clear_ring() noexcept {
  const std::size_t pw = padded_width();
  const std::size_t ph = padded_height();
  for (std::size_t r = 0; r < ph; ++r) {
    const bool ring_row = r < ring_ || r >= ring_ + height_;
    for (std::size_t c = 0; c < pw; ++c) {
      if (ring_row || c < ring_ || c >= ring_ + width_) volts_[r * pw + c] = 0.0;
    }
  }
}

AnalogState AnalogState::transposed() const {
  AnalogState out(height_, width_, ring_);
  for (std::size_t r = 0; r < padded_height(); ++r)
    for (std::size_t c = 0; c < padded_width(); ++c) out.at(c, r) = at(r, c);
  return out;
}

AnalogState AnalogState::flipped_horizontal() const {
  AnalogState out(width_, height_, ring_);
  const std::size_t pw = padded_width();
  for (std::size_t r = 0; r < padded_height(); ++r)
    for (std::size_t c = 0; c < pw; ++c) out.at(r, pw - 1 - c) = at(r, c);
  return out;
}

AnalogState AnalogState::flipped_vertical() const {
  AnalogState out(width_, height_, ring_);
  const std::size_t ph = padded_height();
  for (std::size_t r = 0; r < ph; ++r)
    for (std::size_t c = 0; c < padded_width(); ++c) out.at(ph - 1 - r, c) = at(r, c);
  return out;
}

BinaryFrame frame_from_events(std::span<const Event> events, std::uint32_t t_start,
                              std::uint32_t t_end, std::size_t width, std::size_t height,
                              PolarityMode mode) {
  BinaryFrame frame(width, height);
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (e.x >= width || e.y >= height) {
      throw EventRangeError(i, "event at (x=" + std::to_string(e.x) + ", y=" +
                                   std::to_string(e.y) + ") outside " + std::to_string(width) +
                                   "x" + std::to_string(height) + " frame");
    }
    if (e.t < t_start || e.t >= t_end) continue;
    if (mode == PolarityMode::positive_only && e.p == 0) continue;
    frame.set(e.y, e.x, true);
  }
  return frame;
}

AnalogState embed(const BinaryFrame& frame, std::size_t ring) {
  AnalogState state(frame.width(), frame.height(), ring);
  for (std::size_t r = 0; r < frame.height(); ++r)
    for (std::size_t c = 0; c < frame.width(); ++c)
      state.pixel(r, c) = frame.at(r, c) ? 1.0 : 0.0;
  return state;
}

}  // namespace cramsim

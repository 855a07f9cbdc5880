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

#include "cramsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cramsim/error.hpp"

namespace cramsim {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

// Netpbm header reader: magic, then whitespace/comment separated decimals.
class HeaderCursor {
 public:
  explicit HeaderCursor(std::string_view bytes) : bytes_(bytes) {}

  void expect_magic(std::string_view magic) {
    if (bytes_.substr(0, magic.size()) != magic)
      throw ParseError(0, "bad magic, expected " + std::string(magic));
    pos_ = magic.size();
  }

  std::size_t number(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(start, std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, std::string("expected ") + what);
    return value;
  }

  // Exactly one whitespace byte separates the header from the raster.
  std::size_t end_of_header() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
      throw ParseError(pos_, "expected whitespace after header");
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
      throw ParseError(pos_, "expected whitespace");
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

void check_dims(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0 || w > kMaxFrameDim || h > kMaxFrameDim)
    throw ParseError(0, "frame dimensions " + std::to_string(w) + "x" + std::to_string(h) +
                            " outside 1.." + std::to_string(kMaxFrameDim));
}

std::string header(std::string_view magic, std::size_t w, std::size_t h) {
  std::string out(magic);
  out += '\n';
  out += std::to_string(w);
  out += ' ';
  out += std::to_string(h);
  out += '\n';
  return out;
}

template <typename T>
T read_le(std::string_view bytes, std::size_t at) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    value |= static_cast<T>(static_cast<T>(static_cast<unsigned char>(bytes[at + i])) << (8 * i));
  return value;
}

template <typename T>
void write_le(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
}

}  // namespace

std::string encode_pbm(const BinaryFrame& frame) {
  std::string out = header("P4", frame.width(), frame.height());
  const std::size_t row_bytes = (frame.width() + 7) / 8;
  for (std::size_t r = 0; r < frame.height(); ++r) {
    for (std::size_t b = 0; b < row_bytes; ++b) {
      unsigned byte = 0;
      for (std::size_t k = 0; k < 8; ++k) {
        const std::size_t c = b * 8 + k;
        if (c < frame.width() && frame.at(r, c)) byte |= 0x80u >> k;
      }
      out.push_back(static_cast<char>(byte));
    }
  }
  return out;
}

BinaryFrame decode_pbm(std::string_view bytes) {
  HeaderCursor cur(bytes);
  cur.expect_magic("P4");
  const std::size_t w = cur.number("width");
  const std::size_t h = cur.number("height");
  const std::size_t data = cur.end_of_header();
  check_dims(w, h);
  const std::size_t row_bytes = (w + 7) / 8;
  const std::size_t need = row_bytes * h;
  if (bytes.size() < data + need)
    throw ParseError(bytes.size(), "truncated payload: expected " + std::to_string(need) +
                                       " bytes, got " + std::to_string(bytes.size() - data));
  BinaryFrame frame(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const auto byte = static_cast<unsigned char>(bytes[data + r * row_bytes + c / 8]);
      frame.set(r, c, (byte & (0x80u >> (c % 8))) != 0);
    }
  }
  return frame;
}

BinaryFrame load_frame(const std::filesystem::path& path) { return decode_pbm(read_file(path)); }

void save_frame(const BinaryFrame& frame, const std::filesystem::path& path) {
  write_file_atomic(path, encode_pbm(frame));
}

GrayImage to_gray(const AnalogState& state, bool include_ring) {
  GrayImage img;
  const std::size_t off = include_ring ? 0 : state.ring();
  img.width = include_ring ? state.padded_width() : state.width();
  img.height = include_ring ? state.padded_height() : state.height();
  img.pixels.reserve(img.width * img.height);
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      const double v = std::clamp(state.at(r + off, c + off), 0.0, 1.0);
      img.pixels.push_back(static_cast<std::uint8_t>(std::lround(v * 255.0)));
    }
  }
  return img;
}

std::string encode_pgm(const GrayImage& image) {
  std::string out = header("P5", image.width, image.height);
  out += "255\n";
  out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
  return out;
}

GrayImage decode_pgm(std::string_view bytes) {
  HeaderCursor cur(bytes);
  cur.expect_magic("P5");
  GrayImage img;
  img.width = cur.number("width");
  img.height = cur.number("height");
  const std::size_t maxval = cur.number("maxval");
  const std::size_t data = cur.end_of_header();
  check_dims(img.width, img.height);
  if (maxval != 255) throw ParseError(data - 1, "only maxval 255 is supported");
  const std::size_t need = img.width * img.height;
  if (bytes.size() < data + need) throw ParseError(bytes.size(), "truncated payload");
  img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(data),
                    bytes.begin() + static_cast<std::ptrdiff_t>(data + need));
  return img;
}

void save_analog(const AnalogState& state, const std::filesystem::path& path, bool include_ring) {
  write_file_atomic(path, encode_pgm(to_gray(state, include_ring)));
}

std::vector<Event> parse_events_csv(std::string_view text) {
  std::vector<Event> events;
  std::size_t pos = 0;
  bool header_seen = false;
  std::uint32_t last_t = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t line_start = pos;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "t,x,y,p") throw ParseError(line_start, "expected header 't,x,y,p'");
      header_seen = true;
      continue;
    }
    std::uint64_t fields[4] = {};
    std::size_t at = 0;
    for (int f = 0; f < 4; ++f) {
      const char* begin = line.data() + at;
      const char* end = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(begin, end, fields[f]);
      if (ec != std::errc{} || ptr == begin)
        throw ParseError(line_start + at, "expected unsigned integer field");
      at = static_cast<std::size_t>(ptr - line.data());
      if (f < 3) {
        if (at >= line.size() || line[at] != ',') throw ParseError(line_start + at, "expected ','");
        ++at;
      } else if (at != line.size()) {
        throw ParseError(line_start + at, "trailing characters");
      }
    }
    if (fields[0] > UINT32_MAX || fields[1] > UINT16_MAX || fields[2] > UINT16_MAX || fields[3] > 1)
      throw ParseError(line_start, "event field out of range");
    Event e{static_cast<std::uint32_t>(fields[0]), static_cast<std::uint16_t>(fields[1]),
            static_cast<std::uint16_t>(fields[2]), static_cast<std::uint8_t>(fields[3])};
    if (!events.empty() && e.t < last_t) throw ParseError(line_start, "timestamp goes backwards");
    last_t = e.t;
    events.push_back(e);
  }
  if (!header_seen) throw ParseError(0, "missing header 't,x,y,p'");
  return events;
}

std::vector<Event> parse_events_binary(std::string_view bytes) {
  if (bytes.size() % kEventRecordSize != 0)
    throw ParseError(bytes.size() - bytes.size() % kEventRecordSize, "truncated event record");
  std::vector<Event> events;
  events.reserve(bytes.size() / kEventRecordSize);
  for (std::size_t at = 0; at < bytes.size(); at += kEventRecordSize) {
    Event e{read_le<std::uint32_t>(bytes, at), read_le<std::uint16_t>(bytes, at + 4),
            read_le<std::uint16_t>(bytes, at + 6), read_le<std::uint8_t>(bytes, at + 8)};
    if (e.p > 1) throw ParseError(at + 8, "polarity must be 0 or 1");
    if (!events.empty() && e.t < events.back().t) throw ParseError(at, "timestamp goes backwards");
    events.push_back(e);
  }
  return events;
}

std::string encode_events_csv(const std::vector<Event>& events) {
  std::string out = "t,x,y,p\n";
  for (const Event& e : events) {
    out += std::to_string(e.t) + ',' + std::to_string(e.x) + ',' + std::to_string(e.y) + ',' +
           std::to_string(e.p) + '\n';
  }
  return out;
}

std::string encode_events_binary(const std::vector<Event>& events) {
  std::string out;
  out.reserve(events.size() * kEventRecordSize);
  for (const Event& e : events) {
    write_le(out, e.t);
    write_le(out, e.x);
    write_le(out, e.y);
    write_le(out, e.p);
  }
  return out;
}

std::vector<Event> load_events(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (path.extension() == ".csv") return parse_events_csv(bytes);
  return parse_events_binary(bytes);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::input, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::input, "cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::input, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::input, "cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace cramsim

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

#include "cramsim/box.hpp"

#include <json.hpp>

#include "cramsim/error.hpp"

namespace cramsim {

double iou(const Box& a, const Box& b) noexcept {
  const std::size_t r0 = std::max(a.r0, b.r0);
  const std::size_t r1 = std::min(a.r1, b.r1);
  const std::size_t c0 = std::max(a.c0, b.c0);
  const std::size_t c1 = std::min(a.c1, b.c1);
  if (r0 > r1 || c0 > c1) return 0.0;
  const double inter = static_cast<double>((r1 - r0 + 1) * (c1 - c0 + 1));
  const double uni = static_cast<double>(a.area() + b.area()) - inter;
  return inter / uni;
}

std::string boxes_to_json(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Box& b : boxes) {
    nlohmann::ordered_json o;
    o["x0"] = b.c0;
    o["y0"] = b.r0;
    o["x1"] = b.c1;
    o["y1"] = b.r1;
    arr.push_back(std::move(o));
  }
  return arr.dump() + "\n";
}

std::vector<Box> boxes_from_json(const std::string& text) {
  std::vector<Box> boxes;
  try {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw Error(ErrorKind::input, "box list must be a JSON array");
    for (const auto& o : arr) {
      Box b{o.at("y0").get<std::size_t>(), o.at("y1").get<std::size_t>(),
            o.at("x0").get<std::size_t>(), o.at("x1").get<std::size_t>()};
      if (b.r0 > b.r1 || b.c0 > b.c1) throw Error(ErrorKind::input, "inverted box extents");
      boxes.push_back(b);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::input, std::string("bad box JSON: ") + e.what());
  }
  return boxes;
}

}  // namespace cramsim

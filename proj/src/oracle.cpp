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

#include "cramsim/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "cramsim/error.hpp"
#include "cramsim/parallel.hpp"

namespace cramsim {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Component> ccl(const BinaryFrame& frame, Connectivity connectivity) {
  const std::size_t w = frame.width();
  const std::size_t h = frame.height();
  DisjointSet sets(w * h);
  const bool eight = connectivity == Connectivity::eight;

  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (!frame.at(r, c)) continue;
      const std::size_t idx = r * w + c;
      if (c > 0 && frame.at(r, c - 1)) sets.unite(idx, idx - 1);
      if (r > 0) {
        if (frame.at(r - 1, c)) sets.unite(idx, idx - w);
        if (eight && c > 0 && frame.at(r - 1, c - 1)) sets.unite(idx, idx - w - 1);
        if (eight && c + 1 < w && frame.at(r - 1, c + 1)) sets.unite(idx, idx - w + 1);
      }
    }
  }

  // Roots are the minimum index of their set, so first-seen order in the
  // raster scan is the label order.
  std::vector<std::size_t> label_of_root(w * h, 0);
  std::vector<Component> comps;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (!frame.at(r, c)) continue;
      const std::size_t root = sets.find(r * w + c);
      std::size_t& label = label_of_root[root];
      if (label == 0) {
        comps.push_back({comps.size() + 1, 0, Box{r, r, c, c}});
        label = comps.size();
      }
      Component& comp = comps[label - 1];
      ++comp.pixels;
      comp.bbox = bounding_union(comp.bbox, Box{r, r, c, c});
    }
  }
  return comps;
}

std::vector<Box> ccl_boxes(const BinaryFrame& frame, Connectivity connectivity) {
  std::vector<Box> boxes;
  for (const Component& comp : ccl(frame, connectivity)) boxes.push_back(comp.bbox);
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

MatchResult match_boxes(const std::vector<Box>& pred, const std::vector<Box>& gt, double iou_threshold) {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0))
    throw ConfigError("IoU threshold must be in (0, 1]");
  std::vector<MatchPair> eligible;
  for (std::size_t g = 0; g < gt.size(); ++g) {
    for (std::size_t p = 0; p < pred.size(); ++p) {
      const double v = iou(pred[p], gt[g]);
      if (v >= iou_threshold) eligible.push_back({p, g, v});
    }
  }
  std::stable_sort(eligible.begin(), eligible.end(), [](const MatchPair& a, const MatchPair& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    if (a.gt != b.gt) return a.gt < b.gt;
    return a.pred < b.pred;
  });

  MatchResult res;
  std::vector<bool> pred_used(pred.size(), false);
  std::vector<bool> gt_used(gt.size(), false);
  for (const MatchPair& m : eligible) {
    if (pred_used[m.pred] || gt_used[m.gt]) continue;
    pred_used[m.pred] = true;
    gt_used[m.gt] = true;
    res.pairs.push_back(m);
  }
  res.tp = res.pairs.size();
  res.fp = pred.size() - res.tp;
  res.fn = gt.size() - res.tp;
  return res;
}

void finalize_scores(EvalReport& r) {
  const double tp = static_cast<double>(r.tp);
  r.precision = r.tp + r.fp > 0 ? tp / static_cast<double>(r.tp + r.fp) : 0.0;
  r.recall = r.tp + r.fn > 0 ? tp / static_cast<double>(r.tp + r.fn) : 0.0;
  r.f1 = r.precision + r.recall > 0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
}

std::vector<Box> run_pipeline(const BinaryFrame& frame, const PipelineConfig& cfg) {
  if (cfg.restore) return region_propose(restore_image(frame, cfg.diffusion, cfg.ring), cfg.rp).boxes;
  return region_propose(frame, cfg.rp).boxes;
}

std::vector<EvalReport> evaluate(const std::vector<LabeledFrame>& frames, const PipelineConfig& cfg,
                                 const std::vector<double>& iou_thresholds, std::size_t threads) {
  if (frames.empty()) throw Error(ErrorKind::input, "evaluation needs at least one frame");
  if (cfg.restore) cfg.diffusion.validate();
  cfg.rp.validate();
  for (double t : iou_thresholds) {
    if (!(t > 0.0 && t <= 1.0)) throw ConfigError("IoU threshold must be in (0, 1]");
  }

  std::vector<std::vector<Box>> predictions(frames.size());
  parallel_for(frames.size(), threads,
               [&](std::size_t i) { predictions[i] = run_pipeline(frames[i].frame, cfg); });

  std::vector<EvalReport> reports;
  for (double t : iou_thresholds) {
    EvalReport rep;
    rep.iou_threshold = t;
    double weighted = 0.0;
    std::size_t weight = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const MatchResult m = match_boxes(predictions[i], frames[i].gt, t);
      rep.tp += m.tp;
      rep.fp += m.fp;
      rep.fn += m.fn;
      EvalReport one;
      one.tp = m.tp;
      one.fp = m.fp;
      one.fn = m.fn;
      finalize_scores(one);
      weighted += one.f1 * static_cast<double>(frames[i].gt.size());
      weight += frames[i].gt.size();
    }
    finalize_scores(rep);
    rep.weighted_f1 = weight > 0 ? weighted / static_cast<double>(weight) : 0.0;
    reports.push_back(rep);
  }
  return reports;
}

std::vector<SweepSetting> sweep_grid(const std::vector<double>& amplitudes,
                                     const std::vector<std::size_t>& substeps) {
  std::vector<SweepSetting> grid;
  for (double a : amplitudes)
    for (std::size_t s : substeps) grid.push_back({grid.size(), a, s});
  return grid;
}

std::vector<EvalReport> evaluate_sweep(const std::vector<LabeledFrame>& frames,
                                       const PipelineConfig& base,
                                       const std::vector<SweepSetting>& settings,
                                       const std::vector<double>& iou_thresholds,
                                       std::size_t threads) {
  std::vector<EvalReport> all;
  for (const SweepSetting& s : settings) {
    PipelineConfig cfg = base;
    cfg.diffusion.amplitude = s.amplitude;
    cfg.diffusion.substeps_per_pulse = s.substeps;
    for (EvalReport rep : evaluate(frames, cfg, iou_thresholds, threads)) {
      rep.setting_id = s.id;
      all.push_back(rep);
    }
  }
  return all;
}

}  // namespace cramsim

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/tensor.hpp"

namespace forge {

struct Dataset {
  int H = 0, W = 0, C = 0;
  std::vector<Tensor> images;  // H x W x C, values in [0,1]
  std::vector<int> labels;

  std::size_t size() const { return images.size(); }
};

inline constexpr int kGlyphClassCount = 8;
extern const char* const kGlyphClassNames[kGlyphClassCount];

// 8-class synthetic glyph corpus: one glyph per image on a noisy background,
// +-2px position jitter, per-sample hue jitter, N(0, 0.05) pixel noise clamped
// to [0,1]. Samples are emitted class-major: perClass images of class 0, then
// class 1, ... Pixels are rounded through f32 so that generation and file
// round-trips are byte-exact.
Dataset generate_glyph_dataset(std::uint64_t seed, int perClass);

Dataset filter_by_label(const Dataset& ds, int label);
Dataset take(const Dataset& ds, std::size_t n);

void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);
std::vector<std::uint8_t> serialize_dataset(const Dataset& ds);

}  // namespace forge

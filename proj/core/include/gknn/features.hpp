#pragma once

#include <array>
#include <cstddef>

#include "gknn/binary_image.hpp"
#include "gknn/morphology.hpp"

namespace gknn {

enum class Direction { top, bottom, left, right };

// The 13 structural features of one glyph, in the fixed order below.
// Raw values are ratios in [0, 1]; after normalize() the largest nonzero
// component is exactly 1.
struct FeatureVector {
  static constexpr std::size_t dim = 13;

  static constexpr std::size_t dd_left = 0;
  static constexpr std::size_t dd_right = 1;
  static constexpr std::size_t dd_top = 2;
  static constexpr std::size_t dd_bottom = 3;
  static constexpr std::size_t wr_top = 4;
  static constexpr std::size_t wr_bottom = 5;
  static constexpr std::size_t wr_left = 6;
  static constexpr std::size_t wr_right = 7;
  static constexpr std::size_t hole = 8;
  static constexpr std::size_t mp_left = 9;
  static constexpr std::size_t mp_right = 10;
  static constexpr std::size_t mp_top = 11;
  static constexpr std::size_t mp_bottom = 12;

  std::array<double, dim> values{};
  bool normalized = false;

  double operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct DirectionalDensity {
  double left = 0, right = 0, top = 0, bottom = 0;
};

struct ReservoirRatios {
  double top = 0, bottom = 0, left = 0, right = 0;
};

struct ProfileDistances {
  double left = 0, right = 0, top = 0, bottom = 0;
};

// Middle 40% of a 1-D extent: start = round(0.3*L) half-up, length =
// max(1, round(0.4*L)), so the band is never empty and covers exactly 40%
// when L is a multiple of 5.
struct Band {
  int start = 0;
  int length = 0;
};
Band middle_band(int extent);

// The operations below expect a cropped glyph (every border row/column of
// the image holds ink). W, H and A = W*H refer to that cropped box.

// Background band between each box edge and the first ink pixel per scan
// line, as a fraction of A. A scan line with no ink contributes the full
// extent.
DirectionalDensity directional_density(const BinaryImage& glyph);

// Fraction of A that retains water poured from each side. Retained pixels
// are the OFF pixels with no escape to outside the box through OFF pixels
// when moving only away from the pour side or sideways; the non-top
// directions are computed on the rotated image.
ReservoirRatios water_reservoirs(const BinaryImage& glyph);

// Mask of retained-water pixels for one pour direction, in the original
// orientation.
BinaryImage reservoir_mask(const BinaryImage& glyph, Direction poured_from);

// OFF pixels with no 4-connected path to the border: the glyph's enclosed
// loops.
BinaryImage hole_mask(const BinaryImage& glyph);
double fill_hole_density(const BinaryImage& glyph);

// Largest edge-to-first-ink distance over the middle 40% of scan lines,
// normalized by the scanned extent (W for left/right, H for top/bottom).
// A band line with no ink counts the full extent.
ProfileDistances max_profile_distances(const BinaryImage& glyph);

// All 13 raw ratios of a cropped glyph, in FeatureVector order.
FeatureVector assemble_raw_features(const BinaryImage& glyph);

// Divides every component by the vector's maximum (no-op on an all-zero
// vector) and sets the normalized flag. Rejects negative components.
FeatureVector normalize(FeatureVector raw);

// Full pipeline: open -> bounding box -> crop -> 13 raw ratios -> normalize.
// Throws BlankInputError when opening leaves no ink.
FeatureVector extract_features(const BinaryImage& raw_image,
                               const StructuringElement& se = {});

}  // namespace gknn

#include "gknn/features.hpp"

#include <algorithm>

#include "gknn/errors.hpp"
#include "gknn/flood.hpp"

namespace gknn {

namespace {

// Index of the first ON pixel in a row scanning from the left, or W if the
// row has none. Mirrored variants count from the respective edge.
int first_on_from_left(const BinaryImage& img, int row) {
  for (int c = 0; c < img.width(); ++c) {
    if (img.at(row, c)) return c;
  }
  return img.width();
}

int first_on_from_right(const BinaryImage& img, int row) {
  for (int c = img.width() - 1; c >= 0; --c) {
    if (img.at(row, c)) return img.width() - 1 - c;
  }
  return img.width();
}

int first_on_from_top(const BinaryImage& img, int col) {
  for (int r = 0; r < img.height(); ++r) {
    if (img.at(r, col)) return r;
  }
  return img.height();
}

int first_on_from_bottom(const BinaryImage& img, int col) {
  for (int r = img.height() - 1; r >= 0; --r) {
    if (img.at(r, col)) return img.height() - 1 - r;
  }
  return img.height();
}

// Retained water for a top pour: OFF pixels that cannot escape the box with
// moves {down, left, right}. Computed backwards: pixels that CAN escape are
// exactly those reachable from the virtual border ring with the reversed
// moves, which is the same set with up substituted for down.
long long top_reservoir_count(const BinaryImage& img) {
  const std::vector<Point> ring = virtual_border_ring(img.width(), img.height());
  const BinaryImage escape =
      reachable_background(img, ring, move::up | move::left | move::right);
  long long retained = 0;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!img.at(r, c) && !escape.at(r, c)) ++retained;
    }
  }
  return retained;
}

BinaryImage top_reservoir_mask(const BinaryImage& img) {
  const std::vector<Point> ring = virtual_border_ring(img.width(), img.height());
  const BinaryImage escape =
      reachable_background(img, ring, move::up | move::left | move::right);
  BinaryImage mask(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      mask.set(r, c, !img.at(r, c) && !escape.at(r, c));
    }
  }
  return mask;
}

}  // namespace

Band middle_band(int extent) {
  // Integer half-up rounding of 0.3*L and 0.4*L.
  int start = (3 * extent + 5) / 10;
  int length = std::max(1, (4 * extent + 5) / 10);
  if (start >= extent) start = extent - 1;
  if (start + length > extent) length = extent - start;
  return Band{start, length};
}

DirectionalDensity directional_density(const BinaryImage& glyph) {
  const double area = static_cast<double>(glyph.area());
  long long left = 0, right = 0, top = 0, bottom = 0;
  for (int r = 0; r < glyph.height(); ++r) {
    left += first_on_from_left(glyph, r);
    right += first_on_from_right(glyph, r);
  }
  for (int c = 0; c < glyph.width(); ++c) {
    top += first_on_from_top(glyph, c);
    bottom += first_on_from_bottom(glyph, c);
  }
  return DirectionalDensity{left / area, right / area, top / area, bottom / area};
}

ReservoirRatios water_reservoirs(const BinaryImage& glyph) {
  const double area = static_cast<double>(glyph.area());
  ReservoirRatios wr;
  wr.top = top_reservoir_count(glyph) / area;
  wr.bottom = top_reservoir_count(rotate180(glyph)) / area;
  wr.left = top_reservoir_count(rotate_cw(glyph)) / area;
  wr.right = top_reservoir_count(rotate_ccw(glyph)) / area;
  return wr;
}

BinaryImage reservoir_mask(const BinaryImage& glyph, Direction poured_from) {
  switch (poured_from) {
    case Direction::top:
      return top_reservoir_mask(glyph);
    case Direction::bottom:
      return rotate180(top_reservoir_mask(rotate180(glyph)));
    case Direction::left:
      return rotate_ccw(top_reservoir_mask(rotate_cw(glyph)));
    case Direction::right:
      return rotate_cw(top_reservoir_mask(rotate_ccw(glyph)));
  }
  throw ContractError("invalid direction");
}

BinaryImage hole_mask(const BinaryImage& glyph) {
  const std::vector<Point> ring = virtual_border_ring(glyph.width(), glyph.height());
  const BinaryImage outside = reachable_background(glyph, ring, move::all);
  BinaryImage mask(glyph.width(), glyph.height());
  for (int r = 0; r < glyph.height(); ++r) {
    for (int c = 0; c < glyph.width(); ++c) {
      mask.set(r, c, !glyph.at(r, c) && !outside.at(r, c));
    }
  }
  return mask;
}

double fill_hole_density(const BinaryImage& glyph) {
  return hole_mask(glyph).count_on() / static_cast<double>(glyph.area());
}

ProfileDistances max_profile_distances(const BinaryImage& glyph) {
  const int w = glyph.width();
  const int h = glyph.height();
  const Band rows = middle_band(h);
  const Band cols = middle_band(w);

  int left = 0, right = 0, top = 0, bottom = 0;
  for (int r = rows.start; r < rows.start + rows.length; ++r) {
    left = std::max(left, first_on_from_left(glyph, r));
    right = std::max(right, first_on_from_right(glyph, r));
  }
  for (int c = cols.start; c < cols.start + cols.length; ++c) {
    top = std::max(top, first_on_from_top(glyph, c));
    bottom = std::max(bottom, first_on_from_bottom(glyph, c));
  }
  return ProfileDistances{left / static_cast<double>(w), right / static_cast<double>(w),
                          top / static_cast<double>(h), bottom / static_cast<double>(h)};
}

FeatureVector assemble_raw_features(const BinaryImage& glyph) {
  const DirectionalDensity dd = directional_density(glyph);
  const ReservoirRatios wr = water_reservoirs(glyph);
  const double hole = fill_hole_density(glyph);
  const ProfileDistances mp = max_profile_distances(glyph);

  FeatureVector v;
  v.values[FeatureVector::dd_left] = dd.left;
  v.values[FeatureVector::dd_right] = dd.right;
  v.values[FeatureVector::dd_top] = dd.top;
  v.values[FeatureVector::dd_bottom] = dd.bottom;
  v.values[FeatureVector::wr_top] = wr.top;
  v.values[FeatureVector::wr_bottom] = wr.bottom;
  v.values[FeatureVector::wr_left] = wr.left;
  v.values[FeatureVector::wr_right] = wr.right;
  v.values[FeatureVector::hole] = hole;
  v.values[FeatureVector::mp_left] = mp.left;
  v.values[FeatureVector::mp_right] = mp.right;
  v.values[FeatureVector::mp_top] = mp.top;
  v.values[FeatureVector::mp_bottom] = mp.bottom;
  v.normalized = false;
  return v;
}

FeatureVector normalize(FeatureVector raw) {
  double max = 0.0;
  for (double x : raw.values) {
    if (x < 0.0) throw ContractError("feature components must be nonnegative");
    max = std::max(max, x);
  }
  if (max > 0.0) {
    for (double& x : raw.values) x /= max;
  }
  raw.normalized = true;
  return raw;
}

FeatureVector extract_features(const BinaryImage& raw_image, const StructuringElement& se) {
  const BinaryImage opened = morphological_open(raw_image, se);
  if (!opened.any_on()) throw BlankInputError("no foreground pixels after opening");
  const BinaryImage glyph = crop(opened, bounding_box(opened));
  return normalize(assemble_raw_features(glyph));
}

}  // namespace gknn

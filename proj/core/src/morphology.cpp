#include "gknn/morphology.hpp"

#include <string>

#include "gknn/errors.hpp"

namespace gknn {

namespace {

void check(const StructuringElement& se) {
  if (se.side < 1 || se.side % 2 == 0) {
    throw ContractError("structuring element side must be odd and positive, got " +
                        std::to_string(se.side));
  }
}

}  // namespace

BinaryImage erode(const BinaryImage& img, const StructuringElement& se) {
  check(se);
  const int h = se.side / 2;
  BinaryImage out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      bool all_on = true;
      for (int dr = -h; all_on && dr <= h; ++dr) {
        for (int dc = -h; dc <= h; ++dc) {
          if (!img.in_bounds(r + dr, c + dc) || !img.at(r + dr, c + dc)) {
            all_on = false;
            break;
          }
        }
      }
      out.set(r, c, all_on);
    }
  }
  return out;
}

BinaryImage dilate(const BinaryImage& img, const StructuringElement& se) {
  check(se);
  const int h = se.side / 2;
  BinaryImage out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      bool any_on = false;
      for (int dr = -h; !any_on && dr <= h; ++dr) {
        for (int dc = -h; dc <= h; ++dc) {
          if (img.in_bounds(r + dr, c + dc) && img.at(r + dr, c + dc)) {
            any_on = true;
            break;
          }
        }
      }
      out.set(r, c, any_on);
    }
  }
  return out;
}

BinaryImage morphological_open(const BinaryImage& img, const StructuringElement& se) {
  return dilate(erode(img, se), se);
}

}  // namespace gknn

#pragma once

#include "gknn/binary_image.hpp"

namespace gknn {

// Odd-sided square mask with every cell ON. The 3x3 default is the smallest
// symmetric element that removes one-pixel speckle.
struct StructuringElement {
  int side = 3;
};

// Pixels outside the image count as OFF, so strokes touching the border
// erode there like anywhere else.
BinaryImage erode(const BinaryImage& img, const StructuringElement& se);
BinaryImage dilate(const BinaryImage& img, const StructuringElement& se);

// Erosion followed by dilation. Anti-extensive (result is a subset of the
// input) and idempotent.
BinaryImage morphological_open(const BinaryImage& img, const StructuringElement& se);

}  // namespace gknn

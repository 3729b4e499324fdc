#pragma once

#include <span>
#include <vector>

#include "gknn/binary_image.hpp"

namespace gknn {

struct Point {
  int row = 0;
  int col = 0;
};

namespace move {
inline constexpr unsigned up = 1u;
inline constexpr unsigned down = 2u;
inline constexpr unsigned left = 4u;
inline constexpr unsigned right = 8u;
inline constexpr unsigned all = up | down | left | right;
}  // namespace move

// One seed per cell of the one-pixel ring just outside the image, corners
// included.
std::vector<Point> virtual_border_ring(int width, int height);

// OFF pixels reachable from any seed through chains of OFF pixels, stepping
// only in the directions enabled in `moves`. Seeds outside the image act as
// virtual border positions; seeds inside must be OFF pixels (ContractError
// otherwise). The returned mask is ON exactly at reachable pixels.
BinaryImage reachable_background(const BinaryImage& img, std::span<const Point> seeds,
                                 unsigned moves);

}  // namespace gknn

#include "gknn/flood.hpp"

#include <string>

#include "gknn/errors.hpp"

namespace gknn {

std::vector<Point> virtual_border_ring(int width, int height) {
  std::vector<Point> ring;
  ring.reserve(2 * (width + height) + 4);
  for (int c = -1; c <= width; ++c) {
    ring.push_back(Point{-1, c});
    ring.push_back(Point{height, c});
  }
  for (int r = 0; r < height; ++r) {
    ring.push_back(Point{r, -1});
    ring.push_back(Point{r, width});
  }
  return ring;
}

BinaryImage reachable_background(const BinaryImage& img, std::span<const Point> seeds,
                                 unsigned moves) {
  BinaryImage visited(img.width(), img.height());
  std::vector<Point> stack;

  auto try_visit = [&](int r, int c) {
    if (img.in_bounds(r, c) && !img.at(r, c) && !visited.at(r, c)) {
      visited.set(r, c, true);
      stack.push_back(Point{r, c});
    }
  };

  const int dr[4] = {-1, 1, 0, 0};
  const int dc[4] = {0, 0, -1, 1};
  const unsigned bit[4] = {move::up, move::down, move::left, move::right};

  for (const Point& s : seeds) {
    if (img.in_bounds(s.row, s.col)) {
      if (img.at(s.row, s.col)) {
        throw ContractError("flood seed (" + std::to_string(s.row) + "," +
                            std::to_string(s.col) + ") is an ON pixel");
      }
      try_visit(s.row, s.col);
    } else {
      // Virtual position: step into the image, but never walk outside it.
      for (int d = 0; d < 4; ++d) {
        if (moves & bit[d]) try_visit(s.row + dr[d], s.col + dc[d]);
      }
    }
  }

  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    for (int d = 0; d < 4; ++d) {
      if (moves & bit[d]) try_visit(p.row + dr[d], p.col + dc[d]);
    }
  }
  return visited;
}

}  // namespace gknn

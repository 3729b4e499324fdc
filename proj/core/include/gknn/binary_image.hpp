#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace gknn {

// Row-major grid of ON/OFF pixels. ON means ink; polarity is fixed once at
// load time and every later stage assumes it.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int width, int height, bool fill = false);

  // '1' or '#' marks ON; '0', '.' or ' ' marks OFF. One string per row,
  // all rows the same length.
  static BinaryImage from_strings(std::initializer_list<std::string_view> rows);

  int width() const { return width_; }
  int height() const { return height_; }
  long long area() const { return static_cast<long long>(width_) * height_; }

  bool at(int row, int col) const { return pixels_[index(row, col)] != 0; }
  void set(int row, int col, bool on) { pixels_[index(row, col)] = on ? 1 : 0; }

  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }

  long long count_on() const;
  bool any_on() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Inclusive pixel-index rectangle.
struct BoundingBox {
  int top = 0;
  int left = 0;
  int bottom = 0;
  int right = 0;

  int width() const { return right - left + 1; }
  int height() const { return bottom - top + 1; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Flips every pixel. Involution: invert(invert(x)) == x.
BinaryImage invert(const BinaryImage& img);

// Minimal box containing every ON pixel; each border row/column of the box
// holds at least one ON pixel. Throws BlankInputError on an all-OFF image.
BoundingBox bounding_box(const BinaryImage& img);

// Throws ContractError when the box does not fit inside the image.
BinaryImage crop(const BinaryImage& img, const BoundingBox& box);

BinaryImage rotate_cw(const BinaryImage& img);
BinaryImage rotate_ccw(const BinaryImage& img);
BinaryImage rotate180(const BinaryImage& img);
BinaryImage mirror_horizontal(const BinaryImage& img);

}  // namespace gknn

#include "gknn/binary_image.hpp"

#include <string>

#include "gknn/errors.hpp"

namespace gknn {

BinaryImage::BinaryImage(int width, int height, bool fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw ContractError("image dimensions must be at least 1x1, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

BinaryImage BinaryImage::from_strings(std::initializer_list<std::string_view> rows) {
  if (rows.size() == 0) throw ContractError("from_strings: no rows");
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.begin()->size());
  BinaryImage img(width, height);
  int r = 0;
  for (std::string_view row : rows) {
    if (static_cast<int>(row.size()) != width) {
      throw ContractError("from_strings: ragged row " + std::to_string(r));
    }
    for (int c = 0; c < width; ++c) {
      const char ch = row[c];
      if (ch == '1' || ch == '#') {
        img.set(r, c, true);
      } else if (ch == '0' || ch == '.' || ch == ' ') {
        img.set(r, c, false);
      } else {
        throw ContractError(std::string("from_strings: bad character '") + ch + "'");
      }
    }
    ++r;
  }
  return img;
}

long long BinaryImage::count_on() const {
  long long n = 0;
  for (std::uint8_t p : pixels_) n += p;
  return n;
}

bool BinaryImage::any_on() const {
  for (std::uint8_t p : pixels_) {
    if (p) return true;
  }
  return false;
}

BinaryImage invert(const BinaryImage& img) {
  BinaryImage out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) out.set(r, c, !img.at(r, c));
  }
  return out;
}

BoundingBox bounding_box(const BinaryImage& img) {
  int top = img.height();
  int bottom = -1;
  int left = img.width();
  int right = -1;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!img.at(r, c)) continue;
      if (r < top) top = r;
      if (r > bottom) bottom = r;
      if (c < left) left = c;
      if (c > right) right = c;
    }
  }
  if (bottom < 0) throw BlankInputError("image has no foreground pixels");
  return BoundingBox{top, left, bottom, right};
}

BinaryImage crop(const BinaryImage& img, const BoundingBox& box) {
  if (box.top < 0 || box.left < 0 || box.top > box.bottom || box.left > box.right ||
      box.bottom >= img.height() || box.right >= img.width()) {
    throw ContractError("crop box does not fit inside the image");
  }
  BinaryImage out(box.width(), box.height());
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) {
      out.set(r, c, img.at(box.top + r, box.left + c));
    }
  }
  return out;
}

BinaryImage rotate_cw(const BinaryImage& img) {
  BinaryImage out(img.height(), img.width());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      out.set(c, img.height() - 1 - r, img.at(r, c));
    }
  }
  return out;
}

BinaryImage rotate_ccw(const BinaryImage& img) {
  BinaryImage out(img.height(), img.width());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      out.set(img.width() - 1 - c, r, img.at(r, c));
    }
  }
  return out;
}

BinaryImage rotate180(const BinaryImage& img) {
  BinaryImage out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      out.set(img.height() - 1 - r, img.width() - 1 - c, img.at(r, c));
    }
  }
  return out;
}

BinaryImage mirror_horizontal(const BinaryImage& img) {
  BinaryImage out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      out.set(r, img.width() - 1 - c, img.at(r, c));
    }
  }
  return out;
}

}  // namespace gknn

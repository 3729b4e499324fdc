#include "gknn/image_io.hpp"

#include <cctype>
#include <fstream>
#include <string>

#include "gknn/errors.hpp"

namespace gknn {

namespace {

constexpr int kMaxDimension = 1 << 20;

class Cursor {
 public:
  Cursor(std::span<const std::uint8_t> bytes, const char* what)
      : bytes_(bytes), what_(what) {}

  std::size_t pos() const { return pos_; }
  bool eof() const { return pos_ >= bytes_.size(); }

  std::uint8_t peek() const {
    if (eof()) fail("unexpected end of data");
    return bytes_[pos_];
  }

  std::uint8_t take() {
    const std::uint8_t b = peek();
    ++pos_;
    return b;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormatError(std::string(what_) + ": " + message + " at byte " +
                      std::to_string(pos_));
  }

  // PNM whitespace, with '#' starting a comment that runs to end of line.
  void skip_space_and_comments() {
    while (!eof()) {
      const std::uint8_t b = bytes_[pos_];
      if (b == '#') {
        while (!eof() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(b)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int next_int(const char* field) {
    skip_space_and_comments();
    if (eof() || !std::isdigit(peek())) {
      fail(std::string("expected integer ") + field);
    }
    long value = 0;
    while (!eof() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (take() - '0');
      if (value > kMaxDimension) fail(std::string("unreasonably large ") + field);
    }
    return static_cast<int>(value);
  }

 private:
  std::span<const std::uint8_t> bytes_;
  const char* what_;
  std::size_t pos_ = 0;
};

BinaryImage read_pbm_ascii(Cursor& cur, int width, int height) {
  BinaryImage img(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      cur.skip_space_and_comments();
      const std::uint8_t b = cur.take();
      if (b == '1') {
        img.set(r, c, true);
      } else if (b != '0') {
        cur.fail("expected raster digit 0 or 1");
      }
    }
  }
  return img;
}

BinaryImage read_pbm_packed(Cursor& cur, int width, int height) {
  BinaryImage img(width, height);
  const int row_bytes = (width + 7) / 8;
  for (int r = 0; r < height; ++r) {
    for (int b = 0; b < row_bytes; ++b) {
      const std::uint8_t byte = cur.take();
      for (int bit = 0; bit < 8; ++bit) {
        const int c = b * 8 + bit;
        if (c < width) img.set(r, c, (byte >> (7 - bit)) & 1);
      }
    }
  }
  return img;
}

}  // namespace

BinaryImage read_pbm(std::span<const std::uint8_t> bytes) {
  Cursor cur(bytes, "pbm");
  if (cur.take() != 'P') cur.fail("bad magic, expected P1 or P4");
  const std::uint8_t kind = cur.take();
  if (kind != '1' && kind != '4') cur.fail("unsupported PNM variant, expected P1 or P4");
  const int width = cur.next_int("width");
  const int height = cur.next_int("height");
  if (width < 1 || height < 1) cur.fail("dimensions must be at least 1x1");
  if (kind == '1') return read_pbm_ascii(cur, width, height);
  // P4: exactly one whitespace byte separates the header from the raster.
  if (!std::isspace(cur.peek())) cur.fail("expected whitespace before packed raster");
  cur.take();
  return read_pbm_packed(cur, width, height);
}

std::vector<std::uint8_t> write_pbm(const BinaryImage& img, PbmFormat format) {
  std::string out;
  out += (format == PbmFormat::ascii) ? "P1\n" : "P4\n";
  out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
  if (format == PbmFormat::ascii) {
    for (int r = 0; r < img.height(); ++r) {
      int line_len = 0;
      for (int c = 0; c < img.width(); ++c) {
        out += img.at(r, c) ? '1' : '0';
        if (++line_len == 70 && c + 1 < img.width()) {
          out += '\n';
          line_len = 0;
        }
      }
      out += '\n';
    }
  } else {
    const int row_bytes = (img.width() + 7) / 8;
    for (int r = 0; r < img.height(); ++r) {
      for (int b = 0; b < row_bytes; ++b) {
        std::uint8_t byte = 0;
        for (int bit = 0; bit < 8; ++bit) {
          const int c = b * 8 + bit;
          if (c < img.width() && img.at(r, c)) byte |= std::uint8_t(1u << (7 - bit));
        }
        out += static_cast<char>(byte);
      }
    }
  }
  return std::vector<std::uint8_t>(out.begin(), out.end());
}

namespace {

class BmpView {
 public:
  BmpView(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8(std::size_t off) const {
    require(off, 1);
    return bytes_[off];
  }

  std::uint32_t u16(std::size_t off) const {
    require(off, 2);
    return bytes_[off] | (std::uint32_t(bytes_[off + 1]) << 8);
  }

  std::uint32_t u32(std::size_t off) const {
    require(off, 4);
    return bytes_[off] | (std::uint32_t(bytes_[off + 1]) << 8) |
           (std::uint32_t(bytes_[off + 2]) << 16) | (std::uint32_t(bytes_[off + 3]) << 24);
  }

  std::int32_t i32(std::size_t off) const { return static_cast<std::int32_t>(u32(off)); }

  std::size_t size() const { return bytes_.size(); }

  void require(std::size_t off, std::size_t count) const {
    if (off + count > bytes_.size()) {
      throw FormatError("bmp: truncated data, needed " + std::to_string(count) +
                        " byte(s) at byte " + std::to_string(off));
    }
  }

 private:
  std::span<const std::uint8_t> bytes_;
};

}  // namespace

BinaryImage read_bmp(std::span<const std::uint8_t> bytes, int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw ContractError("threshold must be in 0..255, got " + std::to_string(threshold));
  }
  BmpView v(bytes);
  if (v.u8(0) != 'B' || v.u8(1) != 'M') {
    throw FormatError("bmp: bad magic at byte 0");
  }
  const std::uint32_t pixel_offset = v.u32(10);
  const std::uint32_t header_size = v.u32(14);
  if (header_size < 40) {
    throw FormatError("bmp: unsupported header of size " + std::to_string(header_size) +
                      " at byte 14");
  }
  const std::int32_t width = v.i32(18);
  const std::int32_t raw_height = v.i32(22);
  const bool bottom_up = raw_height > 0;
  const std::int32_t height = bottom_up ? raw_height : -raw_height;
  if (width < 1 || height < 1 || width > kMaxDimension || height > kMaxDimension) {
    throw FormatError("bmp: bad dimensions at byte 18");
  }
  const std::uint32_t bit_count = v.u16(28);
  if (bit_count != 1 && bit_count != 8) {
    throw FormatError("bmp: unsupported bit depth " + std::to_string(bit_count) +
                      " at byte 28");
  }
  const std::uint32_t compression = v.u32(30);
  if (compression != 0) {
    throw FormatError("bmp: unsupported compression " + std::to_string(compression) +
                      " at byte 30");
  }

  // For 1-bit data the palette decides which bit value is ink (the darker
  // entry). Missing palette falls back to the conventional 0 = black.
  int ink_bit = 0;
  if (bit_count == 1) {
    const std::size_t palette_offset = 14 + header_size;
    if (palette_offset + 8 <= v.size() && palette_offset + 8 <= pixel_offset) {
      const int lum0 = int(v.u8(palette_offset)) + v.u8(palette_offset + 1) +
                       v.u8(palette_offset + 2);
      const int lum1 = int(v.u8(palette_offset + 4)) + v.u8(palette_offset + 5) +
                       v.u8(palette_offset + 6);
      ink_bit = lum1 < lum0 ? 1 : 0;
    }
  }

  const std::size_t stride = ((std::size_t(width) * bit_count + 31) / 32) * 4;
  const std::size_t needed = pixel_offset + stride * std::size_t(height);
  if (needed > v.size()) {
    throw FormatError("bmp: truncated pixel data at byte " + std::to_string(v.size()) +
                      ", need " + std::to_string(needed) + " bytes");
  }

  BinaryImage img(width, height);
  for (int r = 0; r < height; ++r) {
    const int src_row = bottom_up ? height - 1 - r : r;
    const std::size_t row_start = pixel_offset + stride * std::size_t(src_row);
    if (bit_count == 8) {
      for (int c = 0; c < width; ++c) {
        img.set(r, c, v.u8(row_start + c) < std::uint32_t(threshold));
      }
    } else {
      for (int c = 0; c < width; ++c) {
        const std::uint8_t byte = v.u8(row_start + c / 8);
        const int bit = (byte >> (7 - c % 8)) & 1;
        img.set(r, c, bit == ink_bit);
      }
    }
  }
  return img;
}

BinaryImage load_image(std::span<const std::uint8_t> bytes, int threshold) {
  if (bytes.size() >= 2) {
    if (bytes[0] == 'P' && (bytes[1] == '1' || bytes[1] == '4')) return read_pbm(bytes);
    if (bytes[0] == 'P' && bytes[1] >= '2' && bytes[1] <= '6') {
      throw FormatError("image: unsupported PNM variant at byte 1, only P1/P4 are read");
    }
    if (bytes[0] == 'B' && bytes[1] == 'M') return read_bmp(bytes, threshold);
  }
  throw FormatError("image: unrecognized format at byte 0, expected PBM or BMP");
}

BinaryImage load_image_file(const std::filesystem::path& path, int threshold) {
  return load_image(read_file_bytes(path), threshold);
}

void write_pbm_file(const std::filesystem::path& path, const BinaryImage& img,
                    PbmFormat format) {
  const std::vector<std::uint8_t> bytes = write_pbm(img, format);
  write_file_bytes(path, bytes);
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    bytes.insert(bytes.end(), buf, buf + in.gcount());
  }
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace gknn

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gknn/binary_image.hpp"

namespace gknn {

enum class PbmFormat {
  ascii,   // P1
  packed,  // P4
};

// PBM 1 means black; black is ink, so it maps to ON.
BinaryImage read_pbm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pbm(const BinaryImage& img, PbmFormat format);

// Uncompressed BMP, 1-bit or 8-bit, bottom-up or top-down rows, 4-byte row
// padding. 8-bit pixels below `threshold` become ON; for 1-bit data the
// darker palette entry is taken as ink.
BinaryImage read_bmp(std::span<const std::uint8_t> bytes, int threshold);

// Sniffs the magic bytes (P1/P4 vs BM) and dispatches. `threshold` only
// matters for 8-bit BMP input.
BinaryImage load_image(std::span<const std::uint8_t> bytes, int threshold = 128);
BinaryImage load_image_file(const std::filesystem::path& path, int threshold = 128);

void write_pbm_file(const std::filesystem::path& path, const BinaryImage& img,
                    PbmFormat format = PbmFormat::ascii);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace gknn

#pragma once

#include <filesystem>

#include "slimcal/image.hpp"

namespace slimcal {

// Binary 8-bit PGM (P5). Reading accepts '#' comments and any maxval in
// [1, 255]; 16-bit files are rejected. Writing always emits
// "P5\n<w> <h>\n255\n" followed by the raw rows, so identical images produce
// byte-identical files.
Image read_pgm(const std::filesystem::path& path);
void write_pgm(const Image& img, const std::filesystem::path& path);

// Reads a frame by sniffing the magic bytes: P5 PGM or 8-bit grayscale PNG.
// Any other PNG layout (color, palette, 16-bit) is a ParseError.
Image read_image(const std::filesystem::path& path);

}  // namespace slimcal

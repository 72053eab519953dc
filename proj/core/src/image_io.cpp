#include "slimcal/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "slimcal/error.hpp"

namespace slimcal {

namespace {

// Skips PNM whitespace and '#' comment lines, then parses one decimal field.
int next_pnm_int(std::istream& in, const std::string& path) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF) throw ParseError("truncated PGM header: " + path);
  long value = 0;
  bool any = false;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1'000'000'000L) throw ParseError("absurd PGM field: " + path);
    any = true;
    c = in.get();
  }
  if (!any) throw ParseError("malformed PGM header: " + path);
  return static_cast<int>(value);
}

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadCloser() { png_destroy_read_struct(&png, &info, nullptr); }
};

Image read_png(const std::filesystem::path& path) {
  std::FILE* fp = std::fopen(path.string().c_str(), "rb");
  if (!fp) throw IoError("cannot open " + path.string());

  PngReadCloser ctx;
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
  if (ctx.png) ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.png || !ctx.info) {
    std::fclose(fp);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(ctx.png))) {
    std::fclose(fp);
    throw ParseError("corrupt PNG: " + path.string());
  }
  png_init_io(ctx.png, fp);
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int depth = png_get_bit_depth(ctx.png, ctx.info);
  const int color = png_get_color_type(ctx.png, ctx.info);
  if (color != PNG_COLOR_TYPE_GRAY || depth != 8) {
    std::fclose(fp);
    throw ParseError("PNG must be 8-bit grayscale: " + path.string());
  }

  Image img(static_cast<int>(w), static_cast<int>(h));
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.data() + y * w;
  png_read_image(ctx.png, rows.data());
  png_read_end(ctx.png, nullptr);
  std::fclose(fp);
  return img;
}

}  // namespace

Image read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw ParseError("not a binary PGM (P5): " + path.string());
  }
  const int w = next_pnm_int(in, path.string());
  const int h = next_pnm_int(in, path.string());
  const int maxval = next_pnm_int(in, path.string());
  if (w < 1 || h < 1) throw ParseError("bad PGM dimensions: " + path.string());
  if (maxval < 1 || maxval > 255) {
    throw ParseError("PGM maxval out of 8-bit range: " + path.string());
  }
  // Exactly one whitespace byte separates the header from the raster.
  Image img(w, h);
  in.read(reinterpret_cast<char*>(img.data()),
          static_cast<std::streamsize>(img.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.size())) {
    throw ParseError("short PGM raster: " + path.string());
  }
  return img;
}

void write_pgm(const Image& img, const std::filesystem::path& path) {
  if (img.empty()) throw Error("refusing to write an empty image");
  // Write-to-temp then rename so readers never observe a partial file.
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp.string());
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data()),
              static_cast<std::streamsize>(img.size()));
    if (!out) throw IoError("short write: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("rename failed for " + path.string() + ": " + ec.message());
  }
}

Image read_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  unsigned char magic[2] = {0, 0};
  in.read(reinterpret_cast<char*>(magic), 2);
  if (!in) throw ParseError("file too short: " + path.string());
  in.close();
  if (magic[0] == 'P' && magic[1] == '5') return read_pgm(path);
  if (magic[0] == 0x89 && magic[1] == 'P') return read_png(path);
  throw ParseError("unsupported image format (expected PGM or PNG): " +
                   path.string());
}

}  // namespace slimcal

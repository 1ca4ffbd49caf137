#include "mpsa/image.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "mpsa/errors.hpp"
#include "mpsa/io_util.hpp"

namespace mpsa {

namespace {

class PgmScanner {
 public:
  PgmScanner(std::string bytes, std::string path)
      : bytes_(std::move(bytes)), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << path_ << ": " << what << " at byte offset " << pos_;
    throw ParseError(msg.str());
  }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long parse_int() {
    skip_separators();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_])))
      fail("expected an integer");
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1L << 30) fail("integer out of range");
      ++pos_;
    }
    return value;
  }

  // P5 payload starts after exactly one whitespace byte.
  void consume_single_separator() {
    if (pos_ >= bytes_.size()) fail("truncated header");
    const char c = bytes_[pos_];
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') fail("expected whitespace");
    ++pos_;
  }

  unsigned char next_byte() {
    if (pos_ >= bytes_.size()) fail("truncated pixel payload");
    return static_cast<unsigned char>(bytes_[pos_++]);
  }

  std::size_t size() const { return bytes_.size(); }
  char at(std::size_t i) const { return bytes_[i]; }
  void advance(std::size_t k) { pos_ += k; }

 private:
  std::string bytes_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  PgmScanner scanner(buffer.str(), path);

  if (scanner.size() < 2) scanner.fail("not a PGM file");
  const char magic0 = scanner.at(0);
  const char magic1 = scanner.at(1);
  if (magic0 != 'P' || (magic1 != '2' && magic1 != '5'))
    scanner.fail("unsupported magic number (need P2 or P5)");
  const bool binary = magic1 == '5';
  scanner.advance(2);

  const long width = scanner.parse_int();
  const long height = scanner.parse_int();
  const long maxval = scanner.parse_int();
  if (width < 1 || height < 1) scanner.fail("image dimensions must be positive");
  if (maxval < 1 || maxval > 65535) scanner.fail("maxval must lie in [1, 65535]");

  GrayImage image;
  image.width = static_cast<int>(width);
  image.height = static_cast<int>(height);
  image.pixels.resize(static_cast<std::size_t>(width) * height);

  if (binary) {
    scanner.consume_single_separator();
    const bool wide = maxval > 255;
    for (auto& pixel : image.pixels) {
      long value = scanner.next_byte();
      if (wide) value = (value << 8) | scanner.next_byte();
      if (value > maxval) scanner.fail("pixel value exceeds maxval");
      pixel = static_cast<double>(value) / maxval;
    }
  } else {
    for (auto& pixel : image.pixels) {
      const long value = scanner.parse_int();
      if (value > maxval) scanner.fail("pixel value exceeds maxval");
      pixel = static_cast<double>(value) / maxval;
    }
  }
  return image;
}

void write_pgm(const GrayImage& image, const std::string& path) {
  if (image.height < 1 || image.width < 1) throw InputError("write_pgm: empty image");
  if (image.pixels.size() != static_cast<std::size_t>(image.height) * image.width)
    throw InputError("write_pgm: pixel count does not match dimensions");
  std::ostringstream out;
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  for (double pixel : image.pixels) {
    const double clamped = std::min(1.0, std::max(0.0, pixel));
    const int value = static_cast<int>(std::floor(clamped * 255.0 + 0.5));
    out.put(static_cast<char>(value));
  }
  write_file_atomic(path, out.str());
}

GrayImage make_test_card(int height, int width) {
  if (height < 1 || width < 1) throw InputError("make_test_card: empty image");
  GrayImage image;
  image.height = height;
  image.width = width;
  image.pixels.resize(static_cast<std::size_t>(height) * width);

  const double h = height;
  const double w = width;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      // Smooth background gradient.
      double v = 0.45 + 0.20 * std::sin(2.0 * std::numbers::pi * c / w) *
                            std::cos(2.0 * std::numbers::pi * r / h);
      // Flat bright disk.
      const double dr = r - 0.30 * h;
      const double dc = c - 0.30 * w;
      if (dr * dr + dc * dc < 0.18 * 0.18 * h * w) v = 0.85;
      // Flat dark rectangle.
      if (r > 0.55 * h && r < 0.80 * h && c > 0.12 * w && c < 0.45 * w) v = 0.15;
      // Diagonal stripe texture patch.
      if (r > 0.12 * h && r < 0.42 * h && c > 0.58 * w && c < 0.92 * w)
        v = ((r + c) / 4) % 2 == 0 ? 0.30 : 0.70;
      // Sharp bright corner wedge.
      if (r + c > 1.72 * std::min(h, w)) v = 0.92;
      image.at(r, c) = v;
    }
  }
  return image;
}

GrayImage add_gaussian_noise(const GrayImage& image, double sigma, Rng& rng) {
  GrayImage noisy = image;
  for (auto& pixel : noisy.pixels) pixel += sigma * rng.normal();
  return noisy;
}

}  // namespace mpsa

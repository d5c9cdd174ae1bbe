#include "dynamo/config_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dynamo {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

void fail(const std::string& message) { throw std::runtime_error("configuration file: " + message); }

}  // namespace

std::string configuration_hex(const Configuration& config) {
  const std::uint64_t cells = config.shape().vertex_count();
  const std::uint64_t digits = (cells + 3) / 4;
  std::string out(digits, '0');
  for (std::uint64_t nib = 0; nib < digits; ++nib) {
    int value = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t v = nib * 4 + b;
      if (v < cells && config.test(static_cast<VertexId>(v))) value |= 1 << b;
    }
    out[digits - 1 - nib] = kHexDigits[value];  // most significant nibble first
  }
  return out;
}

void write_configuration(std::ostream& out, const Configuration& config) {
  out << "torus " << config.shape().side() << " " << config.shape().dim() << "\n"
      << configuration_hex(config) << "\n";
}

Configuration read_configuration(std::istream& in, std::uint64_t max_cells) {
  std::string header;
  if (!std::getline(in, header)) fail("missing header line");
  std::istringstream hs(header);
  std::string magic;
  int n = 0, d = 0;
  if (!(hs >> magic >> n >> d) || magic != "torus") fail("header must read 'torus <n> <d>'");
  std::string tail;
  if (hs >> tail) fail("trailing tokens after the header");

  TorusShape shape = TorusShape::make(n, d, max_cells);
  const std::uint64_t cells = shape.vertex_count();
  const std::uint64_t digits = (cells + 3) / 4;

  std::string hex;
  if (!std::getline(in, hex)) fail("missing bit-vector line");
  if (hex.size() != digits) {
    fail("bit-vector must be exactly " + std::to_string(digits) + " hex digits");
  }

  Configuration config(shape);
  for (std::uint64_t i = 0; i < digits; ++i) {
    const char c = hex[digits - 1 - i];
    int value = -1;
    if (c >= '0' && c <= '9') value = c - '0';
    if (c >= 'a' && c <= 'f') value = c - 'a' + 10;
    if (value < 0) fail("invalid hex digit (lowercase base-16 expected)");
    for (int b = 0; b < 4; ++b) {
      if (!(value & (1 << b))) continue;
      const std::uint64_t v = i * 4 + b;
      if (v >= cells) fail("stray bits beyond n^d");
      config.set(static_cast<VertexId>(v));
    }
  }
  return config;
}

void write_configuration_file(const std::string& path, const Configuration& config) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_configuration(out, config);
}

Configuration read_configuration_file(const std::string& path, std::uint64_t max_cells) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_configuration(in, max_cells);
}

void write_pgm(std::ostream& out, const Configuration& config) {
  const TorusShape& shape = config.shape();
  if (shape.dim() != 2) throw std::invalid_argument("PGM rendering requires d = 2");
  const int n = shape.side();
  out << "P5\n" << n << " " << n << "\n255\n";
  for (int row = 1; row <= n; ++row) {    // x_2, top to bottom
    for (int col = 1; col <= n; ++col) {  // x_1, left to right
      const VertexId v = shape.vertex_index({col, row});
      out.put(config.test(v) ? '\0' : static_cast<char>(0xFF));
    }
  }
}

void write_pgm_file(const std::string& path, const Configuration& config) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_pgm(out, config);
}

}  // namespace dynamo

#include "dynamo/config_io.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace dynamo;

TEST_CASE("configuration files round-trip bit-exactly") {
  std::mt19937_64 rng(0x5eed0003);
  for (const TorusShape& shape : {TorusShape::make(5, 2), TorusShape::make(3, 3),
                                  TorusShape::make(7, 1), TorusShape::make(4, 3)}) {
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 25; ++i) {
      Configuration c(shape);
      for (VertexId v = 0; v < shape.vertex_count(); ++v) {
        if (coin(rng)) c.set(v);
      }
      std::stringstream buf;
      write_configuration(buf, c);
      CHECK(read_configuration(buf) == c);
    }
  }
}

TEST_CASE("golden configuration bytes") {
  const TorusShape c5 = TorusShape::make(5, 1);
  Configuration c(c5);
  c.set(c5.vertex_index({1}));
  c.set(c5.vertex_index({4}));
  std::stringstream buf;
  write_configuration(buf, c);
  CHECK(buf.str() == "torus 5 1\n09\n");

  const TorusShape t52 = TorusShape::make(5, 2);
  std::stringstream all;
  write_configuration(all, Configuration::all(t52));
  CHECK(all.str() == "torus 5 2\n1ffffff\n");
}

TEST_CASE("parse errors are rejected") {
  const auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_configuration(in), std::runtime_error);
  };
  fails("");                        // no header
  fails("torus 5\n00\n");           // missing dimension
  fails("grid 5 1\n00\n");          // wrong magic
  fails("torus 5 1 9\n00\n");       // trailing token
  fails("torus 5 1\n");             // missing bits
  fails("torus 5 1\n0\n");          // truncated hex
  fails("torus 5 1\n009\n");        // overlong hex
  fails("torus 5 1\n4x\n");         // invalid digit
  fails("torus 5 1\nFF\n");         // uppercase rejected, lowercase format
  fails("torus 5 1\nff\n");         // stray bits beyond n^d (bits 5..7)
  std::istringstream bad_shape("torus 2 2\n0\n");
  CHECK_THROWS(read_configuration(bad_shape));
}

TEST_CASE("cell budget guards file loading") {
  std::istringstream in("torus 5 2\n1ffffff\n");
  CHECK_THROWS_AS(read_configuration(in, 24), std::overflow_error);
}

TEST_CASE("golden PGM frame") {
  const TorusShape t = TorusShape::make(3, 2);
  Configuration c(t);
  c.set(t.vertex_index({1, 1}));  // top-left pixel
  c.set(t.vertex_index({3, 2}));  // row 2, rightmost column
  std::ostringstream out;
  write_pgm(out, c);
  std::string want = "P5\n3 3\n255\n";
  const unsigned char pixels[9] = {0, 255, 255, 255, 255, 0, 255, 255, 255};
  want.append(reinterpret_cast<const char*>(pixels), 9);
  CHECK(out.str() == want);

  CHECK_THROWS_AS(write_pgm(out, Configuration(TorusShape::make(5, 1))), std::invalid_argument);
}

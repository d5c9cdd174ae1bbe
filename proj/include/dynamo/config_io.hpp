#pragma once

// Configuration file format and PGM frame output.
//
// Configuration files: line 1 "torus <n> <d>", line 2 a fixed-width base-16
// dump of the bit-vector (most significant nibble first, least significant
// bit = vertex index 0), trailing newline.

#include "dynamo/dynamics.hpp"

#include <iosfwd>
#include <string>

namespace dynamo {

std::string configuration_hex(const Configuration& config);

void write_configuration(std::ostream& out, const Configuration& config);
Configuration read_configuration(std::istream& in,
                                 std::uint64_t max_cells = default_cell_budget());

void write_configuration_file(const std::string& path, const Configuration& config);
Configuration read_configuration_file(const std::string& path,
                                      std::uint64_t max_cells = default_cell_budget());

// Binary P5, maxval 255, active = 0 (black), inactive = 255 (white),
// row-major with x_2 as the row index starting at 1 on top. d must be 2.
void write_pgm(std::ostream& out, const Configuration& config);
void write_pgm_file(const std::string& path, const Configuration& config);

}  // namespace dynamo

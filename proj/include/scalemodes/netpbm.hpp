#pragma once

#include <iosfwd>
#include <string>

#include "scalemodes/image.hpp"

namespace scalemodes {

// Netpbm readers/writers. Readers accept ASCII (P2/P3) and binary (P5/P6)
// variants with '#' comments in the header; only maxval 255 is supported.
// Parse errors throw std::runtime_error naming the offending token. Writers
// always emit the binary variant.

GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& img, std::ostream& out);
void write_pgm(const GrayImage& img, const std::string& path);

RgbImage read_ppm(std::istream& in);
RgbImage read_ppm(const std::string& path);
void write_ppm(const RgbImage& img, std::ostream& out);
void write_ppm(const RgbImage& img, const std::string& path);

} // namespace scalemodes

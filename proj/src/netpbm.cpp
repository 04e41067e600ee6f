#include "scalemodes/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace scalemodes {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("netpbm: " + msg); }

// Reads the next header/ASCII token: skips whitespace and '#' comments
// (comment runs to end of line).
std::string next_token(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF) fail("unexpected end of file in header");
    std::string tok;
    while (c != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c == '#') in.unget();           // comment starts a fresh token scan
    return tok;
}

int parse_int(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        fail(std::string("invalid ") + what + " '" + tok + "'");
    }
    if (pos != tok.size() || v < 0 || v > std::numeric_limits<int>::max())
        fail(std::string("invalid ") + what + " '" + tok + "'");
    return static_cast<int>(v);
}

struct Header {
    std::string magic;
    int width;
    int height;
    int maxval;
};

Header read_header(std::istream& in, const char* m_ascii, const char* m_binary) {
    Header h;
    h.magic = next_token(in);
    if (h.magic != m_ascii && h.magic != m_binary)
        fail("unsupported magic '" + h.magic + "' (expected " + m_ascii + " or " + m_binary + ")");
    h.width = parse_int(next_token(in), "width");
    h.height = parse_int(next_token(in), "height");
    if (h.width <= 0 || h.height <= 0) fail("image dimensions must be positive");
    const std::string mv = next_token(in);
    h.maxval = parse_int(mv, "maxval");
    if (h.maxval != 255) fail("unsupported maxval '" + mv + "' (only 255 is supported)");
    return h;
}

// Binary payload begins after exactly one whitespace byte following maxval;
// next_token has already consumed it.
void read_raw(std::istream& in, std::uint8_t* dst, std::size_t n) {
    in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) fail("truncated pixel data");
}

void read_ascii_samples(std::istream& in, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::string tok = next_token(in);
        const int v = parse_int(tok, "sample");
        if (v > 255) fail("sample '" + tok + "' exceeds maxval 255");
        dst[i] = static_cast<std::uint8_t>(v);
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open '" + path + "' for writing");
    return out;
}

} // namespace

GrayImage read_pgm(std::istream& in) {
    const Header h = read_header(in, "P2", "P5");
    GrayImage img;
    img.width = h.width;
    img.height = h.height;
    img.pixels.resize(static_cast<std::size_t>(h.width) * h.height);
    if (h.magic == "P5")
        read_raw(in, img.pixels.data(), img.pixels.size());
    else
        read_ascii_samples(in, img.pixels.data(), img.pixels.size());
    return img;
}

RgbImage read_ppm(std::istream& in) {
    const Header h = read_header(in, "P3", "P6");
    RgbImage img;
    img.width = h.width;
    img.height = h.height;
    img.pixels.resize(3 * static_cast<std::size_t>(h.width) * h.height);
    if (h.magic == "P6")
        read_raw(in, img.pixels.data(), img.pixels.size());
    else
        read_ascii_samples(in, img.pixels.data(), img.pixels.size());
    return img;
}

void write_pgm(const GrayImage& img, std::ostream& out) {
    if (img.width <= 0 || img.height <= 0 ||
        img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
        fail("inconsistent gray image");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) fail("write failed");
}

void write_ppm(const RgbImage& img, std::ostream& out) {
    if (img.width <= 0 || img.height <= 0 ||
        img.pixels.size() != 3 * static_cast<std::size_t>(img.width) * img.height)
        fail("inconsistent rgb image");
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) fail("write failed");
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_pgm(in);
}

RgbImage read_ppm(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_ppm(in);
}

void write_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out = open_output(path);
    write_pgm(img, out);
}

void write_ppm(const RgbImage& img, const std::string& path) {
    std::ofstream out = open_output(path);
    write_ppm(img, out);
}

} // namespace scalemodes

#include "sodsteg/image.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "sodsteg/error.hpp"

namespace sodsteg {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::io_failure: return "I/O failure";
        case Errc::malformed_header: return "malformed header";
        case Errc::unsupported_format: return "unsupported format";
        case Errc::unsupported_maxval: return "unsupported maxval";
        case Errc::truncated_payload: return "truncated payload";
        case Errc::bad_dimensions: return "bad dimensions";
        case Errc::invalid_argument: return "invalid argument";
        case Errc::dimension_mismatch: return "dimension mismatch";
        case Errc::delta_out_of_range: return "delta out of range";
        case Errc::kernel_too_large: return "kernel too large";
        case Errc::payload_infeasible: return "payload infeasible";
        case Errc::length_mismatch: return "length mismatch";
        case Errc::no_convergence: return "no convergence";
    }
    return "unknown error";
}

namespace {

class PgmTokenizer {
public:
    explicit PgmTokenizer(std::string_view bytes) : bytes_(bytes) {}

    // Next whitespace-delimited token, skipping '#' comments.
    std::string_view next() {
        skip_space_and_comments();
        std::size_t start = pos_;
        while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_])) &&
               bytes_[pos_] != '#') {
            ++pos_;
        }
        return bytes_.substr(start, pos_ - start);
    }

    long next_integer(const char* field) {
        std::string_view tok = next();
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw Error(Errc::malformed_header, std::string("malformed ") + field + " field");
        }
        return value;
    }

    // Exactly one whitespace byte separates the header from P5 samples.
    std::size_t binary_payload_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw Error(Errc::malformed_header, "missing whitespace after maxval");
        }
        return pos_ + 1;
    }

    bool at_end() {
        skip_space_and_comments();
        return pos_ >= bytes_.size();
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

Image decode_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw Error(Errc::malformed_header, "not a portable anymap (bad magic)");
    }
    const char kind = bytes[1];
    if (kind == '3' || kind == '6') {
        throw Error(Errc::unsupported_format, "color pixmaps are not supported; convert to grayscale");
    }
    if (kind == '1' || kind == '4' || kind == '7') {
        throw Error(Errc::unsupported_format, std::string("unsupported anymap variant P") + kind);
    }
    if (kind != '2' && kind != '5') {
        throw Error(Errc::malformed_header, "not a portable graymap (bad magic)");
    }
    if (bytes.size() > 2 && !std::isspace(static_cast<unsigned char>(bytes[2])) && bytes[2] != '#') {
        throw Error(Errc::malformed_header, "not a portable graymap (bad magic)");
    }

    PgmTokenizer tok(bytes.substr(2));
    const long width = tok.next_integer("width");
    const long height = tok.next_integer("height");
    if (width <= 0 || height <= 0 || width > 1 << 20 || height > 1 << 20) {
        throw Error(Errc::bad_dimensions, "image dimensions must be positive");
    }
    const long maxval = tok.next_integer("maxval");
    if (maxval != 255) {
        throw Error(Errc::unsupported_maxval, "unsupported maxval " + std::to_string(maxval) + " (only 255)");
    }

    Image img(static_cast<int>(width), static_cast<int>(height));
    if (kind == '5') {
        const std::size_t offset = 2 + tok.binary_payload_offset();
        if (bytes.size() - std::min(offset, bytes.size()) < img.size()) {
            throw Error(Errc::truncated_payload, "truncated payload: expected " + std::to_string(img.size()) +
                                                      " samples");
        }
        for (std::size_t i = 0; i < img.size(); ++i) {
            img.data[i] = static_cast<std::uint8_t>(bytes[offset + i]);
        }
    } else {
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (tok.at_end()) {
                throw Error(Errc::truncated_payload, "truncated payload: expected " + std::to_string(img.size()) +
                                                          " samples, got " + std::to_string(i));
            }
            const long v = tok.next_integer("sample");
            if (v < 0 || v > 255) {
                throw Error(Errc::malformed_header, "sample " + std::to_string(v) + " outside [0, 255]");
            }
            img.data[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

std::string encode_pgm(const Image& img) {
    if (img.width <= 0 || img.height <= 0 || img.size() != static_cast<std::size_t>(img.width) * img.height) {
        throw Error(Errc::bad_dimensions, "cannot encode an image with invalid dimensions");
    }
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.data.data()), img.data.size());
    return out;
}

Image load_image(const std::filesystem::path& path) { return decode_pgm(read_file(path)); }

void save_image(const Image& img, const std::filesystem::path& path) { write_file_atomic(path, encode_pgm(img)); }

DiffMap diff(const Image& cover, const Image& stego) {
    if (!cover.same_shape(stego)) {
        throw Error(Errc::dimension_mismatch, "cover is " + std::to_string(cover.width) + "x" +
                                                  std::to_string(cover.height) + ", stego is " +
                                                  std::to_string(stego.width) + "x" + std::to_string(stego.height));
    }
    DiffMap out(cover.width, cover.height);
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const int d = static_cast<int>(stego.data[i]) - static_cast<int>(cover.data[i]);
        if (d < -1 || d > 1) {
            throw Error(Errc::delta_out_of_range, "pixel " + std::to_string(i) + " changed by " + std::to_string(d) +
                                                      " (only +-1 embedding changes are valid)");
        }
        out.data[i] = static_cast<std::int8_t>(d);
    }
    return out;
}

Raster<double> to_real(const Image& img) {
    Raster<double> out(img.width, img.height);
    for (std::size_t i = 0; i < img.size(); ++i) out.data[i] = img.data[i];
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_failure, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(Errc::io_failure, "cannot read " + path.string());
    return std::move(ss).str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::io_failure, "cannot write " + path.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw Error(Errc::io_failure, "short write to " + path.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(Errc::io_failure, "cannot move output into place at " + path.string());
    }
}

}  // namespace sodsteg

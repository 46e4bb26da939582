#include <doctest.h>

#include <unistd.h>

#include <string>

#include "sodsteg/error.hpp"
#include "sodsteg/image.hpp"
#include "support.hpp"

using namespace sodsteg;

namespace {

Errc decode_error(const std::string& bytes) {
    try {
        decode_pgm(bytes);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a decode error");
    return Errc::io_failure;
}

}  // namespace

TEST_CASE("binary graymap decodes in file order") {
    const std::string bytes = std::string("P5\n2 2\n255\n") + std::string("\x00\xff\x80\x07", 4);
    const Image img = decode_pgm(bytes);
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.data == std::vector<std::uint8_t>{0, 255, 128, 7});
}

TEST_CASE("ascii graymap decodes") {
    const Image img = decode_pgm("P2 1 1 255 42");
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.data == std::vector<std::uint8_t>{42});
}

TEST_CASE("header comments are skipped") {
    const Image img = decode_pgm("P2\n# made by hand\n3 1 # width height\n255\n1 2\n# mid-payload\n3\n");
    CHECK(img.data == std::vector<std::uint8_t>{1, 2, 3});
}

TEST_CASE("decode errors are reported distinctly") {
    CHECK(decode_error("P5\n1 1\n65535\n\x00\x00") == Errc::unsupported_maxval);
    CHECK(decode_error("P5\n2 2\n255\n\x01\x02") == Errc::truncated_payload);
    CHECK(decode_error("P2 2 1 255 7") == Errc::truncated_payload);
    CHECK(decode_error("P5\n0 4\n255\n") == Errc::bad_dimensions);
    CHECK(decode_error("P5\n-3 4\n255\n") == Errc::bad_dimensions);
    CHECK(decode_error("P5\nabc 4\n255\n") == Errc::malformed_header);
    CHECK(decode_error("GIF89a") == Errc::malformed_header);
    CHECK(decode_error("P6\n1 1\n255\nabc") == Errc::unsupported_format);
    CHECK(decode_error("P3 1 1 255 1 2 3") == Errc::unsupported_format);
}

TEST_CASE("encoded images are binary graymaps") {
    const std::string bytes = encode_pgm(Image(1, 1, 0));
    CHECK(bytes.size() <= 15);
    CHECK(bytes.rfind("P5", 0) == 0);
}

TEST_CASE("save and load round-trip byte-exactly") {
    test::TempDir dir("image");
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        const Image img = test::noise_image(1 + static_cast<int>(seed % 7), 1 + static_cast<int>(seed * 3 % 11), seed);
        const auto path = dir / "img.pgm";
        save_image(img, path);
        const Image back = load_image(path);
        CHECK(back == img);
        CHECK(read_file(path) == encode_pgm(back));
    }
}

TEST_CASE("unwritable and missing paths raise I/O errors") {
    try {
        save_image(Image(1, 1, 0), "/nonexistent-dir/x.pgm");
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::io_failure);
    }
    try {
        load_image("/nonexistent-dir/x.pgm");
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::io_failure);
    }
}

TEST_CASE("diff reports stego minus cover") {
    Image cover = test::noise_image(8, 5, 3);
    for (auto& v : cover.data) v = static_cast<std::uint8_t>(std::clamp<int>(v, 2, 253));
    CHECK(diff(cover, cover) == DiffMap(8, 5, 0));

    Image stego = cover;
    cover.data[0] = 10;
    stego.data[0] = 11;
    stego.data[7] = static_cast<std::uint8_t>(cover.data[7] - 1);
    const DiffMap d = diff(cover, stego);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d.data[i] == static_cast<int>(stego.data[i]) - static_cast<int>(cover.data[i]));
    }
    CHECK(d.data[0] == 1);
    CHECK(d.data[7] == -1);

    stego.data[0] = 13;
    CHECK_THROWS_AS(diff(cover, stego), Error);
    try {
        diff(cover, stego);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::delta_out_of_range);
    }
    try {
        diff(cover, Image(5, 8));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::dimension_mismatch);
    }
}

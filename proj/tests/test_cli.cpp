#include <doctest.h>

#include <sstream>

#include "../tools/cli.hpp"
#include "sodsteg/convolution.hpp"
#include "sodsteg/image.hpp"
#include "support.hpp"

using namespace sodsteg;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kernels prints exact rationals") {
    const Outcome o = run({"kernels", "--family", "ko", "--kind", "x2", "--n", "2"});
    REQUIRE(o.status == 0);
    CHECK(o.out.find("-1/12 4/3 -5/2 4/3 -1/12") != std::string::npos);

    const Outcome classic = run({"kernels", "--family", "classic", "--name", "prewitt", "--kind", "x2"});
    const Outcome composed =
        run({"kernels", "--family", "classic", "--name", "prewitt", "--kind", "x2", "--composed"});
    CHECK(classic.status == 0);
    CHECK(classic.out == composed.out);

    CHECK(run({"kernels", "--family", "ky", "--kind", "x", "--n", "1"}).status == cli::invalid_parameter);
    CHECK(run({"kernels", "--family", "ky", "--kind", "x2", "--n", "0"}).status == cli::invalid_parameter);
    CHECK(run({"kernels", "--family", "nope"}).status == cli::usage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == cli::usage);
    CHECK(run({"frobnicate"}).status == cli::usage);
    CHECK(run({"kernels", "--family", "ko", "--bogus"}).status == cli::usage);
    CHECK(run({"embed", "--in", "x.pgm"}).status == cli::usage);
    CHECK(run({"--help"}).status == cli::ok);
}

TEST_CASE("embed then extract through files") {
    test::TempDir dir("cli");
    const std::string cover = (dir / "cover.pgm").string();
    const std::string msg = (dir / "msg.bin").string();
    const std::string stego = (dir / "stego.pgm").string();
    save_image(test::textured_image(64, 64, 4), cover);
    std::string payload;
    for (int i = 0; i < 150; ++i) payload.push_back(static_cast<char>(i * 37 + 11));
    write_file_atomic(msg, payload);

    const Outcome e = run({"embed", "--in", cover, "--msg", msg, "--alpha", "0.4", "--key", "99", "--out", stego});
    REQUIRE(e.status == 0);
    CHECK(read_file(stego + ".sidecar").find("message_bits=1200") != std::string::npos);

    const std::string by_flags = (dir / "flags.bin").string();
    CHECK(run({"extract", "--in", stego, "--out", by_flags, "--key", "99", "--len-bits", "1200"}).status == 0);
    CHECK(read_file(by_flags) == payload);

    const std::string by_sidecar = (dir / "side.bin").string();
    CHECK(run({"extract", "--in", stego, "--out", by_sidecar, "--sidecar", stego + ".sidecar"}).status == 0);
    CHECK(read_file(by_sidecar) == payload);

    // same arguments, same bytes
    const std::string again = (dir / "again.pgm").string();
    CHECK(run({"embed", "--in", cover, "--msg", msg, "--alpha", "0.4", "--key", "99", "--out", again}).status == 0);
    CHECK(read_file(again) == read_file(stego));

    CHECK(run({"extract", "--in", stego, "--out", by_flags}).status == cli::invalid_parameter);

    const std::string diffmap = (dir / "diff.pgm").string();
    REQUIRE(run({"diffmap", "--cover", cover, "--stego", stego, "--out", diffmap}).status == 0);
    const Image vis = load_image(diffmap);
    for (auto v : vis.data) CHECK((v == 1 || v == 128 || v == 255));

    const Outcome stats = run({"stats", "--cover", cover, "--stego", stego});
    CHECK(stats.status == 0);
    CHECK(stats.out.find("\"changes\":") != std::string::npos);

    // payload larger than alpha allows
    CHECK(run({"embed", "--in", cover, "--msg", msg, "--alpha", "0.1", "--key", "1", "--out", again}).status ==
          cli::payload);
    CHECK(run({"embed", "--in", cover, "--msg", msg, "--alpha", "0.4", "--key", "1", "--out", again, "--height",
               "3"})
              .status == cli::invalid_parameter);
}

TEST_CASE("costmap, simulate and negative exponents") {
    test::TempDir dir("cli");
    const std::string cover = (dir / "cover.pgm").string();
    save_image(test::half_flat_half_noise(48, 48, 2), cover);

    const std::string costs = (dir / "c.f32").string();
    const std::string viz = (dir / "c.pgm").string();
    REQUIRE(run({"costmap", "--in", cover, "--out", costs, "--viz", viz, "--p", "-2", "--family", "ko", "--N", "3",
                 "--field-prefix", (dir / "f").string()})
                .status == 0);
    const ResponseMap map = load_f32(costs);
    CHECK(map.width == 48);
    CHECK(map.at(5, 5) == doctest::Approx(1e10));
    CHECK(load_image(viz).width == 48);
    CHECK(load_f32((dir / "f_pxy.f32").string()).height == 48);

    CHECK(run({"costmap", "--in", cover, "--out", costs, "--p", "1"}).status == cli::invalid_parameter);
    CHECK(run({"costmap", "--in", cover, "--out", costs, "--N", "49"}).status == cli::invalid_parameter);
    CHECK(run({"costmap", "--in", cover, "--out", costs, "--border", "wrap"}).status == cli::usage);

    const std::string s1 = (dir / "s1.pgm").string();
    const std::string s2 = (dir / "s2.pgm").string();
    CHECK(run({"simulate", "--in", cover, "--alpha", "0.2", "--key", "5", "--out", s1}).status == 0);
    CHECK(run({"simulate", "--in", cover, "--alpha", "0.2", "--key", "5", "--out", s2}).status == 0);
    CHECK(read_file(s1) == read_file(s2));
    CHECK(run({"simulate", "--in", cover, "--alpha", "1.5", "--key", "5", "--out", s2}).status == cli::invalid_parameter);
}

TEST_CASE("file and format failures map to distinct statuses") {
    test::TempDir dir("cli");
    const std::string missing = (dir / "missing.pgm").string();
    const std::string out = (dir / "o.f32").string();
    CHECK(run({"costmap", "--in", missing, "--out", out}).status == cli::io);

    const std::string wide = (dir / "wide.pgm").string();
    write_file_atomic(wide, std::string("P5 2 2 65535\n") + std::string(8, '\0'));
    const Outcome o = run({"costmap", "--in", wide, "--out", out});
    CHECK(o.status == cli::image_format);
    CHECK(o.err.find("sodsteg:") == 0);

    const std::string a = (dir / "a.pgm").string();
    const std::string b = (dir / "b.pgm").string();
    save_image(test::noise_image(8, 8, 1), a);
    save_image(test::noise_image(8, 9, 1), b);
    CHECK(run({"diffmap", "--cover", a, "--stego", b, "--out", (dir / "d.pgm").string()}).status == cli::dimension);
    save_image(test::noise_image(8, 8, 2), b);
    CHECK(run({"diffmap", "--cover", a, "--stego", b, "--out", (dir / "d.pgm").string()}).status == cli::dimension);
}

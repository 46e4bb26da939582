#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sodsteg/convolution.hpp"
#include "sodsteg/distortion.hpp"
#include "sodsteg/embedding.hpp"
#include "sodsteg/error.hpp"
#include "sodsteg/hessian.hpp"
#include "sodsteg/image.hpp"
#include "sodsteg/kernel.hpp"

namespace sodsteg::cli {

namespace {

namespace fs = std::filesystem;

Status status_for(Errc code) {
    switch (code) {
        case Errc::io_failure: return io;
        case Errc::malformed_header:
        case Errc::unsupported_format:
        case Errc::unsupported_maxval:
        case Errc::truncated_payload:
        case Errc::bad_dimensions: return image_format;
        case Errc::invalid_argument:
        case Errc::kernel_too_large: return invalid_parameter;
        case Errc::dimension_mismatch:
        case Errc::delta_out_of_range: return dimension;
        case Errc::payload_infeasible:
        case Errc::length_mismatch: return payload;
        case Errc::no_convergence: return convergence;
    }
    return usage;
}

// Options shared by every command that derives a cost map from a cover.
struct CostOptions {
    std::string family = "ky";
    int N = 0;  // 0: family default
    double p = default_holder_exponent;
    double wet = default_wet_cost;
    std::string border = "mirror";

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "Kernel family: ky or ko")->check(CLI::IsMember({"ky", "ko"}));
        cmd->add_option("--N", N, "Largest kernel scale (default 4 for ky, 12 for ko)");
        cmd->add_option("--p", p, "Holder exponent, negative");
        cmd->add_option("--wet", wet, "Cost assigned to pixels with a null derivative");
        cmd->add_option("--border", border, "Border policy: mirror or replicate")
            ->check(CLI::IsMember({"mirror", "replicate"}));
    }

    Family resolved_family() const { return parse_family(family); }
    int resolved_N() const { return N > 0 ? N : default_scale(resolved_family()); }

    HessianField field(const Image& img) const {
        if (N < 0) throw Error(Errc::invalid_argument, "--N must be positive");
        return build_field(img, resolved_family(), resolved_N(), parse_border(border));
    }
    CostMap costs(const Image& img) const { return cost_map(field(img), p, wet); }
};

// key=value lines describing how a stego image was produced.
struct Sidecar {
    std::map<std::string, std::string> values;

    static fs::path path_for(const fs::path& stego) {
        fs::path p = stego;
        p += ".sidecar";
        return p;
    }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [k, v] : values) out << k << '=' << v << '\n';
        return out.str();
    }

    static Sidecar parse(const std::string& text) {
        Sidecar s;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw Error(Errc::invalid_argument, "sidecar: malformed line '" + line + "'");
            s.values[line.substr(0, eq)] = line.substr(eq + 1);
        }
        return s;
    }

    template <typename T>
    std::optional<T> get(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        std::istringstream in(it->second);
        T v{};
        if (!(in >> v)) throw Error(Errc::invalid_argument, "sidecar: bad value for " + key);
        return v;
    }
};

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

Kernel select_kernel(const std::string& family, const std::string& name, const std::string& kind_name, int n,
                     bool composed) {
    KernelKind kind;
    if (kind_name == "x") {
        kind = KernelKind::first_x;
    } else if (kind_name == "y") {
        kind = KernelKind::first_y;
    } else {
        kind = parse_kernel_kind(kind_name);
    }
    if (family == "classic") {
        const GradientOperator op = parse_gradient_operator(name);
        if (kind == KernelKind::first_x) return classic_gradient(op);
        if (kind == KernelKind::first_y) return rotate_90(classic_gradient(op));
        return composed ? compose_second_order(op, kind) : classic_second_order(op, kind);
    }
    if (!is_second_order(kind)) throw Error(Errc::invalid_argument, "ky/ko kernels are second order (x2, y2, xy)");
    return family_kernel(parse_family(family), kind, n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Second-order derivative steganography: kernels, cost maps, embedding and extraction"};
    app.require_subcommand(1);

    // kernels
    std::string k_family;
    std::string k_name = "sobel";
    std::string k_kind = "x2";
    int k_n = 1;
    bool k_composed = false;
    auto* kernels = app.add_subcommand("kernels", "Print an exact rational kernel");
    kernels->add_option("--family", k_family, "classic, ky or ko")
        ->required()
        ->check(CLI::IsMember({"classic", "ky", "ko"}));
    kernels->add_option("--name", k_name, "Classic operator: sobel, prewitt, central, intermediate");
    kernels->add_option("--kind", k_kind, "x, y (gradients), x2, y2 or xy");
    kernels->add_option("--n", k_n, "Scale: the kernel is (2n+1)x(2n+1)");
    kernels->add_flag("--composed", k_composed, "Classic second-order kernel built by kernel convolution");

    // costmap
    CostOptions c_opts;
    std::string c_in, c_out, c_viz, c_prefix;
    auto* costmap = app.add_subcommand("costmap", "Compute the per-pixel distortion cost map");
    costmap->add_option("--in", c_in, "Cover PGM")->required();
    costmap->add_option("--out", c_out, "Cost map (.f32)")->required();
    costmap->add_option("--viz", c_viz, "8-bit visualization of -log(cost) (PGM)");
    costmap->add_option("--field-prefix", c_prefix, "Also write <prefix>_pxx.f32, _pyy.f32, _pxy.f32");
    c_opts.attach(costmap);

    // embed
    CostOptions e_opts;
    std::string e_in, e_msg, e_out, e_sidecar;
    double e_alpha = 0.0;
    std::uint64_t e_key = 0;
    int e_height = default_constraint_height;
    auto* embed_cmd = app.add_subcommand("embed", "Hide a message with syndrome-trellis coding");
    embed_cmd->add_option("--in", e_in, "Cover PGM")->required();
    embed_cmd->add_option("--msg", e_msg, "Message file (raw bytes)")->required();
    embed_cmd->add_option("--alpha", e_alpha, "Payload cap in bits per pixel, at most 0.5")->required();
    embed_cmd->add_option("--key", e_key, "Stego key seed")->required();
    embed_cmd->add_option("--out", e_out, "Stego PGM")->required();
    embed_cmd->add_option("--height", e_height, "Trellis constraint height [6, 12]");
    embed_cmd->add_option("--sidecar", e_sidecar, "Sidecar record path (default <out>.sidecar)");
    e_opts.attach(embed_cmd);

    // extract
    std::string x_in, x_out, x_sidecar;
    std::optional<std::uint64_t> x_key;
    std::optional<std::size_t> x_len;
    std::optional<int> x_height;
    auto* extract_cmd = app.add_subcommand("extract", "Recover a message from a stego image");
    extract_cmd->add_option("--in", x_in, "Stego PGM")->required();
    extract_cmd->add_option("--out", x_out, "Recovered message file")->required();
    extract_cmd->add_option("--key", x_key, "Stego key seed");
    extract_cmd->add_option("--len-bits", x_len, "Message length in bits");
    extract_cmd->add_option("--height", x_height, "Trellis constraint height [6, 12]");
    extract_cmd->add_option("--sidecar", x_sidecar, "Read key, length and height from a sidecar record");

    // simulate
    CostOptions s_opts;
    std::string s_in, s_out;
    double s_alpha = 0.0;
    std::uint64_t s_key = 0;
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate optimal embedding at payload alpha");
    simulate_cmd->add_option("--in", s_in, "Cover PGM")->required();
    simulate_cmd->add_option("--alpha", s_alpha, "Payload in bits per pixel")->required();
    simulate_cmd->add_option("--key", s_key, "Seed for the change draws")->required();
    simulate_cmd->add_option("--out", s_out, "Stego PGM")->required();
    s_opts.attach(simulate_cmd);

    // diffmap
    std::string d_cover, d_stego, d_out;
    auto* diffmap = app.add_subcommand("diffmap", "Render stego - cover as 128 + 127*delta");
    diffmap->add_option("--cover", d_cover, "Cover PGM")->required();
    diffmap->add_option("--stego", d_stego, "Stego PGM")->required();
    diffmap->add_option("--out", d_out, "Output PGM")->required();

    // stats
    CostOptions t_opts;
    std::string t_cover, t_stego;
    auto* stats_cmd = app.add_subcommand("stats", "Summarize where embedding changes fall");
    stats_cmd->add_option("--cover", t_cover, "Cover PGM")->required();
    stats_cmd->add_option("--stego", t_stego, "Stego PGM")->required();
    t_opts.attach(stats_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*kernels) {
            out << dump_kernel(select_kernel(k_family, k_name, k_kind, k_n, k_composed));
        } else if (*costmap) {
            const Image cover = load_image(c_in);
            const HessianField field = c_opts.field(cover);
            const CostMap costs = cost_map(field, c_opts.p, c_opts.wet);
            save_f32(costs.costs, c_out);
            if (!c_viz.empty()) save_image(cost_visualization(costs), c_viz);
            if (!c_prefix.empty()) {
                save_f32(field.pxx, c_prefix + "_pxx.f32");
                save_f32(field.pyy, c_prefix + "_pyy.f32");
                save_f32(field.pxy, c_prefix + "_pxy.f32");
            }
        } else if (*embed_cmd) {
            const Image cover = load_image(e_in);
            const Message msg = message_from_bytes(read_file(e_msg));
            const std::size_t capacity = payload_bits(e_alpha, cover.size());
            if (msg.size() == 0) throw Error(Errc::payload_infeasible, "message file is empty");
            if (msg.size() > capacity) {
                throw Error(Errc::payload_infeasible, "message has " + std::to_string(msg.size()) +
                                                          " bits but alpha allows " + std::to_string(capacity));
            }
            const CostMap costs = e_opts.costs(cover);
            const Image stego = embed(cover, costs, msg, StegoKey{e_key}, e_height);
            save_image(stego, e_out);

            Sidecar side;
            side.values["seed"] = std::to_string(e_key);
            side.values["alpha"] = format_double(e_alpha);
            side.values["message_bits"] = std::to_string(msg.size());
            side.values["pixels"] = std::to_string(cover.size());
            side.values["family"] = to_string(e_opts.resolved_family());
            side.values["N"] = std::to_string(e_opts.resolved_N());
            side.values["p"] = format_double(e_opts.p);
            side.values["constraint_height"] = std::to_string(e_height);
            write_file_atomic(e_sidecar.empty() ? Sidecar::path_for(e_out) : fs::path(e_sidecar), side.text());
        } else if (*extract_cmd) {
            Sidecar side;
            if (!x_sidecar.empty()) side = Sidecar::parse(read_file(x_sidecar));
            const auto key = x_key ? x_key : side.get<std::uint64_t>("seed");
            const auto len = x_len ? x_len : side.get<std::size_t>("message_bits");
            const int height = x_height.value_or(side.get<int>("constraint_height").value_or(default_constraint_height));
            if (!key || !len) throw Error(Errc::invalid_argument, "extract needs --key and --len-bits (or --sidecar)");
            const Image stego = load_image(x_in);
            write_file_atomic(x_out, message_to_bytes(extract(stego, StegoKey{*key}, *len, height)));
        } else if (*simulate_cmd) {
            const Image cover = load_image(s_in);
            save_image(simulate(cover, s_opts.costs(cover), s_alpha, StegoKey{s_key}), s_out);
        } else if (*diffmap) {
            const DiffMap delta = diff(load_image(d_cover), load_image(d_stego));
            Image vis(delta.width, delta.height);
            for (std::size_t i = 0; i < vis.size(); ++i) vis.data[i] = static_cast<std::uint8_t>(128 + 127 * delta.data[i]);
            save_image(vis, d_out);
        } else if (*stats_cmd) {
            const Image cover = load_image(t_cover);
            const Image stego = load_image(t_stego);
            out << to_json(change_stats(cover, stego, t_opts.costs(cover))) << '\n';
        }
    } catch (const Error& e) {
        err << "sodsteg: " << to_string(e.code()) << ": " << e.what() << '\n';
        return status_for(e.code());
    }
    return ok;
}

}  // namespace sodsteg::cli

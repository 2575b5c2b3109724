#include "dictatorlab/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dictatorlab/io.hpp"
#include "dictatorlab/tail_bounds.hpp"

namespace dictatorlab {

namespace {

std::int64_t size_cap_from_env() {
    const char* env = std::getenv("DICTATORLAB_SIZE_CAP");
    if (env == nullptr) return GridShape::kDefaultSizeCap;
    char* end = nullptr;
    const long long cap = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1)
        throw ValidationError("DICTATORLAB_SIZE_CAP must be a positive integer, got \"" +
                              std::string(env) + "\"");
    return cap;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_atomic(out_path, content);
}

std::int64_t default_k_max(const GridShape& shape) {
    const std::int64_t max_size = shape.size() / shape.r();
    return (max_size + 4) / 5;  // ceil(0.2 * r^(n-1))
}

struct SpectrumArgs {
    std::string in, out, coeffs_out;
};

struct RecoverArgs {
    std::string set, out;
};

struct VerifyArgs {
    std::string set, out;
    std::string corpus = "perturb";
    int r = 0, n = 0;
    std::int64_t k = -1;
    int seeds = 50;
    std::uint64_t seed = 0;
};

struct EnumerateArgs {
    int r = 0, n = 0;
    std::int64_t size = -1;
    std::int64_t cap = kDefaultEnumerationCap;
    std::string out;
};

struct CorpusArgs {
    int r = 0, n = 0, coord = 1, value = 0;
    std::int64_t k = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct BennettArgs {
    double sigma2 = 0.0, c = 0.0, t = 0.0;
};

int run_spectrum(const SpectrumArgs& args, std::int64_t cap) {
    const GridFunction f = load_grid_function(args.in, cap);
    if (f.shape().binary_radix())
        std::cerr << "warning: radix 2 is outside the stability regime; spectral output only\n";
    const Spectrum spec = fast_forward(f);
    if (!args.coeffs_out.empty()) save_spectrum(spec, args.coeffs_out);
    emit(levels_csv(level_weights(spec)), args.out);
    return 0;
}

int run_recover(const RecoverArgs& args, std::int64_t cap) {
    const IndependentSet j(load_vertex_set(args.set, cap));
    const auto [dict, report] = recover_independent_set(j);
    (void)dict;
    emit(report_to_json(report), args.out);
    return 0;
}

int run_verify(const VerifyArgs& args, std::int64_t cap) {
    if (!args.set.empty()) {
        const IndependentSet j(load_vertex_set(args.set, cap));
        const std::vector<VerifyTrial> rows{verify_one_set(j)};
        emit(verify_csv(rows, "dictatorlab verify set=" + args.set), args.out);
        return 0;
    }
    if (args.r == 0 || args.n == 0)
        throw ValidationError("verify needs either --set or both --r and --n");
    if (args.corpus != "perturb")
        throw ValidationError("unknown corpus \"" + args.corpus + "\" (available: perturb)");
    const GridShape shape(args.r, args.n, cap);
    const std::int64_t k_max = args.k >= 0 ? args.k : default_k_max(shape);
    const auto rows = run_perturbation_corpus(shape, k_max, args.seeds, args.seed);
    const std::string provenance = "dictatorlab verify r=" + std::to_string(args.r) +
                                   " n=" + std::to_string(args.n) + " corpus=perturb kmax=" +
                                   std::to_string(k_max) + " seeds=" + std::to_string(args.seeds) +
                                   " base_seed=" + std::to_string(args.seed);
    emit(verify_csv(rows, provenance), args.out);
    return 0;
}

int run_enumerate(const EnumerateArgs& args, std::int64_t cap) {
    const GridShape shape(args.r, args.n, cap);
    const EnumerationResult result = max_independent_sets(shape, args.size, args.cap);
    std::string out;
    for (const IndependentSet& set : result.sets) {
        nlohmann::json verts = nlohmann::json::array();
        for (std::int64_t m : set.members()) verts.push_back(point_of(m, shape).coords);
        out += verts.dump() + "\n";
    }
    if (result.truncated)
        std::cerr << "warning: output truncated at cap " << args.cap << "; result is partial\n";
    emit(out, args.out);
    return 0;
}

int run_corpus(const CorpusArgs& args, std::int64_t cap) {
    const GridShape shape(args.r, args.n, cap);
    const DictatorSet source(shape, args.coord, args.value);
    const IndependentSet j = perturb(source, args.k, args.seed);
    save_vertex_set(j, args.out);
    std::cout << "# corpus r=" << args.r << " n=" << args.n << " coord=" << args.coord
              << " value=" << args.value << " k=" << args.k << " seed=" << args.seed << " -> "
              << args.out << "\n";
    return 0;
}

int run_bennett(const BennettArgs& args) {
    std::string out = "bennett_tail," + format_double(bennett_tail({args.sigma2, args.c, args.t})) + "\n";
    // Same variance budget expressed as eps' = 1e-4 * sigma^2; report the
    // specialized bound when t is inside its regime.
    const double eps_prime = 1e-4 * args.sigma2;
    const double t_min = std::max(1.0 / 6.0, std::numbers::e * args.sigma2 / args.c);
    if (args.t >= t_min)
        out += "lemma33_tail," + format_double(lemma33_tail(eps_prime, args.c, args.t)) + "\n";
    std::cout << out;
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Fourier analysis on Z_r^n and recovery of near-maximum independent sets in K_r^n"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Level weights of a function's transform");
    spectrum_cmd->add_option("--in", spectrum_args.in, "GridFunction JSON")->required();
    spectrum_cmd->add_option("--out", spectrum_args.out, "CSV output path (default: stdout)");
    spectrum_cmd->add_option("--coeffs-out", spectrum_args.coeffs_out, "also save the Spectrum JSON");

    RecoverArgs recover_args;
    auto* recover_cmd = app.add_subcommand("recover", "Recover the nearest dictator set");
    recover_cmd->add_option("--set", recover_args.set, "VertexSet JSON")->required();
    recover_cmd->add_option("--out", recover_args.out, "report output path (default: stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Recovery sweep over a perturbation corpus");
    verify_cmd->add_option("--set", verify_args.set, "verify a single VertexSet JSON");
    verify_cmd->add_option("--r", verify_args.r, "radix");
    verify_cmd->add_option("--n", verify_args.n, "dimension");
    verify_cmd->add_option("--corpus", verify_args.corpus, "corpus kind (perturb)");
    verify_cmd->add_option("--k", verify_args.k, "max removals (default ceil(0.2*r^(n-1)))");
    verify_cmd->add_option("--seeds", verify_args.seeds, "seeds per k (default 50)");
    verify_cmd->add_option("--seed", verify_args.seed, "base seed (default 0)");
    verify_cmd->add_option("--out", verify_args.out, "CSV output path (default: stdout)");

    EnumerateArgs enumerate_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "All independent sets of a given size");
    enumerate_cmd->add_option("--r", enumerate_args.r, "radix")->required();
    enumerate_cmd->add_option("--n", enumerate_args.n, "dimension")->required();
    enumerate_cmd->add_option("--size", enumerate_args.size, "target size (default r^(n-1))");
    enumerate_cmd->add_option("--cap", enumerate_args.cap, "max sets to emit");
    enumerate_cmd->add_option("--out", enumerate_args.out, "output path (default: stdout)");

    CorpusArgs corpus_args;
    auto* corpus_cmd = app.add_subcommand("corpus", "Write a perturbed dictator set");
    corpus_cmd->add_option("--r", corpus_args.r, "radix")->required();
    corpus_cmd->add_option("--n", corpus_args.n, "dimension")->required();
    corpus_cmd->add_option("--coord", corpus_args.coord, "dictator coordinate (1-based)");
    corpus_cmd->add_option("--value", corpus_args.value, "dictator value");
    corpus_cmd->add_option("--k", corpus_args.k, "members to remove")->required();
    corpus_cmd->add_option("--seed", corpus_args.seed, "seed (default 0)");
    corpus_cmd->add_option("--out", corpus_args.out, "VertexSet JSON output path")->required();

    BennettArgs bennett_args;
    auto* bennett_cmd = app.add_subcommand("bennett", "Evaluate the concentration bounds");
    bennett_cmd->add_option("--sigma2", bennett_args.sigma2, "total variance")->required();
    bennett_cmd->add_option("--c", bennett_args.c, "almost-sure summand bound")->required();
    bennett_cmd->add_option("--t", bennett_args.t, "threshold")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::int64_t cap = size_cap_from_env();
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args, cap);
        if (recover_cmd->parsed()) return run_recover(recover_args, cap);
        if (verify_cmd->parsed()) return run_verify(verify_args, cap);
        if (enumerate_cmd->parsed()) return run_enumerate(enumerate_args, cap);
        if (corpus_cmd->parsed()) return run_corpus(corpus_args, cap);
        if (bennett_cmd->parsed()) return run_bennett(bennett_args);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace dictatorlab

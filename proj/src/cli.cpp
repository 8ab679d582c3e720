#include "ramsey/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/coloring_file.hpp"
#include "ramsey/colorings.hpp"
#include "ramsey/game.hpp"
#include "ramsey/verifier.hpp"

namespace ramsey::cli {

namespace {

std::string render_vertices(const VertexDomain& domain, std::span<const Vertex> vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << domain.render(vs[i]);
    }
    return out.str();
}

int cmd_construct(const std::string& mode_name, int k, int N, std::uint64_t seed,
                  const std::string& from, const std::string& out_path,
                  std::ostream& out) {
    const auto mode = ColoringFile::parse_mode(mode_name);
    if (!mode) throw UsageError("unknown mode: " + mode_name);

    ColoringFile file;
    file.mode = *mode;

    if (!from.empty()) {
        // Materialize an existing base-coloring file into an explicit one.
        if (*mode != ColoringFile::Mode::Explicit)
            throw UsageError("--from only constructs explicit files");
        const auto source = ColoringFile::load_path(from);
        const auto oracle = source.oracle(/*allow_unverified=*/true);
        file.explicit_table = materialize(*oracle);
        file.k = file.explicit_table->k;
        file.N = file.explicit_table->N;
        file.seed = source.seed;
    } else {
        if (k < 2) throw UsageError("--k must be >= 2");
        if (N < 1) throw UsageError("--N must be >= 1");
        file.k = k;
        file.N = N;
        file.seed = seed;
        switch (*mode) {
            case ColoringFile::Mode::Explicit:
                if (N < k) throw UsageError("explicit mode needs N >= k");
                file.explicit_table = random_explicit(N, k, seed);
                break;
            case ColoringFile::Mode::Rank:
                if (N < k - 1) throw UsageError("rank mode needs N >= k-1");
                file.rank_base = random_base(N, k, seed);
                break;
            case ColoringFile::Mode::StepUp:
            case ColoringFile::Mode::StepUpStrong:
                if (N < k - 1) throw UsageError("stepup modes need N >= k-1");
                file.step_base = random_base_two(N, k - 1, seed);
                break;
        }
    }

    if (out_path.empty() || out_path == "-") {
        file.save(out);
    } else {
        file.save_path(out_path);
        out << "wrote " << out_path << " (mode " << ColoringFile::mode_name(file.mode)
            << ", k=" << file.k << ", N=" << file.N << ")\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, int t, int n, bool red_only, bool blue_only,
               int jobs, bool allow_unverified, std::ostream& out) {
    const auto file = ColoringFile::load_path(path);
    const auto oracle = file.oracle(allow_unverified);
    const auto domain = oracle->domain().vertices();
    const ScanOptions opts{jobs};

    bool witness_found = false;

    if (!blue_only) {
        if (t < 2) throw UsageError("verify needs --t >= 2 for the red scan");
        const auto witness = find_red_heavy_set(*oracle, t, domain, opts);
        if (witness) {
            witness_found = true;
            out << "red: witness " << render_vertices(oracle->domain(), witness->vertices)
                << " (" << witness->red_edges.size() << " red edges)\n";
        } else {
            out << "red: none\n";
        }
    }
    if (!red_only) {
        if (n < oracle->uniformity())
            throw UsageError("verify needs --n >= the file's uniformity for the blue scan");
        const std::uint64_t work = binomial(domain.size(), static_cast<std::uint64_t>(n));
        if (work > 30000000)
            throw CapacityError("blue scan over C(" + std::to_string(domain.size()) + ", " +
                                std::to_string(n) + ") subsets is too large");
        const auto witness = find_blue_clique(*oracle, n, domain, opts);
        if (witness) {
            witness_found = true;
            out << "blue: witness " << render_vertices(oracle->domain(), witness->vertices)
                << "\n";
        } else {
            out << "blue: none\n";
        }
    }
    return witness_found ? 1 : 0;
}

int cmd_game(int k, int n, const std::string& painter_spec, std::uint64_t budget,
             const std::string& transcript_path, const std::string& replay_path,
             std::ostream& out) {
    GameConfig config{k, n, budget};

    std::unique_ptr<Painter> painter;
    if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) throw UsageError("cannot open " + replay_path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
        painter = make_transcript_painter(lines);
    } else {
        painter = make_painter(painter_spec, config);
    }

    const auto outcome = run_game(config, *painter);

    out << "outcome "
        << (outcome.witness.kind == ConfigurationWitness::Kind::RedFork ? "RedF" : "Blue")
        << "\n";
    out << "witness";
    for (Vertex v : outcome.witness.vertices) out << ' ' << v;
    out << "\n";
    out << "s " << outcome.stats.vertices << "\n";
    out << "r " << outcome.stats.red_edges << "\n";
    out << "m " << outcome.stats.total_edges << "\n";

    if (!transcript_path.empty()) {
        std::ofstream ts(transcript_path);
        if (!ts) throw UsageError("cannot write " + transcript_path);
        for (const auto& line : outcome.transcript) ts << line << '\n';
    }

    const auto limits = ResourceLimits::for_game(k, n);
    if (!limits.within(outcome.stats)) {
        out << "resource bounds violated\n";
        return 1;
    }
    return 0;
}

int cmd_exact(int k, int t, int n, int n_max, std::ostream& out) {
    const auto result = exact_ramsey(RamseyQuery{k, t, n, n_max});
    if (result.value)
        out << *result.value << "\n";
    else
        out << "exceeded " << result.searched_up_to << "\n";
    return 0;
}

int cmd_steiner(int n, int k, const std::string& out_path, std::ostream& out) {
    const auto family = greedy_partial_steiner(n, k);
    out << "blocks " << family.blocks.size() << "\n";
    std::ostream* sink = &out;
    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw UsageError("cannot write " + out_path);
        sink = &file_out;
    }
    for (const auto& block : family.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            (*sink) << block[i] << (i + 1 == block.size() ? "" : " ");
        (*sink) << '\n';
    }
    return 0;
}

int cmd_bounds(int k, int t, int n, double c, double c_prime,
               std::optional<std::uint64_t> inner, std::ostream& out) {
    const auto report = bound_report(k, t, n, c, c_prime, inner);
    out << "theorem: " << report.theorem << "\n";
    out << "formulas: " << report.formulas << "\n";
    if (report.lower)
        out << "lower: " << report.lower->text() << " (" << report.lower->digits_text()
            << ")\n";
    if (report.upper)
        out << "upper: " << report.upper->text() << " (" << report.upper->digits_text()
            << ")\n";
    if (report.recursion) out << "recursion: " << *report.recursion << "\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"explicit Ramsey colorings, on-line builder-painter games, and "
                 "brute-force verification at desk scale"};
    app.require_subcommand(1);

    // construct
    std::string mode = "rank", from, out_path, file_path, painter = "red";
    std::string transcript_path, replay_path, steiner_out;
    int k = 3, n = 3, t = 3, N = 5, n_max = 10, jobs = 1;
    std::uint64_t seed = 0, budget = 0;
    double c = 1.0, c_prime = 1.0;
    bool red_only = false, blue_only = false, allow_unverified = false;
    std::optional<std::uint64_t> inner;

    auto* construct = app.add_subcommand("construct", "write a coloring file");
    construct->add_option("--mode", mode, "explicit|rank|stepup|stepup-strong");
    construct->add_option("--k", k, "uniformity of the target coloring");
    construct->add_option("--N", N, "base vertex count");
    construct->add_option("--seed", seed, "generator seed");
    construct->add_option("--from", from, "materialize this base-coloring file");
    construct->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "scan a coloring for the two targets");
    verify->add_option("file", file_path, "coloring file")->required();
    verify->add_option("--t", t, "red edge threshold in a (k+1)-set");
    verify->add_option("--n", n, "blue clique size");
    verify->add_flag("--red-only", red_only, "skip the blue scan");
    verify->add_flag("--blue-only", blue_only, "skip the red scan");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_flag("--allow-unverified", allow_unverified,
                     "accept stepping parameters outside the verified regime");

    auto* game = app.add_subcommand("game", "play the on-line builder-painter game");
    game->add_option("--k", k, "edges are (k-1)-sets");
    game->add_option("--n", n, "blue clique target");
    game->add_option("--painter", painter, "red|blue|random:SEED|minimax:DEPTH");
    game->add_option("--budget", budget, "vertex budget (0 = default)");
    game->add_option("--out", transcript_path, "write the transcript here");
    game->add_option("--replay", replay_path, "replay a recorded transcript");

    auto* exact = app.add_subcommand("exact", "exact small Ramsey value by search");
    exact->add_option("--k", k)->required();
    exact->add_option("--t", t)->required();
    exact->add_option("--n", n)->required();
    exact->add_option("--nmax", n_max, "search ceiling");

    auto* steiner = app.add_subcommand("steiner", "greedy maximal partial Steiner system");
    steiner->add_option("--n", n)->required();
    steiner->add_option("--k", k)->required();
    steiner->add_option("--out", steiner_out, "write blocks here");

    auto* bounds = app.add_subcommand("bounds", "instantiate the published bound forms");
    bounds->add_option("--k", k)->required();
    bounds->add_option("--t", t)->required();
    bounds->add_option("--n", n)->required();
    bounds->add_option("--c", c, "lower-bound constant");
    bounds->add_option("--cprime", c_prime, "upper-bound constant");
    bounds->add_option("--inner", inner, "inner value for the one-step recursion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to stdout and exits cleanly.
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(mode, k, N, seed, from, out_path, out);
        if (verify->parsed())
            return cmd_verify(file_path, t, n, red_only, blue_only, jobs, allow_unverified,
                              out);
        if (game->parsed())
            return cmd_game(k, n, painter, budget, transcript_path, replay_path, out);
        if (exact->parsed()) return cmd_exact(k, t, n, n_max, out);
        if (steiner->parsed()) return cmd_steiner(n, k, steiner_out, out);
        if (bounds->parsed()) return cmd_bounds(k, t, n, c, c_prime, inner, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ramsey::cli

#include "ramsey/coloring_file.hpp"

#include <fstream>
#include <sstream>

namespace ramsey {

namespace {

constexpr std::string_view kMagic = "ramsey-coloring";
constexpr int kVersion = 1;

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    std::string word;
    while (in >> word) words.push_back(word);
    return words;
}

std::optional<std::uint64_t> parse_u64(const std::string& word) {
    if (word.empty()) return std::nullopt;
    std::uint64_t value = 0;
    for (char c : word) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

// "v1 ... v_size COLOR" -> sorted tuple + trailing word.
std::pair<std::vector<Vertex>, std::string> parse_body_line(const std::string& line,
                                                            std::size_t size, int N,
                                                            int line_no) {
    const auto words = split_words(line);
    if (words.size() != size + 1)
        throw FormatError(line_no, "expected " + std::to_string(size) +
                                       " vertices and a value");
    std::vector<Vertex> tuple;
    tuple.reserve(size);
    Vertex prev = 0;
    for (std::size_t i = 0; i < size; ++i) {
        const auto v = parse_u64(words[i]);
        if (!v || *v < 1 || *v > static_cast<std::uint64_t>(N))
            throw FormatError(line_no, "vertex out of range: " + words[i]);
        if (*v <= prev)
            throw FormatError(line_no, "vertices must be strictly increasing");
        prev = *v;
        tuple.push_back(*v);
    }
    return {std::move(tuple), words.back()};
}

Color parse_color(const std::string& word, int line_no) {
    if (word == "R") return Color::Red;
    if (word == "B") return Color::Blue;
    throw FormatError(line_no, "expected R or B, got: " + word);
}

}  // namespace

std::string_view ColoringFile::mode_name(Mode mode) {
    switch (mode) {
        case Mode::Explicit: return "explicit";
        case Mode::Rank: return "rank";
        case Mode::StepUp: return "stepup";
        case Mode::StepUpStrong: return "stepup-strong";
    }
    return "?";
}

std::optional<ColoringFile::Mode> ColoringFile::parse_mode(std::string_view name) {
    if (name == "explicit") return Mode::Explicit;
    if (name == "rank") return Mode::Rank;
    if (name == "stepup") return Mode::StepUp;
    if (name == "stepup-strong") return Mode::StepUpStrong;
    return std::nullopt;
}

ColoringFile ColoringFile::load(std::istream& in) {
    ColoringFile file;
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw FormatError(1, "empty file");
    {
        const auto words = split_words(line);
        if (words.size() != 2 || words[0] != kMagic ||
            parse_u64(words[1]) != std::uint64_t{kVersion})
            throw FormatError(line_no, "expected header 'ramsey-coloring 1'");
    }

    std::optional<Mode> mode;
    std::optional<int> k, N;
    while (true) {
        if (!next_line()) throw FormatError(line_no, "missing body");
        const auto words = split_words(line);
        if (words.size() == 2 && words[0] == "mode") {
            mode = parse_mode(words[1]);
            if (!mode) throw FormatError(line_no, "unknown mode: " + words[1]);
            continue;
        }
        if (words.size() == 2 && words[0] == "k") {
            const auto v = parse_u64(words[1]);
            if (!v || *v < 2 || *v > 16) throw FormatError(line_no, "bad k");
            k = static_cast<int>(*v);
            continue;
        }
        if (words.size() == 2 && words[0] == "N") {
            const auto v = parse_u64(words[1]);
            if (!v || *v < 1 || *v > 64) throw FormatError(line_no, "bad N");
            N = static_cast<int>(*v);
            continue;
        }
        if (words.size() == 2 && words[0] == "seed") {
            const auto v = parse_u64(words[1]);
            if (!v) throw FormatError(line_no, "bad seed");
            file.seed = *v;
            continue;
        }
        break;  // first body line, still in `line`
    }
    if (!mode) throw FormatError(line_no, "missing mode");
    if (!k || !N) throw FormatError(line_no, "missing k or N");
    file.mode = *mode;
    file.k = *k;
    file.N = *N;

    const std::size_t tuple_size = file.mode == Mode::Explicit
                                       ? static_cast<std::size_t>(file.k)
                                       : static_cast<std::size_t>(file.k - 1);
    const std::uint64_t expected = binomial(static_cast<std::uint64_t>(file.N), tuple_size);
    if (expected == kBinomialSaturated || expected > (std::uint64_t{1} << 24))
        throw FormatError(line_no, "table too large for an on-disk coloring");

    std::vector<int> kary(static_cast<std::size_t>(expected), 0);
    std::vector<Color> colors(static_cast<std::size_t>(expected), Color::Blue);
    std::vector<bool> seen(static_cast<std::size_t>(expected), false);
    std::uint64_t filled = 0;

    auto rank_of = [&](std::span<const Vertex> tuple) {
        std::uint64_t rank = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            rank += binomial(tuple[i] - 1, i + 1);
        return rank;
    };

    while (true) {
        auto [tuple, value] = parse_body_line(line, tuple_size, file.N, line_no);
        const std::uint64_t rank = rank_of(tuple);
        if (seen[rank]) throw FormatError(line_no, "duplicate set");
        seen[rank] = true;
        ++filled;
        if (file.mode == Mode::Rank) {
            const auto c = parse_u64(value);
            if (!c || *c < 1 || *c > static_cast<std::uint64_t>(file.k))
                throw FormatError(line_no, "rank value must be in 1..k");
            kary[rank] = static_cast<int>(*c);
        } else {
            colors[rank] = parse_color(value, line_no);
        }
        if (!next_line()) break;
    }
    if (filled != expected)
        throw FormatError(line_no, "expected " + std::to_string(expected) +
                                       " body lines, found " + std::to_string(filled));

    switch (file.mode) {
        case Mode::Explicit: {
            ExplicitColoring table;
            table.N = file.N;
            table.k = file.k;
            table.colors = std::move(colors);
            file.explicit_table = std::move(table);
            break;
        }
        case Mode::Rank: {
            std::vector<std::uint8_t> values(kary.begin(), kary.end());
            file.rank_base = KaryBaseColoring(file.N, file.k, std::move(values));
            break;
        }
        case Mode::StepUp:
        case Mode::StepUpStrong:
            file.step_base = BaseTwoColoring(file.N, file.k - 1, std::move(colors));
            break;
    }
    return file;
}

ColoringFile ColoringFile::load_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return load(in);
}

void ColoringFile::save(std::ostream& out) const {
    out << kMagic << ' ' << kVersion << '\n';
    out << "mode " << mode_name(mode) << '\n';
    out << "k " << k << '\n';
    out << "N " << N << '\n';
    if (seed) out << "seed " << *seed << '\n';

    const std::size_t tuple_size = mode == Mode::Explicit
                                       ? static_cast<std::size_t>(k)
                                       : static_cast<std::size_t>(k - 1);
    KSubsetStream stream(static_cast<std::size_t>(N), static_cast<int>(tuple_size));
    std::vector<std::size_t> pick(tuple_size);
    std::vector<Vertex> tuple(tuple_size);
    while (stream.next(pick)) {
        for (std::size_t i = 0; i < tuple_size; ++i) tuple[i] = pick[i] + 1;
        for (std::size_t i = 0; i < tuple_size; ++i) out << tuple[i] << ' ';
        switch (mode) {
            case Mode::Explicit:
                out << color_char(explicit_table->color(tuple));
                break;
            case Mode::Rank:
                out << rank_base->value(tuple);
                break;
            case Mode::StepUp:
            case Mode::StepUpStrong:
                out << color_char(step_base->value(tuple));
                break;
        }
        out << '\n';
    }
}

void ColoringFile::save_path(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    save(out);
}

std::unique_ptr<ColoringOracle> ColoringFile::oracle(bool allow_unverified) const {
    switch (mode) {
        case Mode::Explicit:
            return explicit_table->as_oracle();
        case Mode::Rank:
            return std::make_unique<RankColoringOracle>(*rank_base);
        case Mode::StepUp:
            return make_stepping_oracle(*step_base, k, StepVariant::Standard,
                                        allow_unverified);
        case Mode::StepUpStrong:
            return make_stepping_oracle(*step_base, k, StepVariant::Strong,
                                        allow_unverified);
    }
    throw DomainError("coloring file: unknown mode");
}

}  // namespace ramsey

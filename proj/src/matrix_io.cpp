#include "hcstab/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace hcstab::io {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

bool parse_number(const std::string& s, double& out) {
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end != begin && *end == '\0' && std::isfinite(out);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

ReadResult parse_similarity(std::istream& in) {
    std::vector<std::vector<Token>> grid;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream fields(line);
        std::vector<Token> toks;
        std::string t;
        int col = 0;
        while (fields >> t) toks.push_back({std::move(t), lineno, ++col});
        if (!toks.empty()) grid.push_back(std::move(toks));
    }
    if (grid.empty())
        throw ParseError("empty input: expected an n x n similarity matrix", 0, 0);

    auto numeric = [](const Token& tok) {
        double d;
        return parse_number(tok.text, d);
    };

    // Label column: every line starts with a non-numeric field. Checked
    // before the header so a labeled matrix without one keeps its first row.
    bool labels = true;
    for (const auto& row : grid)
        if (numeric(row.front())) labels = false;
    if (labels && grid.front().size() > 1)
        for (auto& row : grid) row.erase(row.begin());

    // Header row: any non-numeric field left in the first line.
    bool header = false;
    for (const Token& tok : grid.front())
        if (!numeric(tok)) header = true;
    if (header && grid.size() > 1) grid.erase(grid.begin());

    const int n = static_cast<int>(grid.size());
    if (n < 2)
        throw ParseError("matrix must be at least 2 x 2", grid.front().front().line, 0);
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != n)
            throw ParseError("non-square matrix: expected " + std::to_string(n) +
                                 " columns, found " + std::to_string(row.size()),
                             row.front().line, static_cast<int>(row.size()));

    std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Token& tok = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            double v;
            if (!parse_number(tok.text, v))
                throw ParseError("cannot parse '" + tok.text + "' as a number", tok.line,
                                 tok.column);
            if (i != j && v < 0.0)
                throw ParseError("negative similarity " + fmt(v), tok.line, tok.column);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }

    ReadResult out;
    out.matrix = SimilarityMatrix(n);
    double max_asym = 0.0, max_diag = 0.0;
    for (int i = 0; i < n; ++i) {
        max_diag = std::max(max_diag,
                            std::abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]));
        for (int j = i + 1; j < n; ++j) {
            const double ij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double ji = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            max_asym = std::max(max_asym, std::abs(ij - ji));
            out.matrix.set(i, j, 0.5 * (ij + ji));
        }
    }
    if (max_asym > 1e-9)
        out.warnings.push_back("input symmetrized by averaging: max |S(i,j) - S(j,i)| = " +
                               fmt(max_asym));
    if (max_diag > 0.0)
        out.warnings.push_back("nonzero diagonal forced to 0: max |S(i,i)| = " + fmt(max_diag));
    return out;
}

ReadResult parse_similarity_text(const std::string& text) {
    std::istringstream in(text);
    return parse_similarity(in);
}

ReadResult read_similarity(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0, 0);
    return parse_similarity(in);
}

}  // namespace hcstab::io

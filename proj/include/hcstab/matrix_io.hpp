#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcstab/similarity.hpp"

namespace hcstab::io {

// Parse failure with the 1-based line and field position of the offender
// (0 when no single cell is responsible, e.g. an unreadable file).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

struct ReadResult {
    SimilarityMatrix matrix{2};
    std::vector<std::string> warnings;
};

// Accepts an n x n numeric matrix, comma- or whitespace-separated, with an
// optional header row and/or leading label column. Symmetrizes via
// (S + S^T)/2, warning when the asymmetry exceeds 1e-9; forces a nonzero
// diagonal to 0 with a warning; rejects negative entries.
ReadResult parse_similarity(std::istream& in);
ReadResult parse_similarity_text(const std::string& text);
ReadResult read_similarity(const std::string& path);

}  // namespace hcstab::io

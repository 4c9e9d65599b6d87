#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gcol/graph.hpp"

namespace gcol {

/// Malformed or unsupported Matrix Market input. line() is 1-based, 0 when
/// the problem is not tied to a single line (e.g. missing entries at EOF).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct MatrixMarketInfo {
    bool symmetric = false;     // symmetric / skew-symmetric / hermitian header
    std::size_t declared_entries = 0;
    std::size_t collapsed_duplicates = 0;
};

struct LoadedMatrix {
    BipartiteGraph graph;  // rows are nets, columns are vertices
    MatrixMarketInfo info;
};

/// Reads a coordinate-format Matrix Market stream. Values are ignored; explicit
/// zeros count as structural entries. Symmetric headers expand off-diagonal
/// entries to both triangles.
LoadedMatrix load_matrix_market(std::istream& in);
LoadedMatrix load_matrix_market_file(const std::string& path);

/// Writes the pattern as "matrix coordinate pattern general", net order then
/// member order.
void write_matrix_market(std::ostream& out, const BipartiteGraph& g);

}  // namespace gcol

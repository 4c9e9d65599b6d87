#include "gcol/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace gcol {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

// Parses the leading integer token of `rest` and advances past it.
bool next_int(std::string_view& rest, std::int64_t& out) {
    std::size_t i = 0;
    while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
    const char* first = rest.data() + i;
    const char* last = rest.data() + rest.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) return false;
    if (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr))) return false;
    rest = std::string_view(ptr, static_cast<std::size_t>(last - ptr));
    return true;
}

}  // namespace

LoadedMatrix load_matrix_market(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw FormatError("empty input, expected %%MatrixMarket header", 0);
    ++lineno;
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") throw FormatError("missing %%MatrixMarket banner", lineno);
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix") throw FormatError("unsupported object '" + object + "'", lineno);
    if (format == "array") throw FormatError("unsupported format: dense array matrices are not supported", lineno);
    if (format != "coordinate") throw FormatError("unknown format '" + format + "'", lineno);
    if (field != "real" && field != "integer" && field != "pattern" && field != "complex" && field != "double")
        throw FormatError("unknown field '" + field + "'", lineno);

    LoadedMatrix result;
    if (symmetry == "general") {
        result.info.symmetric = false;
    } else if (symmetry == "symmetric" || symmetry == "skew-symmetric" || symmetry == "hermitian") {
        result.info.symmetric = true;
    } else {
        throw FormatError("unknown symmetry '" + symmetry + "'", lineno);
    }

    // size line, skipping comments and blank lines
    std::int64_t rows = 0, cols = 0, entries = 0;
    for (;;) {
        if (!std::getline(in, line)) throw FormatError("missing size line", 0);
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        if (blank(line)) continue;
        std::string_view rest(line);
        std::int64_t extra;
        if (!next_int(rest, rows) || !next_int(rest, cols) || !next_int(rest, entries) || next_int(rest, extra) ||
            !blank(rest))
            throw FormatError("malformed size line, expected 'rows cols entries'", lineno);
        if (rows < 0 || cols < 0 || entries < 0) throw FormatError("negative size", lineno);
        if (rows > INT32_MAX || cols > INT32_MAX) throw FormatError("dimension too large", lineno);
        break;
    }
    result.info.declared_entries = static_cast<std::size_t>(entries);

    std::vector<std::pair<NetId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(result.info.symmetric ? 2 * entries : entries));
    std::int64_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        if (blank(line)) continue;
        if (seen == entries) throw FormatError("more entries than declared (" + std::to_string(entries) + ")", lineno);
        std::string_view rest(line);
        std::int64_t i, j;
        if (!next_int(rest, i) || !next_int(rest, j)) throw FormatError("malformed entry", lineno);
        if (i < 1 || i > rows || j < 1 || j > cols) {
            std::ostringstream os;
            os << "index out of range (" << i << ", " << j << ") for " << rows << " x " << cols << " matrix";
            throw FormatError(os.str(), lineno);
        }
        const auto r = static_cast<NetId>(i - 1);
        const auto c = static_cast<VertexId>(j - 1);
        pairs.emplace_back(r, c);
        if (result.info.symmetric && r != c) {
            if (r >= cols || c >= rows) throw FormatError("symmetric header on a non-square matrix", lineno);
            pairs.emplace_back(static_cast<NetId>(c), static_cast<VertexId>(r));
        }
        ++seen;
    }
    if (seen != entries) {
        std::ostringstream os;
        os << "entry count mismatch: header declares " << entries << ", found " << seen;
        throw FormatError(os.str(), lineno);
    }

    result.graph = BipartiteGraph::from_pairs(static_cast<NetId>(rows), static_cast<VertexId>(cols), pairs,
                                              &result.info.collapsed_duplicates);
    return result;
}

LoadedMatrix load_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const BipartiteGraph& g) {
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    out << g.num_nets() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (NetId v = 0; v < g.num_nets(); ++v)
        for (VertexId u : g.vtxs(v)) out << v + 1 << ' ' << u + 1 << '\n';
}

}  // namespace gcol

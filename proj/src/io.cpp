#include "walkrank/io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "walkrank/error.hpp"

namespace walkrank {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::int64_t parse_id(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("invalid node id '" + std::string(field) + "'", line_no);
    return value;
}

double parse_value(std::string_view field, std::size_t line_no) {
    // std::from_chars for double is not available on every toolchain we target.
    std::string s(field);
    char *end = nullptr;
    errno = 0;
    double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE)
        throw ParseError("invalid number '" + s + "'", line_no);
    return value;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

Graph load_edge_list(std::istream &in, const EdgeListOptions &options) {
    if (options.index_base != 0 && options.index_base != 1)
        throw ValidationError("index base must be 0 or 1");

    std::vector<Edge> edges;
    std::int64_t max_id = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty() || fields[0].front() == '#' || fields[0].front() == '%') continue;
        if (fields.size() < 2 || (options.weighted && fields.size() > 3))
            throw ParseError("expected 'u v' or 'u v w'", line_no);

        const std::int64_t u = parse_id(fields[0], line_no) - options.index_base;
        const std::int64_t v = parse_id(fields[1], line_no) - options.index_base;
        if (u < 0 || v < 0)
            throw ParseError("node id below index base " + std::to_string(options.index_base),
                             line_no);
        if (u > std::numeric_limits<NodeId>::max() - 1 || v > std::numeric_limits<NodeId>::max() - 1)
            throw ParseError("node id too large", line_no);

        double w = 1.0;
        if (options.weighted && fields.size() == 3) {
            w = parse_value(fields[2], line_no);
            if (!(w > 0.0) || !std::isfinite(w))
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": edge weight must be positive, got " + std::string(fields[2]));
        }
        if (u == v && !options.allow_loops)
            throw ValidationError("line " + std::to_string(line_no) + ": loop at node " +
                                  std::string(fields[0]) + " but loops are not allowed");
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
        max_id = std::max({max_id, u, v});
    }

    const auto n = static_cast<std::size_t>(max_id + 1);
    std::vector<std::int64_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(i) + options.index_base;
    return Graph::from_edges(n, edges, {options.directed, options.allow_loops}, std::move(labels));
}

Graph load_edge_list(const std::string &text, const EdgeListOptions &options) {
    std::istringstream in(text);
    return load_edge_list(in, options);
}

Graph load_matrix_market(std::istream &in, const MatrixMarketOptions &options) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty MatrixMarket input", 0);
    ++line_no;

    auto header = split_fields(line);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix")
        throw ParseError("missing '%%MatrixMarket matrix' header", line_no);
    const std::string layout = lower(header[2]);
    const std::string field = lower(header[3]);
    const std::string symmetry = lower(header[4]);
    if (layout != "coordinate")
        throw ParseError("unsupported MatrixMarket layout '" + layout + "'", line_no);
    if (field != "pattern" && field != "real" && field != "integer")
        throw ParseError("unsupported MatrixMarket field '" + field + "'", line_no);
    if (symmetry != "general" && symmetry != "symmetric")
        throw ParseError("unsupported MatrixMarket symmetry '" + symmetry + "'", line_no);
    const bool pattern = field == "pattern";
    const bool symmetric = symmetry == "symmetric";

    std::vector<std::string_view> size_fields;
    std::string size_line;
    while (std::getline(in, size_line)) {
        ++line_no;
        size_fields = split_fields(size_line);
        if (!size_fields.empty() && size_fields[0].front() != '%') break;
        size_fields.clear();
    }
    if (size_fields.size() != 3) throw ParseError("expected size line 'rows cols nnz'", line_no);
    const auto rows = parse_id(size_fields[0], line_no);
    const auto cols = parse_id(size_fields[1], line_no);
    const auto nnz = parse_id(size_fields[2], line_no);
    if (rows != cols)
        throw ParseError("adjacency matrix must be square, got " + std::to_string(rows) + " x " +
                             std::to_string(cols),
                         line_no);
    if (rows < 0 || nnz < 0) throw ParseError("negative size", line_no);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(nnz));
    std::int64_t seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto f = split_fields(line);
        if (f.empty() || f[0].front() == '%') continue;
        if (f.size() != (pattern ? 2u : 3u))
            throw ParseError(pattern ? "expected 'i j'" : "expected 'i j value'", line_no);
        const auto i = parse_id(f[0], line_no);
        const auto j = parse_id(f[1], line_no);
        if (i < 1 || j < 1 || i > rows || j > rows)
            throw ParseError("entry index out of range", line_no);
        ++seen;
        double w = 1.0;
        if (!pattern) {
            w = parse_value(f[2], line_no);
            if (w == 0.0) continue;
            if (!(w > 0.0) || !std::isfinite(w))
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": edge weight must be positive, got " + std::string(f[2]));
        }
        edges.push_back({static_cast<NodeId>(i - 1), static_cast<NodeId>(j - 1), w});
    }
    if (seen != nnz)
        throw ParseError("expected " + std::to_string(nnz) + " entries, found " +
                             std::to_string(seen),
                         line_no);

    const auto n = static_cast<std::size_t>(rows);
    std::vector<std::int64_t> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = static_cast<std::int64_t>(k) + 1;
    return Graph::from_edges(n, edges, {!symmetric, options.allow_loops}, std::move(labels));
}

Graph load_matrix_market(const std::string &text, const MatrixMarketOptions &options) {
    std::istringstream in(text);
    return load_matrix_market(in, options);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    for (const auto &e : g.edges())
        out << g.label(e.source) << ' ' << g.label(e.target) << ' ' << e.weight << '\n';
    out.flags(flags);
    out.precision(precision);
}

Graph load_graph_file(const std::filesystem::path &path, GraphFormat format,
                      const EdgeListOptions &options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    if (format == GraphFormat::MatrixMarket)
        return load_matrix_market(in, MatrixMarketOptions{options.allow_loops});
    return load_edge_list(in, options);
}

} // namespace walkrank

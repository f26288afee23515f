#include "perronkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "perronkit/errors.hpp"

namespace perronkit::io {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string& token, std::size_t line) {
    const std::string t = trim(token);
    if (t.empty()) throw ParseError(line, "empty value");
    // strtod handles inf/nan spellings, which validation rejects later.
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw ParseError(line, "invalid number '" + t + "'");
    return v;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
    std::size_t v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError(line, "invalid integer '" + token + "'");
    return v;
}

// Next non-comment, non-blank line; returns false at end of input.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '%') continue;
        line = t;
        return true;
    }
    return false;
}

NonnegMatrix choose_storage(NonnegMatrix m) {
    if (m.order() > kDenseOrderLimit) return m.with_storage(Storage::Csr);
    return m;
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

NonnegMatrix read_matrix_market(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty input");
    ++lineno;
    std::istringstream banner(lower(trim(line)));
    std::string tag, object, layout, field, symmetry;
    banner >> tag >> object >> layout >> field >> symmetry;
    if (tag != "%%matrixmarket") throw ParseError(lineno, "missing %%MatrixMarket banner");
    if (object != "matrix") throw ParseError(lineno, "unsupported object '" + object + "'");
    if (layout != "array" && layout != "coordinate") {
        throw ParseError(lineno, "unsupported layout '" + layout + "'");
    }
    if (field != "real" && field != "integer" && field != "double") {
        throw ParseError(lineno, "unsupported field '" + field + "'");
    }
    if (symmetry != "general") throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");

    if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "missing size line");
    std::istringstream size_line(line);
    std::vector<std::string> dims;
    for (std::string tok; size_line >> tok;) dims.push_back(tok);
    const std::size_t expected_dims = layout == "array" ? 2 : 3;
    if (dims.size() != expected_dims) throw ParseError(lineno, "malformed size line");
    const std::size_t rows = parse_index(dims[0], lineno);
    const std::size_t cols = parse_index(dims[1], lineno);
    if (rows != cols) throw NotSquare(rows, cols);
    if (rows == 0) throw NotSquare(0, 0);
    const std::size_t n = rows;

    if (layout == "array") {
        // Column-major order.
        std::vector<double> values(n * n);
        std::size_t count = 0;
        while (count < n * n && next_data_line(in, line, lineno)) {
            std::istringstream ls(line);
            for (std::string tok; ls >> tok;) {
                if (count == n * n) throw ParseError(lineno, "too many values");
                const double v = parse_real(tok, lineno);
                const std::size_t j = count / n;
                const std::size_t i = count % n;
                values[i * n + j] = v;
                ++count;
            }
        }
        if (count != n * n) throw ParseError(lineno, "expected " + std::to_string(n * n) + " values");
        if (next_data_line(in, line, lineno)) throw ParseError(lineno, "trailing data");
        return choose_storage(NonnegMatrix::from_row_major(n, std::move(values)));
    }

    const std::size_t nnz = parse_index(dims[2], lineno);
    struct Entry {
        std::size_t row, col;
        double value;
        std::size_t line;
    };
    std::vector<Entry> entries;
    entries.reserve(nnz);
    while (entries.size() < nnz && next_data_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string si, sj, sv, extra;
        if (!(ls >> si >> sj >> sv) || (ls >> extra)) throw ParseError(lineno, "expected 'i j value'");
        const std::size_t i = parse_index(si, lineno);
        const std::size_t j = parse_index(sj, lineno);
        if (i == 0 || j == 0 || i > n || j > n) throw ParseError(lineno, "index out of range");
        entries.push_back({i - 1, j - 1, parse_real(sv, lineno), lineno});
    }
    if (entries.size() != nnz) throw ParseError(lineno, "expected " + std::to_string(nnz) + " entries");
    if (next_data_line(in, line, lineno)) throw ParseError(lineno, "trailing data");

    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<NonnegMatrix::Triplet> triplets;
    triplets.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k > 0 && entries[k].row == entries[k - 1].row && entries[k].col == entries[k - 1].col) {
            throw ParseError(std::max(entries[k].line, entries[k - 1].line),
                             "duplicate entry (" + std::to_string(entries[k].row + 1) + ", " +
                                 std::to_string(entries[k].col + 1) + ")");
        }
        triplets.push_back({entries[k].row, entries[k].col, entries[k].value});
    }
    return NonnegMatrix::from_triplets(n, std::move(triplets));
}

NonnegMatrix read_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) row.push_back(parse_real(cell, lineno));
        if (!line.empty() && trim(line).back() == ',') throw ParseError(lineno, "trailing comma");
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(lineno, "row has " + std::to_string(row.size()) + " values, expected " +
                                         std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, "no data");
    if (rows.size() != rows.front().size()) throw NotSquare(rows.size(), rows.front().size());
    return choose_storage(NonnegMatrix::from_dense(rows));
}

void write_matrix_market(std::ostream& out, const NonnegMatrix& a, MatrixMarketLayout layout) {
    const std::size_t n = a.order();
    if (layout == MatrixMarketLayout::Array) {
        out << "%%MatrixMarket matrix array real general\n" << n << ' ' << n << '\n';
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) out << format_real(a(i, j)) << '\n';
        }
        return;
    }
    std::size_t nnz = 0;
    for (double v : a.values()) nnz += v != 0.0 ? 1 : 0;
    out << "%%MatrixMarket matrix coordinate real general\n" << n << ' ' << n << ' ' << nnz << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        a.for_each_in_row(i, [&](std::size_t j, double v) {
            if (v != 0.0) out << i + 1 << ' ' << j + 1 << ' ' << format_real(v) << '\n';
        });
    }
}

void write_csv(std::ostream& out, const NonnegMatrix& a) {
    for (const auto& row : a.to_rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out << ',';
            out << format_real(row[j]);
        }
        out << '\n';
    }
}

NonnegMatrix parse_matrix(const std::filesystem::path& path, Format format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    if (format == Format::Auto) {
        std::string first;
        std::getline(in, first);
        format = lower(trim(first)).rfind("%%matrixmarket", 0) == 0 ? Format::MatrixMarket : Format::Csv;
        in.clear();
        in.seekg(0);
    }
    return format == Format::MatrixMarket ? read_matrix_market(in) : read_csv(in);
}

}  // namespace perronkit::io

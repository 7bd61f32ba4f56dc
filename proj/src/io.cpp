#include "matsketch/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace matsketch {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(std::string_view tok, long line) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError("not a real number: '" + std::string(tok) + "'", line);
    if (!std::isfinite(v)) throw ParseError("non-finite value", line);
    return v;
}

long parse_long(const std::string& tok, long line) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("not an integer: '" + tok + "'", line);
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

Matrix parse_mm(std::istream& in) {
    std::string line;
    long ln = 1;
    if (!std::getline(in, line)) throw ParseError("empty file", 1);
    const std::vector<std::string> head = split_ws(lower(line));
    if (head.size() != 5 || head[0] != "%%matrixmarket" || head[1] != "matrix")
        throw ParseError("malformed MatrixMarket header", ln);
    const std::string& layout = head[2];
    const std::string& field = head[3];
    if (layout != "array" && layout != "coordinate") throw ParseError("unknown layout '" + layout + "'", ln);
    if (field != "real" && field != "integer" && field != "double")
        throw TypeError("unsupported field '" + field + "' (only real values)", ln);
    if (head[4] != "general") throw ParseError("unsupported symmetry '" + head[4] + "'", ln);

    std::vector<std::string> dims;
    while (std::getline(in, line)) {
        ++ln;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '%') continue;
        dims = split_ws(t);
        break;
    }
    const std::size_t want = layout == "array" ? 2 : 3;
    if (dims.size() != want) throw ParseError("malformed size line", ln);
    const long m = parse_long(dims[0], ln);
    const long n = parse_long(dims[1], ln);
    if (m < 1 || n < 1) throw ParseError("dimensions must be positive", ln);
    Matrix A = Matrix::Zero(m, n);
    if (layout == "array") {
        long count = 0;
        while (std::getline(in, line)) {
            ++ln;
            const std::string t = trim(line);
            if (t.empty() || t[0] == '%') continue;
            for (const std::string& tok : split_ws(t)) {
                if (count >= m * n) throw ParseError("more entries than the header declares", ln);
                A(count % m, count / m) = parse_double(tok, ln);
                ++count;
            }
        }
        if (count != m * n) throw ParseError("expected " + std::to_string(m * n) + " entries, found " +
                                             std::to_string(count), ln);
    } else {
        const long nnz = parse_long(dims[2], ln);
        if (nnz < 0) throw ParseError("negative entry count", ln);
        long count = 0;
        while (std::getline(in, line)) {
            ++ln;
            const std::string t = trim(line);
            if (t.empty() || t[0] == '%') continue;
            const std::vector<std::string> tok = split_ws(t);
            if (tok.size() != 3) throw ParseError("coordinate entry needs 'row col value'", ln);
            const long i = parse_long(tok[0], ln);
            const long j = parse_long(tok[1], ln);
            if (i < 1 || i > m || j < 1 || j > n) throw ParseError("index outside the declared dimensions", ln);
            if (++count > nnz) throw ParseError("more entries than the header declares", ln);
            A(i - 1, j - 1) += parse_double(tok[2], ln);
        }
        if (count != nnz) throw ParseError("expected " + std::to_string(nnz) + " entries, found " +
                                           std::to_string(count), ln);
    }
    return A;
}

Matrix parse_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    long ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        const std::string t = trim(line);
        if (t.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = t.find(',', start);
            const std::string tok = trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (tok.empty()) throw ParseError("empty field", ln);
            row.push_back(parse_double(tok, ln));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()), ln);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no data", ln == 0 ? 1 : ln);
    Matrix A(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) A(i, j) = rows[i][j];
    return A;
}

MatrixFormat resolve(const std::string& path, MatrixFormat format) {
    if (format != MatrixFormat::automatic) return format;
    const std::string p = lower(path);
    if (p.size() >= 4 && p.substr(p.size() - 4) == ".csv") return MatrixFormat::csv;
    return MatrixFormat::matrixmarket;
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

MatrixFormat parse_format(const std::string& name) {
    const std::string s = lower(name);
    if (s == "auto" || s.empty()) return MatrixFormat::automatic;
    if (s == "mm" || s == "mtx" || s == "matrixmarket") return MatrixFormat::matrixmarket;
    if (s == "csv") return MatrixFormat::csv;
    throw ArgumentError("unknown matrix format '" + name + "'");
}

Matrix parse_matrix(const std::string& text, MatrixFormat format) {
    std::istringstream in(text);
    if (format == MatrixFormat::automatic)
        format = lower(text.substr(0, 14)) == "%%matrixmarket" ? MatrixFormat::matrixmarket : MatrixFormat::csv;
    return format == MatrixFormat::csv ? parse_csv(in) : parse_mm(in);
}

Matrix load_matrix(const std::string& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (format == MatrixFormat::automatic) {
        const std::string p = lower(path);
        if (p.size() >= 4 && p.substr(p.size() - 4) == ".csv")
            format = MatrixFormat::csv;
        else if (p.size() >= 4 && p.substr(p.size() - 4) == ".mtx")
            format = MatrixFormat::matrixmarket;
    }
    return parse_matrix(text, format);
}

std::string format_matrix(const Matrix& A, MatrixFormat format) {
    std::ostringstream out;
    if (format == MatrixFormat::csv) {
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            for (Eigen::Index j = 0; j < A.cols(); ++j) out << (j ? "," : "") << fmt17(A(i, j));
            out << '\n';
        }
    } else {
        out << "%%MatrixMarket matrix array real general\n" << A.rows() << ' ' << A.cols() << '\n';
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            for (Eigen::Index i = 0; i < A.rows(); ++i) out << fmt17(A(i, j)) << '\n';
    }
    return out.str();
}

void save_matrix(const std::string& path, const Matrix& A, MatrixFormat format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << format_matrix(A, resolve(path, format));
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace matsketch

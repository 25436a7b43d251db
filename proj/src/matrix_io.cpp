#include "rootform/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rootform/errors.hpp"

namespace rootform {

std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(std::ostream& os, const Matrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << format_scalar(m(i, j));
        }
        os << '\n';
    }
}

std::string to_text(const Matrix& m) {
    std::ostringstream os;
    write_text(os, m);
    return os.str();
}

void write_file(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream os(path);
    if (!os)
        throw ParseError("cannot open for writing: " + path.string());
    write_text(os, m);
}

Matrix read_text(std::istream& is) {
    long long rows = 0, cols = 0;
    if (!(is >> rows >> cols))
        throw ParseError("expected header line 'rows cols'");
    if (rows <= 0 || cols <= 0)
        throw ParseError("matrix dimensions must be positive");
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    for (long long i = 0; i < rows * cols; ++i) {
        double v;
        if (!(is >> v))
            throw ParseError("expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(i));
        if (!std::isfinite(v))
            throw ParseError("non-finite entry at position " + std::to_string(i));
        entries.push_back(v);
    }
    return Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

Matrix parse_text(const std::string& text) {
    std::istringstream is(text);
    return read_text(is);
}

Matrix read_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is)
        throw ParseError("cannot open: " + path.string());
    return read_text(is);
}

} // namespace rootform

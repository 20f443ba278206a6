#include "ghzcert/state_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ghzcert {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& message) {
    throw StateFileError(path + ":" + std::to_string(line) + ": " + message);
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

// Next significant line, or false at end of file.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_comment_or_blank(line)) return true;
    }
    return false;
}

} // namespace

DensityMatrix read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw StateFileError(path + ": cannot open file");
    }

    std::string line;
    int line_no = 0;

    if (!next_line(in, line, line_no)) fail(path, line_no, "empty file, expected 'GHZSTATE 1'");
    {
        std::istringstream fields(line);
        std::string tag;
        int version = 0;
        std::string extra;
        if (!(fields >> tag >> version) || tag != "GHZSTATE" || (fields >> extra)) {
            fail(path, line_no, "expected header 'GHZSTATE 1', got '" + line + "'");
        }
        if (version != 1) {
            fail(path, line_no, "unsupported format version " + std::to_string(version));
        }
    }

    if (!next_line(in, line, line_no)) fail(path, line_no, "unexpected end of file, expected dimension");
    int dim = 0;
    {
        std::istringstream fields(line);
        std::string extra;
        if (!(fields >> dim) || (fields >> extra)) {
            fail(path, line_no, "expected the matrix dimension, got '" + line + "'");
        }
        if (dim != 2 && dim != 4 && dim != 8) {
            fail(path, line_no, "dimension must be 2, 4 or 8, got " + std::to_string(dim));
        }
    }

    ComplexMatrix m(dim);
    for (int i = 0; i < dim * dim; ++i) {
        if (!next_line(in, line, line_no)) {
            fail(path, line_no, "unexpected end of file, expected entry " +
                                    std::to_string(i + 1) + " of " + std::to_string(dim * dim));
        }
        std::istringstream fields(line);
        double re = 0.0;
        double im = 0.0;
        std::string extra;
        if (!(fields >> re >> im) || (fields >> extra)) {
            fail(path, line_no, "expected 're im', got '" + line + "'");
        }
        m(i / dim, i % dim) = cplx(re, im);
    }

    if (next_line(in, line, line_no)) {
        fail(path, line_no, "unexpected content after " + std::to_string(dim * dim) + " entries");
    }

    try {
        return DensityMatrix(m);
    } catch (const std::invalid_argument& e) {
        throw StateFileError(path + ": not a valid density matrix: " + e.what());
    }
}

void write_state_file(const std::string& path, const DensityMatrix& state,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) {
        throw StateFileError(path + ": cannot open file for writing");
    }
    out << "GHZSTATE 1\n";
    if (!comment.empty()) out << "# " << comment << "\n";
    const int dim = state.dim();
    out << dim << "\n";
    char buf[64];
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const cplx e = state.matrix()(i, j);
            std::snprintf(buf, sizeof buf, "%.17g %.17g\n", e.real(), e.imag());
            out << buf;
        }
    }
    if (!out) {
        throw StateFileError(path + ": write failed");
    }
}

} // namespace ghzcert

#include "hullkit/io.hpp"

#include <fstream>
#include <sstream>

namespace hullkit {

namespace {

bool skippable(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // blank
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line))
        if (!skippable(line)) return true;
    return false;
}

std::uint32_t parse_u32(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size() || v > 0xffffffffUL) throw std::invalid_argument(tok);
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid ") + what + ": '" + tok + "'");
    }
}

}  // namespace

FieldPtr parse_field_header(const std::string& line) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word != "field") throw ParseError("expected field header, got: " + line);
    std::uint32_t p = 0, m = 0;
    bool have_p = false, have_m = false;
    std::vector<std::uint32_t> modulus;
    while (ss >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) throw ParseError("bad field header token: " + word);
        const std::string key = word.substr(0, eq);
        const std::string val = word.substr(eq + 1);
        if (key == "p") {
            p = parse_u32(val, "p");
            have_p = true;
        } else if (key == "m") {
            m = parse_u32(val, "m");
            have_m = true;
        } else if (key == "modulus") {
            std::istringstream cs(val);
            std::string item;
            while (std::getline(cs, item, ',')) modulus.push_back(parse_u32(item, "modulus coefficient"));
        } else {
            throw ParseError("unknown field header key: " + key);
        }
    }
    if (!have_p || !have_m) throw ParseError("field header must give p and m");
    try {
        if (modulus.empty()) return FieldSpec::make(p, m);
        return FieldSpec::make(p, m, std::move(modulus));
    } catch (const InvalidFieldSpec& e) {
        throw ParseError(std::string("bad field: ") + e.what());
    }
}

std::string format_field_header(const FieldSpec& field) {
    std::string out = "field p=" + std::to_string(field.p()) + " m=" + std::to_string(field.m()) +
                      " modulus=";
    for (std::size_t i = 0; i < field.modulus().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(field.modulus()[i]);
    }
    return out;
}

Matrix parse_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing field header");
    const FieldPtr field = parse_field_header(line);

    if (!next_content_line(in, line)) throw ParseError("missing dimensions line");
    std::istringstream ds(line);
    std::string rtok, ctok, extra;
    if (!(ds >> rtok >> ctok) || (ds >> extra)) throw ParseError("dimensions line must be 'rows cols'");
    const std::uint32_t rows = parse_u32(rtok, "row count");
    const std::uint32_t cols = parse_u32(ctok, "column count");
    if (rows == 0 || cols == 0) throw ParseError("matrix must be nonempty");

    Matrix m(field, rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("missing matrix row " + std::to_string(i + 1));
        std::istringstream rs(line);
        std::string tok;
        for (std::uint32_t j = 0; j < cols; ++j) {
            if (!(rs >> tok))
                throw ParseError("row " + std::to_string(i + 1) + " has fewer than " +
                                 std::to_string(cols) + " entries");
            const std::uint32_t enc = parse_u32(tok, "entry");
            if (enc >= field->q())
                throw ParseError("entry " + tok + " out of range for field of order " +
                                 std::to_string(field->q()));
            m.set_enc(i, j, enc);
        }
        if (rs >> tok) throw ParseError("row " + std::to_string(i + 1) + " has extra entries");
    }
    return m;
}

Matrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_matrix(in);
}

LinearCode parse_code(std::istream& in) { return LinearCode(parse_matrix(in)); }

LinearCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_code(in);
}

std::string format_matrix(const Matrix& m) {
    std::string out = format_field_header(*m.field());
    out += '\n';
    out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m.enc_at(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << format_matrix(m);
}

}  // namespace hullkit

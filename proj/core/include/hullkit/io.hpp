#pragma once

#include <iosfwd>
#include <string>

#include "hullkit/code.hpp"

namespace hullkit {

// Matrix file format (code files are the same format; the matrix is the
// generator):
//
//   field p=3 m=1 modulus=0,1
//   2 3
//   1 0 2
//   0 1 1
//
// Elements are written as decimal integer encodings sum(c_i * p^i). The
// modulus key is optional on input (the built-in default is used) and always
// written on output. Blank lines and lines starting with '#' are ignored.

FieldPtr parse_field_header(const std::string& line);
std::string format_field_header(const FieldSpec& field);

Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_file(const std::string& path);
LinearCode parse_code(std::istream& in);
LinearCode parse_code_file(const std::string& path);

std::string format_matrix(const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace hullkit

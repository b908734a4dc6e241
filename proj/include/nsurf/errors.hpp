#pragma once

#include <stdexcept>
#include <string>

namespace nsurf {

// Malformed input text.  Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Structural invariant of a triangulation, vector or operation violated.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Haken sum requested for vectors with clashing quad types.
class IncompatibleError : public std::runtime_error {
public:
    IncompatibleError(const std::string& msg, int tet)
        : std::runtime_error(msg), tet_(tet) {}

    // Tetrahedron where the quad types clash.
    int tet() const { return tet_; }

private:
    int tet_;
};

// The configured coordinate-sum ceiling was hit before the basis
// completed.  Enumeration results are incomplete and must not be used.
class EnumerationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nsurf

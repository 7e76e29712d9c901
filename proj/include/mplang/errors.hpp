#ifndef MPLANG_ERRORS_HPP
#define MPLANG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mplang {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Surface-syntax error with 1-based source position.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

struct EvalError : Error {
    using Error::Error;
};

struct NotAffineError : Error {
    using Error::Error;
};

struct TranslateError : Error {
    using Error::Error;
};

struct GraphError : Error {
    using Error::Error;
};

struct FileError : Error {
    using Error::Error;
};

struct ModelError : Error {
    using Error::Error;
};

struct LogicError : Error {
    using Error::Error;
};

}  // namespace mplang

#endif

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gallai {

enum class ErrorCode {
    InvalidColor,
    LoopEdge,
    VertexOutOfRange,
    PaletteCollision,
    Parse,
    PatternTooLarge,
    OrderTooSmall,
    MalformedPartition,
    NotGallai,
    InternalInconsistency,
    InvalidPartition,
    ParameterOutOfRange,
    InvalidBase,
    ArgumentOrder,
    Overflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised while reading "ecg" documents or JSON mirrors. The code is Parse for
// structural problems and InvalidColor when an entry exceeds the palette.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gallai

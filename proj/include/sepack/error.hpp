#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepack {

enum class ErrorKind {
    MalformedInput,
    UndefinedDistance,
    DegenerateInput,
    NotAContact,
    UnsupportedConstruction,
    UnknownEntry,
    NormalizationRequired,
    Domain,
    EnumerationLimit,
    SizeLimit,
    Parse,
    Version,
    UnsupportedDimension,
    Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised while decoding a packing file; offset is the byte position of the
// offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::Parse, message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace sepack

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace deltaarc {

/// 1-based position inside a source file.
struct SourcePosition {
    std::string file;
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePosition pos, std::string expected, std::string found)
        : std::runtime_error(pos.file + ":" + std::to_string(pos.line) + ":" +
                             std::to_string(pos.column) + ": expected " + expected +
                             ", found " + found),
          position_(std::move(pos)),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    const SourcePosition& position() const { return position_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourcePosition position_;
    std::string expected_;
    std::string found_;
};

class UnknownDeltaReference : public std::runtime_error {
public:
    explicit UnknownDeltaReference(const std::string& msg) : std::runtime_error(msg) {}
};

class NoValidOrder : public std::runtime_error {
public:
    explicit NoValidOrder(const std::string& msg) : std::runtime_error(msg) {}
};

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class NotInvertibleError : public std::runtime_error {
public:
    explicit NotInvertibleError(const std::string& msg) : std::runtime_error(msg) {}
};

class AmbiguousAutoconnect : public std::runtime_error {
public:
    explicit AmbiguousAutoconnect(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace deltaarc

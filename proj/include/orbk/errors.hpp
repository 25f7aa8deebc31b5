#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbk {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& message) : std::runtime_error(message) {}
};

// Input-document rejection; `path` is the offending field, e.g. "strata[3].group".
class parse_error : public error {
public:
    parse_error(std::string path, const std::string& message)
        : error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// Multiplicative closure did not terminate below the element cap.
class closure_error : public error {
public:
    closure_error(const std::string& message, std::size_t cap) : error(message), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

// Malformed ladder input; `arrow` names the offending map, e.g. "vertical 3".
class ladder_error : public error {
public:
    ladder_error(std::string arrow, const std::string& message)
        : error(arrow + ": " + message), arrow_(std::move(arrow)) {}

    const std::string& arrow() const noexcept { return arrow_; }

private:
    std::string arrow_;
};

}  // namespace orbk

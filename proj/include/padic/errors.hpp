#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic {

// Violated mathematical precondition or an unsatisfiable request.
// The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text, file, or configuration.  CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    explicit parse_error(const std::string& what)
        : std::runtime_error(what), offset_(0) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace padic

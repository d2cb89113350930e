#pragma once

#include <stdexcept>
#include <string>

namespace davenport {

// Error taxonomy: domain (bad mathematical argument), range (representability),
// parse (malformed input data), spec (inconsistent family configuration),
// resource (limits), numeric (non-finite intermediate).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error("domain error: " + msg) {}
};

struct range_error : std::runtime_error {
    explicit range_error(const std::string& msg) : std::runtime_error("range error: " + msg) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

struct spec_error : std::runtime_error {
    explicit spec_error(const std::string& msg) : std::runtime_error("spec error: " + msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error("resource error: " + msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error("numeric error: " + msg) {}
};

} // namespace davenport

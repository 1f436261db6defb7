#pragma once

#include <stdexcept>
#include <string>

namespace tricalc {

// Violation of a mathematical invariant (bad parameter tuple, incompatible
// gluing, precondition failure).  CLI maps this to exit code 1.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (JSON syntax).  Message carries line/column.  Exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally well-formed input that does not match the document schema.
// Message names the offending key.  Exit code 2.
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tricalc

// The error types logically belong to the whole library; re-export them in
// core so downstream modules that only pull core:: names see them too.
namespace tricalc::core {
using tricalc::invariant_error;
using tricalc::parse_error;
using tricalc::schema_error;
}  // namespace tricalc::core

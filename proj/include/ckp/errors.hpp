#pragma once

#include <stdexcept>
#include <string>

namespace ckp {

// Malformed document, unparsable number, or bad field in an instance file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition or type invariant was violated by the caller.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size or enumeration budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ckp

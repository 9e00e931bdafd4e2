#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsaf/arg_set.hpp"

namespace bsaf {

struct Link;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A set or argument id does not belong to the framework it is used with.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised when a proposed A1 does not induce a splitting of the requested kind.
class InvalidCut : public Error {
public:
    InvalidCut(const std::string& what, std::vector<Link> offending);
    ~InvalidCut() override;
    InvalidCut(const InvalidCut&);
    InvalidCut& operator=(const InvalidCut&);

    const std::vector<Link>& offending() const { return offending_; }

private:
    std::vector<Link> offending_;
};

/// Exhaustive enumeration refused because the framework is too large.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace bsaf

#pragma once

#include <stdexcept>
#include <string>

namespace epl {

/// Error thrown on malformed input or violated preconditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epl

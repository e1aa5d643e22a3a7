#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibtree {

// Malformed code words and out-of-domain numeric arguments.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A query needs tree levels that were not generated, or a requested depth
// exceeds the configured generation cap.  required_depth() names the depth
// that would satisfy the query.
class depth_error : public std::out_of_range {
public:
    depth_error(const std::string& what, std::uint32_t required_depth)
        : std::out_of_range(what), required_depth_(required_depth) {}

    std::uint32_t required_depth() const noexcept { return required_depth_; }

private:
    std::uint32_t required_depth_;
};

} // namespace fibtree

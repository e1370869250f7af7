#ifndef SYZGRAPH_ERRORS_HPP
#define SYZGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syz {

// Malformed input, out-of-range indices, violated preconditions.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (variable count, face count, generator count) was
// exceeded.  The CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace syz

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace rdalpha {

/// Malformed graph6 / edge-list input. Carries the byte offset of the
/// first offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Argument outside an operation's domain (bad parameter, invalid
/// partition, alpha out of range, ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Distance-based quantities require a connected graph. Names a witness
/// pair of mutually unreachable vertices.
class connectivity_error : public std::runtime_error {
public:
    connectivity_error(int from, int to)
        : std::runtime_error("graph is disconnected: no path between vertex " +
                             std::to_string(from) + " and vertex " + std::to_string(to)),
          from_(from), to_(to) {}

    int unreachable_from() const noexcept { return from_; }
    int unreachable_to() const noexcept { return to_; }

private:
    int from_;
    int to_;
};

/// Non-finite matrix entry handed to a numerical kernel.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigensolver failed to reach its convergence threshold within the
/// sweep cap.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rdalpha

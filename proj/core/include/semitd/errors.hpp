#ifndef SEMITD_ERRORS_HPP
#define SEMITD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semitd {

enum class parse_errc {
    malformed_header,
    malformed_line,
    vertex_out_of_range,
    self_loop,
    duplicate_edge,
    edge_count_mismatch,
};

/// Raised by the graph / set / ordering file parsers. Carries the offending
/// line number (1-based, 0 when not line-specific).
class parse_error : public std::runtime_error {
public:
    parse_error(parse_errc code, std::size_t line, const std::string& what)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
          code_(code),
          line_(line)
    {
    }

    parse_errc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    parse_errc code_;
    std::size_t line_;
};

struct not_a_permutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_strongly_chordal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unverified_ordering : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct disconnected_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct too_small : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct too_large : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal solver invariant fails with runtime checks
/// enabled. Seeing this means a bug, not bad input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace semitd

#endif

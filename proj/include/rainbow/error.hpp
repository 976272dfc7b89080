#ifndef RAINBOW_ERROR_HPP
#define RAINBOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rainbow {

// Domain error codes. NoValidK, AssignmentOutOfArc and NotAnArc are
// unreachable on valid input; they exist so that an implementation bug
// surfaces as a diagnosable failure instead of a silent bad certificate.
enum class ErrorCode {
    InvalidParameters,
    WrongSize,
    NotIndependent,
    WrongCycleOrder,
    NotAnArc,
    NoValidK,
    AssignmentOutOfArc,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, int set_index = -1)
        : std::runtime_error(message), code_(code), set_index_(set_index) {}

    ErrorCode code() const { return code_; }

    // 0-based family slot the error refers to, or -1 when not applicable.
    int set_index() const { return set_index_; }

private:
    ErrorCode code_;
    int set_index_;
};

}  // namespace rainbow

#endif

#ifndef FPSREV_ERROR_HPP
#define FPSREV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpsrev {

enum class ErrorCode {
    LengthMismatch,
    ContextMismatch,
    NotDominated,
    RankOutOfRange,
    DivisionByZero,
    InvalidArgument,
    NonIdentityLinearPart,
    FormatError,
    DuplicateTerm,
    DegreeOverflow,
    ConstantTerm,
    ResourceLimit,
    VerificationMismatch,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {}

    // Format errors carry the 1-based input line; 0 means "not line specific".
    Error(ErrorCode code, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), code_(code), line_(line)
    {}

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::size_t line_ = 0;
};

} // namespace fpsrev

#endif

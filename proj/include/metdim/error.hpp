#ifndef METDIM_ERROR_HPP
#define METDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace metdim {

// Every library failure names the violated precondition or invariant.
enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    TrivialGraph,
    SizeOutOfRange,
    OrderOverflow,
    EqualVertices,
    IndexOutOfRange,
    RootOutOfRange,
    Infeasible,
    Unbounded,
    HypothesisViolated,
    ParseError,
    UnknownFamily,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace metdim

#endif

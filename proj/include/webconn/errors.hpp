#pragma once

#include <stdexcept>
#include <string>

namespace webconn {

enum class ErrorKind {
    InvalidVariable,
    DegenerateInput,
    SingularSystem,
    Dimension,
    LeadingCoefficient,
    NonReducedWeb,
    Degree,
    DuplicateSlope,
    NonInvertibleRescale,
    ProlongationFailure,
    AdaptedBasisViolation,
    UnsupportedDegree,
    SlopeRequired,
    Dependency,
    Internal,
    Parse,
    Ambiguity,
};

class WebError : public std::runtime_error {
  public:
    WebError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw WebError(kind, msg);
}

} // namespace webconn

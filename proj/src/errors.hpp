// Error taxonomy shared by the C++ core, the C API, and the CLI exit codes.

#ifndef METROFAN_ERRORS_HPP
#define METROFAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metrofan {

enum class ErrorCode {
    parse_error,
    not_pseudometric,
    zero_distance,
    not_strict,
    too_large,
    degenerate,
    internal_disagreement,
    reproduce_mismatch,
    io_error,
    bad_argument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace metrofan

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace wprm {

enum class errc {
    not_prime,
    too_large,
    division_by_zero,
    zero_triple,
    degree_not_regular,
    degree_too_small,
    not_in_reduction,
    out_of_range,
    no_branch_applies,
    unsupported,
    bad_argument,
};

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace wprm

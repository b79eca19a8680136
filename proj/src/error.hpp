#pragma once

#include <stdexcept>
#include <string>

namespace hensel {

// Error classes. Each maps to one of the CLI exit classes via exit_class():
// 2 parse, 3 precondition, 4 precision, 5 avoidance, 6 internal.
enum class errc {
    parse_error,

    context_mismatch,
    division_by_higher_valuation,
    indeterminate_divisor,
    non_square,
    constant_term_present,
    zero_jacobian_det,
    not_in_maximal_ideal,
    jacobian_not_unit,
    target_not_in_ideal,
    target_outside_domain,
    point_not_on_variety,
    bad_request,

    precision_exhausted,

    avoidance_exhausted,

    max_iterations_exceeded,
    no_pivot_found,
    internal_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

inline int exit_class(errc code) {
    switch (code) {
        case errc::parse_error:
            return 2;
        case errc::precision_exhausted:
            return 4;
        case errc::avoidance_exhausted:
            return 5;
        case errc::max_iterations_exceeded:
        case errc::no_pivot_found:
        case errc::internal_error:
            return 6;
        default:
            return 3;
    }
}

} // namespace hensel

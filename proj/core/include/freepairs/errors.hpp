#pragma once

#include <stdexcept>
#include <string>

namespace freepairs {

/** Machine-checkable reason attached to every library exception. */
enum class errc {
    division_by_zero,
    descriptor_mismatch,
    singular_matrix,
    zero_input,
    invalid_place,
    not_order_two,
    invalid_spec,
    not_3_integral,
    degree_overflow,
    not_invertible,
    zero_norm,
    undefined_case,
    parse_error,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero:    return "DIVISION_BY_ZERO";
    case errc::descriptor_mismatch: return "DESCRIPTOR_MISMATCH";
    case errc::singular_matrix:     return "SINGULAR_MATRIX";
    case errc::zero_input:          return "ZERO_INPUT";
    case errc::invalid_place:       return "INVALID_PLACE";
    case errc::not_order_two:       return "NOT_ORDER_TWO";
    case errc::invalid_spec:        return "INVALID_SPEC";
    case errc::not_3_integral:      return "NOT_3_INTEGRAL";
    case errc::degree_overflow:     return "DEGREE_OVERFLOW";
    case errc::not_invertible:      return "NOT_INVERTIBLE";
    case errc::zero_norm:           return "ZERO_NORM";
    case errc::undefined_case:      return "UNDEFINED_CASE";
    case errc::parse_error:         return "PARSE_ERROR";
    case errc::internal:            return "INTERNAL";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace freepairs

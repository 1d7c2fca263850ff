#pragma once

#include <stdexcept>
#include <string>

namespace qd {

struct error : std::runtime_error {
        using std::runtime_error::runtime_error;
};

#define QD_ERROR(name)                                 \
        struct name : error {                          \
                using error::error;                    \
        }

QD_ERROR(division_by_zero);
QD_ERROR(order_mismatch);
QD_ERROR(incompatible_order);
QD_ERROR(not_invertible);
QD_ERROR(precision_underflow);
QD_ERROR(insufficient_precision);
QD_ERROR(irrepresentable_exponent);
QD_ERROR(odd_t);
QD_ERROR(theta_not_invertible);
QD_ERROR(non_expandable_denominator);
QD_ERROR(non_rational_result);
QD_ERROR(unsupported_family);
QD_ERROR(constraint_violation);
QD_ERROR(parse_error);

#undef QD_ERROR

} // namespace qd

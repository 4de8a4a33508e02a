#pragma once

#include <stdexcept>
#include <string>

namespace matroidkl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MATROIDKL_ERROR(Name)                      \
    struct Name : Error {                          \
        explicit Name(const std::string& what_arg) \
            : Error(#Name ": " + what_arg) {}      \
    }

MATROIDKL_ERROR(ExchangeViolation);
MATROIDKL_ERROR(EmptyFamily);
MATROIDKL_ERROR(MixedCardinality);
MATROIDKL_ERROR(NotAFlat);
MATROIDKL_ERROR(NotStressed);
MATROIDKL_ERROR(NotAHyperplane);
MATROIDKL_ERROR(NotAFreeSubset);
MATROIDKL_ERROR(NotPaving);
MATROIDKL_ERROR(BadParameters);
MATROIDKL_ERROR(UnsupportedFieldOrder);
MATROIDKL_ERROR(GroundSetTooLarge);
MATROIDKL_ERROR(BadProfile);
MATROIDKL_ERROR(DegreeTooSmall);
MATROIDKL_ERROR(NotPalindromic);
MATROIDKL_ERROR(ShapeTooLarge);

// Internal consistency failures: a paper identity that must hold did not.
MATROIDKL_ERROR(FatalInconsistency);

#undef MATROIDKL_ERROR

}  // namespace matroidkl

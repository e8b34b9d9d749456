#pragma once

#include <string>

namespace hodgeheat {

/// Formats a double with 17 significant digits ("%.17g"); infinities print
/// as "inf"/"-inf", NaN as "nan".
std::string fmt17(double x);

}  // namespace hodgeheat

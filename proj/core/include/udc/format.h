#ifndef UDC_FORMAT_H_
#define UDC_FORMAT_H_

#include <string>

namespace udc {

// Shortest decimal that parses back to the same double.
std::string FormatDouble(double v);

}  // namespace udc

#endif  // UDC_FORMAT_H_

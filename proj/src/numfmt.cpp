#include "arx/numfmt.hpp"

#include <cstdio>

namespace arx {

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace arx

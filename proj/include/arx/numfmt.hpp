#pragma once

#include <string>

namespace arx {

// 9 significant digits, shortest form, locale independent
std::string g9(double v);

}  // namespace arx

#pragma once

#include <string>
#include <string_view>

namespace coble {

std::string sha256_hex(std::string_view data);

}  // namespace coble

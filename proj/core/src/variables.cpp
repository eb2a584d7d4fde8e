#include "coble/variables.hpp"

namespace coble {

std::string var_name(Var v) {
    if (v < 9) return "Z" + std::to_string(v / 3) + std::to_string(v % 3);
    if (v < 14) return "b" + std::to_string(v - 9);
    if (v == kLambda) return "lambda";
    if (v < 20) return "Y" + std::to_string(v - 15);
    if (v < kNumVars) return "Z" + std::to_string(v - 19);
    return "?";
}

std::optional<Var> parse_var(std::string_view name) {
    for (int v = 0; v < kNumVars; ++v)
        if (var_name(static_cast<Var>(v)) == name) return static_cast<Var>(v);
    return std::nullopt;
}

}  // namespace coble

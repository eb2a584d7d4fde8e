#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace coble {

// Variable registry, in canonical order:
//   0..8    theta coordinates Z00, Z01, ..., Z22 (row-major)
//   9..13   b0..b4     (Coble cubic parameters)
//   14      lambda     (Hesse pencil parameter)
//   15..19  Y0..Y4     (plane / iota-even coordinates)
//   20..23  Z1..Z4     (iota-odd coordinates)
using Var = std::uint8_t;

inline constexpr int kNumVars = 24;
inline constexpr int kNumTheta = 9;

constexpr int mod3(int a) { return ((a % 3) + 3) % 3; }

constexpr Var theta(int i, int j) { return static_cast<Var>(3 * mod3(i) + mod3(j)); }
constexpr Var beta(int k) { return static_cast<Var>(9 + k); }
inline constexpr Var kLambda = 14;
constexpr Var ycoord(int k) { return static_cast<Var>(15 + k); }
constexpr Var zodd(int k) { return static_cast<Var>(19 + k); }  // k = 1..4

constexpr bool is_theta(Var v) { return v < kNumTheta; }

std::string var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

}  // namespace coble

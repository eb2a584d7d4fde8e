#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "coble/nu.hpp"
#include "coble_cli/certificate.hpp"

namespace coble::cli {

Certificate invariants_dim(int degree);
Certificate invariants_basis(int degree);
Certificate coble_check();
Certificate nu_charts(ChartMode mode);
Certificate nu_rank(ChartMode mode, std::ostream& progress);
Certificate nu_kernel(ChartMode mode, std::ostream& progress);
Certificate hesse_dual(const Rational& lambda, std::uint32_t oracle_prime);
Certificate enum_degree_dual();
Certificate enum_verlinde(int kmax);
Certificate enum_quadric_count();
Certificate enum_zagier(int h);
Certificate prym_check();
Certificate prym_genus(long n, long g, long t_size);

// one block of checks per acceptance criterion, prefixed "criterion N: "
Certificate verify_all(std::ostream& progress);
Certificate verify_criterion(int n, std::ostream& progress);

// full command line; certificate on out, progress on err; returns the exit code
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coble::cli

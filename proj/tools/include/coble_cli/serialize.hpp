#pragma once

#include <vector>

#include <json.hpp>

#include "coble/heisenberg.hpp"
#include "coble/prym.hpp"

namespace coble::cli {

using nlohmann::json;

json to_json(const Rational& q);            // "p/q"
json to_json(const Eisenstein& z);          // {"re", "om"}
json to_json(const Poly& p);                // [{"coeff", "exps"}], grlex descending
json to_json(const HeisenbergElement& g);   // {"t", "x", "xstar"}
json to_json(Index2 b);
json to_json(const Apoint& a);
json to_json(const IntMatrix2& m);
json to_json(const std::vector<Eisenstein>& v);

Poly poly_from_json(const json& j);
Eisenstein eisenstein_from_json(const json& j);

}  // namespace coble::cli

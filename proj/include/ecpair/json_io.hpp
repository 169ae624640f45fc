#pragma once

#include "ecpair/census.hpp"
#include "ecpair/classifier.hpp"
#include "ecpair/hauptmodul.hpp"
#include "ecpair/universal_check.hpp"

#include <json.hpp>

namespace ecp {

// Keys are inserted in sorted order; primes in TensorClass objects ascend
// numerically.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);           // "num/den"
Json to_json(const TensorClass& c);        // {"p": "num/den", ...}
Json to_json(const Point& P);              // "O" or ["x", "y"]
Json to_json(const Curve& E);              // ["a1", "a2", "a3", "a4", "a6"]
Json to_json(const FactoredRational& z);   // {"factors": {"p": e}, "sign": +-1}
Json to_json(const Gram& g);
Json to_json(const Classification& c);
Json to_json(const Census& c);
Json to_json(const TableReport& r, long H);
Json to_json(const IdentityResult& r);
Json to_json(const UniversalReport& r);

Json error_json(const std::string& kind, const std::string& detail);

} // namespace ecp

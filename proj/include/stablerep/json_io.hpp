#pragma once

#include "json.hpp"
#include "stablerep/fp_module.hpp"
#include "stablerep/plethysm.hpp"

namespace stablerep {

// JSON number when it fits 64 bits, decimal string otherwise.
nlohmann::json json_of(const BigInt& v);
nlohmann::json json_of(const Partition& nu);              // [4,3,1]
nlohmann::json json_of(const CycInt& x);                  // {"p":, "coeffs":[c0..c_{p-2}]}
nlohmann::json json_of(const LaurentPoly& f);             // sorted [[exp, coeff], ...]
nlohmann::json json_of(const StableElement& e);           // {"p":, "terms":[{"l","m","mult"}]}
nlohmann::json json_of(const PlethysmResult& r);
nlohmann::json json_of(const KNDecomposition& d);

} // namespace stablerep

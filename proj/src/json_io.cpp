#include "stablerep/json_io.hpp"

namespace stablerep {

using nlohmann::json;

json json_of(const BigInt& v) {
    if (auto small = v.to_i64()) return *small;
    return v.to_string();
}

json json_of(const Partition& nu) {
    json a = json::array();
    for (int part : nu.parts()) a.push_back(part);
    return a;
}

json json_of(const CycInt& x) {
    json coeffs = json::array();
    for (int j = 0; j <= x.p() - 2; ++j) coeffs.push_back(json_of(x.coeff(j)));
    return json{{"p", x.p()}, {"coeffs", coeffs}};
}

json json_of(const LaurentPoly& f) {
    json a = json::array();
    for (const auto& [e, c] : f.coeffs()) a.push_back(json::array({e, json_of(c)}));
    return a;
}

json json_of(const StableElement& e) {
    json terms = json::array();
    for (const auto& [key, c] : e.terms()) {
        terms.push_back(json{{"l", key.second}, {"m", key.first}, {"mult", json_of(c)}});
    }
    return json{{"p", e.p()}, {"terms", terms}};
}

json json_of(const PlethysmResult& r) {
    return json{{"p", r.p},
                {"nu", json_of(r.nu)},
                {"l", r.l},
                {"twist_m", r.twist},
                {"decomposition", json_of(r.decomposition)},
                {"projective", r.projective},
                {"stably_irreducible", r.stably_irreducible},
                {"theorem_case", r.theorem_case}};
}

json json_of(const KNDecomposition& d) {
    json summands = json::array();
    json projectives = json::array();
    for (const auto& [key, mult] : d.summands) {
        json entry{{"i", key.first}, {"j", key.second}, {"mult", mult}};
        (key.second == d.p - 1 ? projectives : summands).push_back(entry);
    }
    return json{{"p", d.p}, {"summands", summands}, {"projective_part", projectives}};
}

} // namespace stablerep

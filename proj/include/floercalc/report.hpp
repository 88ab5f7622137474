#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "floercalc/invariants.hpp"
#include "floercalc/plumbing.hpp"
#include "floercalc/torus_knot.hpp"

namespace floercalc {

inline constexpr const char* kSchemaVersion = "1.0";

using Json = nlohmann::ordered_json;

// Exact integers are emitted as JSON numbers while they fit 64 bits and as
// decimal strings beyond that; rationals are always "num/den" strings.
inline Json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

inline Json to_json(const SeifertData& d) {
    Json j;
    j["a_list"] = d.a_list;
    j["a"] = json_int(d.a);
    Json q = Json::array();
    for (const auto& qi : d.q_list) q.push_back(json_int(qi));
    j["q_list"] = q;
    j["b_list"] = d.b_list;
    j["e0"] = d.e0;
    j["m"] = d.m ? json_int(*d.m) : Json(nullptr);
    return j;
}

inline Json to_json(const InvariantReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "invariant_report";
    j["input"]["seifert"] = r.data.a_list;
    j["seifert"] = to_json(r.data);
    j["casson"] = r.casson;
    Json mu;
    mu["value"] = r.mu_bar;
    mu["method"] = to_string(r.mu_bar_method);
    mu["methods"] = r.mu_bar_methods;
    j["mu_bar"] = mu;
    Json betti;
    betti["b1"] = r.betti.b1;
    betti["b3"] = r.betti.b3;
    betti["b5"] = r.betti.b5;
    betti["b7"] = r.betti.b7;
    betti["even_degrees"] = 0; // b_k = 0 for even k
    j["betti"] = betti;
    j["sw_count"] = r.sw_count;
    j["chi_half_canonical"] = r.chi_half_canonical;
    j["b3_plus_b7_routes"] = {{"lattice_A", r.b37_lattice_A},
                              {"alternating_B", r.b37_alternating_B}};
    if (r.tau) {
        Json tau;
        tau["tau1"] = r.tau->tau1;
        tau["tau2"] = r.tau->tau2;
        tau["tau3"] = r.tau->tau3;
        tau["milnor_signature"] = *r.milnor_sig;
        j["tau"] = tau;
    }
    return j;
}

inline Json to_json(const TorusKnotReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "torus_knot_report";
    j["input"]["torus"] = std::vector<long long>{r.p, r.q};
    j["p"] = r.p;
    j["q"] = r.q;
    j["genus"] = r.genus;
    j["gaps"] = r.gaps;
    Json d;
    d["value"] = r.d;
    d["methods"] = r.d_methods;
    d["agree"] = true; // assemble_torus_report throws otherwise
    j["d"] = d;
    j["alexander"] = r.alexander;
    j["h0_count"] = r.h0_count;
    j["arf_mod2_consistent"] = r.arf_consistent;
    return j;
}

inline std::string csv_header(int arity) {
    std::string h;
    for (int i = 1; i <= arity; ++i) h += "a" + std::to_string(i) + ",";
    return h + "lambda,mu_bar,b1,b3,sw_count";
}

inline std::string csv_row(const InvariantReport& r) {
    std::string row;
    for (long long a : r.data.a_list) row += std::to_string(a) + ",";
    row += std::to_string(r.casson) + "," + std::to_string(r.mu_bar) + "," +
           std::to_string(r.betti.b1) + "," + std::to_string(r.betti.b3) + "," +
           std::to_string(r.sw_count);
    return row;
}

// Plain-text plumbing dump: vertex count, "index weight" lines, edge count,
// "u v" lines.
inline std::string plumbing_dump(const SeifertData& d) {
    const PlumbingGraph g = build_plumbing(d);
    std::string out = "# plumbing graph for " + d.str() + "\n";
    out += "vertices " + std::to_string(g.size()) + "\n";
    for (int v = 0; v < g.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(g.weights[v]) + "\n";
    out += "edges " + std::to_string(g.edges.size()) + "\n";
    for (const auto& [u, v] : g.edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Json error_document(const std::string& kind, const std::string& message) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "error";
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    return j;
}

} // namespace floercalc

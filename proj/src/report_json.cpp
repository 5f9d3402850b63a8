#include "ekr/report_json.hpp"

namespace ekr {

using nlohmann::json;

json report_to_json(const LemmaReport& r) {
    json j;
    j["lemma"] = r.lemma;
    json params = json::object();
    if (r.params.n) params["n"] = *r.params.n;
    if (r.params.k) params["k"] = *r.params.k;
    if (r.params.d) params["d"] = *r.params.d;
    if (r.params.i) params["i"] = *r.params.i;
    if (r.params.j) params["j"] = *r.params.j;
    j["params"] = std::move(params);
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["slack"] = to_string(r.slack);
    j["relation"] = r.relation;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.details.empty()) {
        json details = json::object();
        for (const auto& [key, value] : r.details) details[key] = value;
        j["details"] = std::move(details);
    }
    if (!r.children.empty()) {
        json kids = json::array();
        for (const LemmaReport& child : r.children) kids.push_back(report_to_json(child));
        j["trace"] = std::move(kids);
    }
    return j;
}

json family_to_json(const SetFamily& f) {
    json j;
    j["n"] = f.ground_set();
    if (f.is_uniform()) j["k"] = *f.uniform_k();
    json sets = json::array();
    for (const Subset& s : f.members()) sets.push_back(s.elements());
    j["sets"] = std::move(sets);
    return j;
}

json outcome_to_json(const SearchOutcome& o) {
    json j;
    j["status"] = search_status_name(o.status);
    j["nodes_explored"] = o.nodes_explored;
    json cuts = json::object();
    for (const auto& [rule, count] : o.bound_cuts) cuts[rule] = count;
    j["bound_cuts"] = std::move(cuts);
    if (o.witness) j["witness"] = family_to_json(*o.witness);
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string report_csv_header() { return "lemma,n,k,d,i,j,lhs,rhs,slack,relation,verdict,witness"; }

std::string report_csv_row(const LemmaReport& r) {
    std::string row;
    row += csv_escape(r.lemma);
    row += "," + opt_str(r.params.n);
    row += "," + opt_str(r.params.k);
    row += "," + opt_str(r.params.d);
    row += "," + opt_str(r.params.i);
    row += "," + opt_str(r.params.j);
    row += "," + csv_escape(to_string(r.lhs));
    row += "," + csv_escape(to_string(r.rhs));
    row += "," + csv_escape(to_string(r.slack));
    row += "," + csv_escape(r.relation);
    row += "," + verdict_name(r.verdict);
    row += "," + csv_escape(r.witness);
    return row;
}

}  // namespace ekr

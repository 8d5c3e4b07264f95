#include <sstream>

#include <json.hpp>

#include "linkwidth/pipeline.hpp"

namespace linkwidth {

namespace {

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string cell(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_header() {
    return "name,n_crossings,n_components,cut_split,wirt_upper,trunk_value,trunk_status,lex_multiset,"
           "sum_width,height,dbc_bound,tube_3x1,certificate_path,search_status,error\n";
}

std::string to_csv(const ReportRow& r) {
    std::ostringstream out;
    out << cell(r.name) << ',' << r.n_crossings << ',' << r.n_components << ',' << flag(r.cut_split) << ','
        << r.wirt_upper << ',' << r.trunk_value << ',' << cell(r.trunk_status) << ','
        << join(r.lex_multiset.entries()) << ',' << r.sum_width << ',' << r.height << ',' << join(r.dbc_bound)
        << ',' << flag(r.tube_3x1) << ',' << cell(r.certificate_path) << ',' << cell(r.search_status) << ','
        << cell(r.error) << '\n';
    return out.str();
}

std::string to_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["n_crossings"] = r.n_crossings;
        j["n_components"] = r.n_components;
        j["cut_split"] = r.cut_split;
        j["wirt_upper"] = r.wirt_upper;
        j["trunk_value"] = r.trunk_value;
        j["trunk_status"] = r.trunk_status;
        j["lex_multiset"] = r.lex_multiset.entries();
        j["sum_width"] = r.sum_width;
        j["height"] = r.height;
        j["dbc_bound"] = r.dbc_bound;
        j["tube_3x1"] = r.tube_3x1;
        j["certificate_path"] = r.certificate_path;
        j["search_status"] = r.search_status;
        j["error"] = r.error;
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

}  // namespace linkwidth

#include <fstream>
#include <set>
#include <sstream>

#include "linkwidth/pipeline.hpp"

namespace linkwidth {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t tab = line.find('\t', begin);
        fields.push_back(line.substr(begin, tab == std::string::npos ? std::string::npos : tab - begin));
        if (tab == std::string::npos) break;
        begin = tab + 1;
    }
    for (auto& f : fields) {
        const auto b = f.find_first_not_of(" \r");
        const auto e = f.find_last_not_of(" \r");
        f = b == std::string::npos ? std::string{} : f.substr(b, e - b + 1);
    }
    return fields;
}

std::optional<bool> parse_flag(const std::string& text, std::size_t line_no) {
    if (text.empty() || text == "-") return std::nullopt;
    if (text == "1" || text == "yes" || text == "true") return true;
    if (text == "0" || text == "no" || text == "false") return false;
    throw TableError("line " + std::to_string(line_no) + ": bad is_prime value '" + text + "'");
}

std::optional<int> parse_int(const std::string& text, std::size_t line_no) {
    if (text.empty() || text == "-") return std::nullopt;
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < 0) {
        throw TableError("line " + std::to_string(line_no) + ": bad bridge_lower value '" + text + "'");
    }
    return value;
}

}  // namespace

std::optional<TableEntry> parse_table_line(const std::string& line, std::size_t line_no, const std::string& source) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') return std::nullopt;
    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 5) {
        throw TableError("line " + std::to_string(line_no) + ": expected 3 to 5 tab-separated fields, got " +
                         std::to_string(fields.size()));
    }
    TableEntry e;
    e.name = fields[0];
    if (e.name.empty()) throw TableError("line " + std::to_string(line_no) + ": empty link name");
    if (fields[1] == "dt") e.format = CodeFormat::Dt;
    else if (fields[1] == "gauss") e.format = CodeFormat::Gauss;
    else throw TableError("line " + std::to_string(line_no) + ": unknown format '" + fields[1] + "'");
    e.code = fields[2];
    e.metadata.name = e.name;
    if (fields.size() > 3) e.metadata.is_prime = parse_flag(fields[3], line_no);
    if (fields.size() > 4) e.metadata.bridge_lower = parse_int(fields[4], line_no);
    e.metadata.provenance = source + ":" + std::to_string(line_no);
    return e;
}

std::vector<TableEntry> read_table(std::istream& in, const std::string& source) {
    std::vector<TableEntry> out;
    std::set<std::string> names;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto e = parse_table_line(line, line_no, source);
        if (!e) continue;
        if (!names.insert(e->name).second) {
            throw TableError("line " + std::to_string(line_no) + ": duplicate link name '" + e->name + "'");
        }
        out.push_back(std::move(*e));
    }
    return out;
}

std::vector<TableEntry> read_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open " + path.string());
    return read_table(in, path.filename().string());
}

GaussCode decode(CodeFormat format, const std::string& code) {
    return format == CodeFormat::Dt ? dt_to_gauss(parse_dt(code)) : parse_gauss(code);
}

}  // namespace linkwidth

#include "linkwidth/certificate.hpp"

#include <sstream>

namespace linkwidth {

namespace {

std::string trim_copy(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

Event parse_event_line(const std::string& line, std::size_t line_no) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    auto fail = [&](const std::string& why) {
        return ParseError(line_no, "certificate line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "S") {
        int strand = -1;
        int value = -1;
        if (!(in >> strand >> value) || strand < 0) throw fail("expected 'S <strand> <value>'");
        return Event::seed(strand, value);
    }
    if (tag == "X") {
        std::string where;
        std::string kind;
        int value = -1;
        if (!(in >> where >> kind >> value)) throw fail("expected 'X <crossing> <I|II|D> <value>'");
        SpecialKind k;
        if (kind == "I") k = SpecialKind::TypeI;
        else if (kind == "II") k = SpecialKind::TypeII;
        else if (kind == "D") k = SpecialKind::Degenerate;
        else throw fail("unknown special kind '" + kind + "'");
        int crossing = -1;
        if (where != "-") {
            try {
                crossing = std::stoi(where) - 1;
            } catch (const std::exception&) {
                throw fail("bad crossing label '" + where + "'");
            }
            if (crossing < 0) throw fail("bad crossing label '" + where + "'");
        }
        return Event::special_at(crossing, k, value);
    }
    throw fail("unknown event tag '" + tag + "'");
}

}  // namespace

std::string write_events(const EventSequence& events) {
    std::string out;
    for (const auto& e : events) {
        if (e.is_seed()) {
            out += "S " + std::to_string(e.id) + " " + std::to_string(e.value_after) + "\n";
        } else {
            out += "X " + (e.id < 0 ? std::string("-") : std::to_string(e.id + 1)) + " " + to_string(e.special) +
                   " " + std::to_string(e.value_after) + "\n";
        }
    }
    return out;
}

EventSequence read_events(std::string_view text) {
    EventSequence events;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim_copy(raw);
        if (line.empty() || line[0] == '#') continue;
        events.push_back(parse_event_line(line, line_no));
    }
    return events;
}

std::string write_certificate(const Certificate& cert) {
    std::string out = "# linkwidth certificate\n";
    out += "name " + cert.name + "\n";
    out += "gauss " + serialize_gauss(cert.code) + "\n";
    for (const auto& seq : cert.sequences) {
        out += "sequence " + seq.label + "\n";
        out += write_events(seq.events);
        out += "end\n";
    }
    return out;
}

Certificate read_certificate(std::string_view text) {
    Certificate cert;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_code = false;
    NamedSequence* open = nullptr;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim_copy(raw);
        if (line.empty() || line[0] == '#') continue;
        if (open != nullptr) {
            if (line == "end") {
                open = nullptr;
            } else {
                open->events.push_back(parse_event_line(line, line_no));
            }
            continue;
        }
        if (line.rfind("name", 0) == 0) {
            cert.name = trim_copy(std::string_view(line).substr(4));
        } else if (line.rfind("gauss", 0) == 0) {
            cert.code = parse_gauss(trim_copy(std::string_view(line).substr(5)));
            have_code = true;
        } else if (line.rfind("sequence", 0) == 0) {
            cert.sequences.push_back({trim_copy(std::string_view(line).substr(8)), {}});
            open = &cert.sequences.back();
        } else {
            throw ParseError(line_no, "certificate line " + std::to_string(line_no) + ": unexpected '" + line + "'");
        }
    }
    if (open != nullptr) throw ParseError(line_no, "certificate ends inside a sequence block");
    if (!have_code) throw ParseError(0, "certificate has no gauss line");
    return cert;
}

ColoringState canonical_sequence(const LinkDiagram& d, std::span<const StrandId> seed_order,
                                 const ColoringOptions& options) {
    ColoringState state(d, options);
    state.close();
    for (StrandId s : seed_order) {
        if (state.is_colored(s)) continue;
        state.seed(s);
        state.close();
    }
    return state;
}

ReplayResult replay(const LinkDiagram& d, const EventSequence& events, const ColoringOptions& options) {
    ReplayResult result;
    std::vector<StrandId> seeds;
    for (const auto& e : events) {
        if (!e.is_seed()) continue;
        if (e.id < 0 || e.id >= d.strand_count()) {
            result.message = "seed on unknown strand " + std::to_string(e.id);
            return result;
        }
        seeds.push_back(e.id);
    }
    ColoringState state(d, options);
    try {
        state.close();
        for (StrandId s : seeds) {
            if (state.is_colored(s)) {
                result.message = "seed strand " + std::to_string(s) + " is already colored when replayed";
                return result;
            }
            state.seed(s);
            state.close();
        }
    } catch (const ColoringError& e) {
        result.message = e.what();
        return result;
    }
    if (!state.complete()) {
        result.message = "replay leaves " + std::to_string(d.strand_count() - state.colored_count()) +
                         " strands uncolored";
        return result;
    }
    if (state.events() != events) {
        const auto& got = state.events();
        std::size_t i = 0;
        while (i < got.size() && i < events.size() && got[i] == events[i]) ++i;
        result.message = "replayed events differ from the certificate at event " + std::to_string(i + 1);
        return result;
    }
    try {
        result.widths = widths_of_sequence(events);
    } catch (const ColoringError& e) {
        result.message = e.what();
        return result;
    }
    result.ok = true;
    return result;
}

std::vector<ReplayResult> verify_certificate(const Certificate& cert, const ColoringOptions& options) {
    const LinkDiagram d(cert.code);
    std::vector<ReplayResult> out;
    for (const auto& seq : cert.sequences) out.push_back(replay(d, seq.events, options));
    return out;
}

}  // namespace linkwidth

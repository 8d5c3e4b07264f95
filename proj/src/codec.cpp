#include "linkwidth/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

namespace linkwidth {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(position == kNoPosition ? message
                                                 : "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

int GaussCode::crossing_count() const {
    std::size_t visits = 0;
    for (const auto& c : components) visits += c.size();
    return static_cast<int>(visits / 2);
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// [begin, end) with surrounding whitespace removed.
std::pair<std::size_t, std::size_t> trim(std::string_view text, std::size_t begin, std::size_t end) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    return {begin, end};
}

Visit parse_visit(std::string_view text, std::size_t begin, std::size_t end) {
    if (begin == end) throw ParseError(begin, "empty visit");
    Visit v;
    switch (text[begin]) {
        case 'O': case 'o': v.passage = Passage::Over; break;
        case 'U': case 'u': v.passage = Passage::Under; break;
        default: throw ParseError(begin, "visit must start with 'O' or 'U'");
    }
    std::size_t p = begin + 1;
    std::size_t digits_end = p;
    while (digits_end < end && std::isdigit(static_cast<unsigned char>(text[digits_end]))) ++digits_end;
    if (digits_end == p) throw ParseError(p, "expected crossing label");
    auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + digits_end, v.crossing);
    if (ec != std::errc{} || v.crossing <= 0) throw ParseError(p, "crossing label must be a positive integer");
    p = digits_end;
    if (p < end) {
        if (text[p] == '+') v.sign = 1;
        else if (text[p] == '-') v.sign = -1;
        else throw ParseError(p, "unexpected character after crossing label");
        ++p;
    }
    if (p != end) throw ParseError(p, "trailing characters in visit");
    return v;
}

}  // namespace

void validate(const GaussCode& code) {
    std::map<int, std::pair<int, int>> seen;  // label -> (#over, #under)
    std::map<int, int> signs;
    for (const auto& comp : code.components) {
        for (const auto& v : comp) {
            if (v.crossing <= 0) throw ParseError(ParseError::kNoPosition, "crossing labels must be positive");
            auto& [over, under] = seen[v.crossing];
            (v.passage == Passage::Over ? over : under) += 1;
            if (v.sign == 0) continue;
            auto [it, fresh] = signs.try_emplace(v.crossing, v.sign);
            if (!fresh && it->second != v.sign) {
                throw ParseError(ParseError::kNoPosition, "crossing " + std::to_string(v.crossing) + " has conflicting signs");
            }
        }
    }
    int expected = 1;
    for (const auto& [label, counts] : seen) {
        if (counts.first != 1 || counts.second != 1) {
            throw ParseError(ParseError::kNoPosition, "crossing " + std::to_string(label) +
                                    " must appear exactly once as O and once as U");
        }
        if (label != expected) {
            throw ParseError(ParseError::kNoPosition, "crossing labels are not contiguous: missing " + std::to_string(expected));
        }
        ++expected;
    }
}

GaussCode parse_gauss(std::string_view text) {
    GaussCode code;
    std::size_t comp_begin = 0;
    while (true) {
        std::size_t comp_end = text.find(';', comp_begin);
        if (comp_end == std::string_view::npos) comp_end = text.size();
        auto [cb, ce] = trim(text, comp_begin, comp_end);
        std::vector<Visit> comp;
        if (cb != ce) {
            std::size_t vb = cb;
            while (true) {
                std::size_t ve = text.find(',', vb);
                if (ve == std::string_view::npos || ve > ce) ve = ce;
                auto [b, e] = trim(text, vb, ve);
                comp.push_back(parse_visit(text, b, e));
                if (ve == ce) break;
                vb = ve + 1;
            }
        }
        code.components.push_back(std::move(comp));
        if (comp_end == text.size()) break;
        comp_begin = comp_end + 1;
    }
    validate(code);
    return code;
}

std::string serialize_gauss(const GaussCode& code) {
    std::string out;
    for (std::size_t c = 0; c < code.components.size(); ++c) {
        if (c > 0) out += ';';
        const auto& comp = code.components[c];
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i > 0) out += ',';
            out += comp[i].passage == Passage::Over ? 'O' : 'U';
            out += std::to_string(comp[i].crossing);
            if (comp[i].sign > 0) out += '+';
            if (comp[i].sign < 0) out += '-';
        }
    }
    return out;
}

void validate(const DtCode& code) {
    const int n = code.crossing_count();
    if (code.component_lengths.empty()) throw ParseError(ParseError::kNoPosition, "DT code has no components");
    int total = 0;
    for (int len : code.component_lengths) {
        if (len <= 0) throw ParseError(ParseError::kNoPosition, "component lengths must be positive");
        total += len;
    }
    if (total != n) {
        throw ParseError(ParseError::kNoPosition, "component lengths sum to " + std::to_string(total) + " but there are " +
                                std::to_string(n) + " labels");
    }
    std::vector<bool> used(2 * static_cast<std::size_t>(n) + 1, false);
    for (int label : code.even_labels) {
        const int mag = std::abs(label);
        if (mag % 2 != 0) throw ParseError(ParseError::kNoPosition, "DT label " + std::to_string(label) + " is odd");
        if (mag < 2 || mag > 2 * n) throw ParseError(ParseError::kNoPosition, "DT label " + std::to_string(label) + " out of range");
        if (used[mag]) throw ParseError(ParseError::kNoPosition, "DT label " + std::to_string(mag) + " repeated");
        used[mag] = true;
    }
}

namespace {

// Reads signed integers separated by whitespace and commas from [begin, end).
std::vector<int> read_integers(std::string_view text, std::size_t begin, std::size_t end) {
    std::vector<int> values;
    std::size_t p = begin;
    while (p < end) {
        char ch = text[p];
        if (is_space(ch) || ch == ',') {
            ++p;
            continue;
        }
        std::size_t q = p;
        if (text[q] == '-' || text[q] == '+') ++q;
        std::size_t digits = q;
        while (q < end && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
        if (q == digits) throw ParseError(p, "expected an integer");
        int value = 0;
        const char* first = text.data() + (text[p] == '+' ? p + 1 : p);
        auto [ptr, ec] = std::from_chars(first, text.data() + q, value);
        if (ec != std::errc{}) throw ParseError(p, "integer out of range");
        values.push_back(value);
        p = q;
    }
    return values;
}

}  // namespace

DtCode parse_dt(std::string_view text) {
    DtCode code;
    auto [b, e] = trim(text, 0, text.size());
    if (b == e) throw ParseError(ParseError::kNoPosition, "empty DT code");

    constexpr std::string_view kLengths = "lengths:";
    if (text.substr(b, kLengths.size()) == kLengths) {
        std::size_t sep = text.find(';', b);
        if (sep == std::string_view::npos || sep > e) throw ParseError(b, "missing ';' after component lengths");
        code.component_lengths = read_integers(text, b + kLengths.size(), sep);
        code.even_labels = read_integers(text, sep + 1, e);
        if (code.component_lengths.empty()) throw ParseError(b, "empty component length block");
    } else if (text[b] == '(' || text[b] == '[') {
        // SnapPy tuple form, optionally wrapped in one outer bracket pair.
        std::size_t p = b;
        if (text[b] == '[') {
            if (text[e - 1] != ']') throw ParseError(e - 1, "unbalanced '['");
            ++p;
            --e;
        }
        while (p < e) {
            if (is_space(text[p]) || text[p] == ',') {
                ++p;
                continue;
            }
            if (text[p] != '(') throw ParseError(p, "expected '('");
            std::size_t close = text.find(')', p);
            if (close == std::string_view::npos || close > e) throw ParseError(p, "unbalanced '('");
            auto labels = read_integers(text, p + 1, close);
            code.component_lengths.push_back(static_cast<int>(labels.size()));
            code.even_labels.insert(code.even_labels.end(), labels.begin(), labels.end());
            p = close + 1;
        }
    } else {
        code.even_labels = read_integers(text, b, e);
        code.component_lengths = {static_cast<int>(code.even_labels.size())};
    }
    validate(code);
    return code;
}

std::string serialize_dt(const DtCode& code) {
    std::ostringstream out;
    if (code.component_lengths.size() > 1) {
        out << "lengths:";
        for (int len : code.component_lengths) out << ' ' << len;
        out << ';';
    }
    for (std::size_t i = 0; i < code.even_labels.size(); ++i) {
        if (i > 0 || code.component_lengths.size() > 1) out << ' ';
        out << code.even_labels[i];
    }
    return out.str();
}

GaussCode dt_to_gauss(const DtCode& code) {
    validate(code);
    const int n = code.crossing_count();
    // Visit k (1-based) belongs to the crossing pairing odd label 2i-1 with |even_labels[i-1]|.
    std::vector<int> crossing_at(2 * static_cast<std::size_t>(n) + 1, 0);
    std::vector<Passage> passage_at(2 * static_cast<std::size_t>(n) + 1, Passage::Over);
    for (int i = 0; i < n; ++i) {
        const int odd = 2 * i + 1;
        const int even = std::abs(code.even_labels[i]);
        const bool odd_over = code.even_labels[i] > 0;
        crossing_at[odd] = i + 1;
        crossing_at[even] = i + 1;
        passage_at[odd] = odd_over ? Passage::Over : Passage::Under;
        passage_at[even] = odd_over ? Passage::Under : Passage::Over;
    }
    GaussCode raw;
    int visit = 1;
    for (int len : code.component_lengths) {
        std::vector<Visit> comp;
        for (int k = 0; k < 2 * len; ++k, ++visit) {
            comp.push_back(Visit{crossing_at[visit], passage_at[visit], 0});
        }
        raw.components.push_back(std::move(comp));
    }
    GaussCode result = relabel_by_first_appearance(raw);
    validate(result);
    return result;
}

DtCode gauss_to_dt(const GaussCode& code) {
    validate(code);
    const int n = code.crossing_count();
    const int m = code.component_count();
    for (int c = 0; c < m; ++c) {
        if (code.components[c].empty()) {
            throw ParseError(ParseError::kNoPosition, "component " + std::to_string(c + 1) + " has no crossings; DT cannot encode it");
        }
        if (code.components[c].size() % 2 != 0) {
            throw ParseError(ParseError::kNoPosition, "component " + std::to_string(c + 1) + " has an odd number of visits");
        }
    }

    // Each component may be rotated by one visit, flipping the parity of all
    // its labels. A crossing between components a and b needs opposite
    // parities, so this is a 2-colouring of the component graph.
    struct Occurrence {
        int component;
        int index;
    };
    std::vector<std::vector<Occurrence>> occurrences(static_cast<std::size_t>(n) + 1);
    for (int c = 0; c < m; ++c) {
        for (int i = 0; i < static_cast<int>(code.components[c].size()); ++i) {
            occurrences[code.components[c][i].crossing].push_back({c, i});
        }
    }
    std::vector<int> shift(m, -1);
    for (int root = 0; root < m; ++root) {
        if (shift[root] >= 0) continue;
        shift[root] = 0;
        std::queue<int> pending;
        pending.push(root);
        while (!pending.empty()) {
            const int c = pending.front();
            pending.pop();
            for (const auto& v : code.components[c]) {
                const auto& occ = occurrences[v.crossing];
                const Occurrence& a = occ[0];
                const Occurrence& b = occ[1];
                if (a.component == b.component) continue;
                const int other = a.component == c ? b.component : a.component;
                const int mine = a.component == c ? a.index : b.index;
                const int theirs = a.component == c ? b.index : a.index;
                // Parity of a visit after shifting is (index + shift) mod 2.
                const int need = (mine + shift[c] + theirs + 1) % 2;
                if (shift[other] < 0) {
                    shift[other] = need;
                    pending.push(other);
                } else if (shift[other] != need) {
                    throw ParseError(ParseError::kNoPosition, "no DT labelling exists for this Gauss code");
                }
            }
        }
    }

    // Assign labels 1..2n in traversal order after rotation.
    std::vector<std::vector<Visit>> rotated(m);
    for (int c = 0; c < m; ++c) {
        const auto& comp = code.components[c];
        const std::size_t len = comp.size();
        for (std::size_t i = 0; i < len; ++i) rotated[c].push_back(comp[(i + shift[c]) % len]);
    }
    std::vector<int> odd_label(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> even_label(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> odd_over(static_cast<std::size_t>(n) + 1, false);
    int label = 1;
    for (const auto& comp : rotated) {
        for (const auto& v : comp) {
            if (label % 2 == 1) {
                if (odd_label[v.crossing] != 0) throw ParseError(ParseError::kNoPosition, "no DT labelling exists for this Gauss code");
                odd_label[v.crossing] = label;
                odd_over[v.crossing] = v.passage == Passage::Over;
            } else {
                if (even_label[v.crossing] != 0) throw ParseError(ParseError::kNoPosition, "no DT labelling exists for this Gauss code");
                even_label[v.crossing] = label;
            }
            ++label;
        }
    }
    std::vector<int> by_odd(static_cast<std::size_t>(n), 0);
    for (int x = 1; x <= n; ++x) {
        by_odd[(odd_label[x] - 1) / 2] = odd_over[x] ? even_label[x] : -even_label[x];
    }
    DtCode dt;
    for (const auto& comp : code.components) dt.component_lengths.push_back(static_cast<int>(comp.size() / 2));
    dt.even_labels = std::move(by_odd);
    validate(dt);
    return dt;
}

GaussCode relabel_by_first_appearance(const GaussCode& code) {
    std::map<int, int> fresh;
    GaussCode out;
    for (const auto& comp : code.components) {
        std::vector<Visit> c;
        for (const auto& v : comp) {
            auto [it, inserted] = fresh.try_emplace(v.crossing, static_cast<int>(fresh.size()) + 1);
            c.push_back(Visit{it->second, v.passage, v.sign});
        }
        out.components.push_back(std::move(c));
    }
    return out;
}

}  // namespace linkwidth

#include "wix/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "wix/error.hpp"

namespace wix {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json series_json_value(const ChainSeries& f) {
    ordered_json coeffs = ordered_json::object();
    for (const auto& [u, v] : f.coeffs()) coeffs[std::to_string(u)] = v.str();
    ordered_json out;
    out["coeffs"] = std::move(coeffs);
    return out;
}

ordered_json poset_json_value(const Poset& p) {
    ordered_json out;
    out["size"] = p.size();
    ordered_json covers = ordered_json::array();
    for (auto [a, b] : hasse(p).covers) covers.push_back(ordered_json::array({a, b}));
    out["covers"] = std::move(covers);
    return out;
}

Int int_from_json(const ordered_json& v, const char* what) {
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw parse_error(std::string(what) + ": bad integer '" + s + "'", 0);
        }
    }
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw parse_error(std::string(what) + ": expected an integer or decimal string", 0);
}

}  // namespace

std::string series_to_text(const ChainSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [u, v] : f.coeffs()) {
        const bool negative = v < 0;
        const Int mag = negative ? Int(-v) : v;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) {
            out += mag.str();
            out += "*";
        }
        out += "z" + std::to_string(u);
        first = false;
    }
    return out;
}

ChainSeries series_from_text(std::string_view text) {
    ChainSeries out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&](const char* what) {
        skip_ws();
        const std::size_t start = pos;
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) throw parse_error(std::string("expected ") + what, start);
        return digits;
    };

    skip_ws();
    if (pos >= text.size()) throw parse_error("empty series", pos);
    if (text[pos] == '0') {  // the zero series
        ++pos;
        skip_ws();
        if (pos < text.size()) throw parse_error("unexpected input after '0'", pos);
        return out;
    }

    bool expect_term = true;
    int sign = 1;
    if (text[pos] == '-') {  // optional leading sign
        sign = -1;
        ++pos;
    } else if (text[pos] == '+') {
        ++pos;
    }
    while (pos < text.size() || expect_term) {
        skip_ws();
        if (expect_term) {
            if (pos >= text.size()) throw parse_error("expected a term", pos);
            Int coefficient = 1;
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coefficient = Int(read_digits("coefficient"));
                skip_ws();
                if (pos >= text.size() || text[pos] != '*')
                    throw parse_error("expected '*' after coefficient", pos);
                ++pos;
                skip_ws();
            }
            if (pos >= text.size() || text[pos] != 'z')
                throw parse_error("expected 'z'", pos);
            ++pos;
            const std::size_t index_pos = pos;
            const std::string digits = read_digits("index");
            long index = 0;
            try {
                index = std::stol(digits);
            } catch (const std::exception&) {
                throw parse_error("chain-basis index too large", index_pos);
            }
            if (index < 1) throw parse_error("chain-basis index must be >= 1", index_pos);
            if (index > 1000000) throw parse_error("chain-basis index too large", index_pos);
            out.add(static_cast<int>(index), sign * coefficient);
            expect_term = false;
        } else {
            if (pos >= text.size()) break;
            if (text[pos] == '+') sign = 1;
            else if (text[pos] == '-') sign = -1;
            else throw parse_error(std::string("unexpected '") + text[pos] + "'", pos);
            ++pos;
            expect_term = true;
        }
    }
    return out;
}

std::string series_to_json(const ChainSeries& f) { return series_json_value(f).dump(); }

ChainSeries series_from_json(std::string_view json) {
    ordered_json doc = ordered_json::parse(json, nullptr, false);
    if (doc.is_discarded()) throw parse_error("invalid JSON", 0);
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_object())
        throw parse_error("series JSON needs a \"coeffs\" object", 0);
    ChainSeries out;
    for (const auto& [key, value] : doc["coeffs"].items()) {
        long index = 0;
        try {
            index = std::stol(key);
        } catch (const std::exception&) {
            throw parse_error("bad chain-basis index '" + key + "'", 0);
        }
        if (index < 1) throw parse_error("chain-basis index must be >= 1", 0);
        out.add(static_cast<int>(index), int_from_json(value, "coefficient"));
    }
    return out;
}

ChainSeries series_from_any(std::string_view input) {
    std::size_t pos = 0;
    while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
    if (pos < input.size() && input[pos] == '{') return series_from_json(input);
    return series_from_text(input);
}

std::string poset_to_json(const Poset& p) { return poset_json_value(p).dump(); }

Poset poset_from_json(std::string_view json) {
    ordered_json doc = ordered_json::parse(json, nullptr, false);
    if (doc.is_discarded()) throw parse_error("invalid JSON", 0);
    if (!doc.is_object() || !doc.contains("size") || !doc["size"].is_number_integer())
        throw parse_error("poset JSON needs an integer \"size\"", 0);
    const int size = doc["size"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    if (doc.contains("covers")) {
        if (!doc["covers"].is_array()) throw parse_error("\"covers\" must be an array", 0);
        for (const auto& entry : doc["covers"]) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
                !entry[1].is_number_integer())
                throw parse_error("cover entries must be [a, b] integer pairs", 0);
            pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
        }
    }
    try {
        return Poset::from_pairs(size, pairs);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid poset: ") + e.what(), 0);
    }
}

std::string poset_to_dot(const Poset& p) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=LR;\n";
    for (int v = 0; v < p.size(); ++v) out << "  n" << v << ";\n";
    for (auto [a, b] : hasse(p).covers) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string report_to_json(const RepReport& report) {
    ordered_json out;
    out["feasible"] = report.feasible;
    out["reasons"] = report.reasons;
    if (report.invariants) {
        ordered_json inv;
        inv["i"] = report.invariants->i;
        inv["k"] = report.invariants->k;
        inv["d"] = report.invariants->d;
        inv["m"] = report.invariants->m;
        inv["leaf_units"] = report.invariants->leaf_units;
        out["invariants"] = std::move(inv);
    }
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : report.witnesses) {
        ordered_json entry;
        entry["term"] = print_term(w.term);
        entry["poset"] = poset_json_value(w.poset);
        witnesses.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(witnesses);
    return out.dump();
}

}  // namespace wix

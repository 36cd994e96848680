#include "wix/index.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "wix/error.hpp"
#include "wix/io.hpp"

namespace wix {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::vector<IndexRecord> build_index(int max_units, int max_d, const SearchBudget& budget) {
    if (max_units < 1 || max_d < 0)
        throw std::invalid_argument("index build needs units >= 1 and d >= 0");
    if (max_units > budget.max_units || max_d > budget.max_d)
        throw budget_error("index build: (units " + std::to_string(max_units) + ", d " +
                           std::to_string(max_d) + ") exceeds budget (units " +
                           std::to_string(budget.max_units) + ", d " +
                           std::to_string(budget.max_d) + ")");

    std::map<std::string, std::vector<Term>> groups;
    for (int units = 1; units <= max_units; ++units)
        for (int d = 0; d <= max_d; ++d)
            for (const Term& t : enumerate_terms(units, d))
                groups[series_to_text(eval_series(t))].push_back(t);

    std::vector<IndexRecord> records;
    records.reserve(groups.size());
    for (auto& [key, terms] : groups) {
        IndexRecord record;
        record.series_key = key;
        // classes bucketed by fingerprint; exact check settles each bucket
        std::map<std::uint64_t, std::vector<Poset>> classes;
        int class_count = 0;
        for (const Term& t : terms) {  // already sorted by printed form
            record.terms.push_back(print_term(t));
            Poset p = eval_poset(t);
            std::vector<Poset>& bucket = classes[iso_fingerprint(p)];
            bool known = false;
            for (const Poset& seen : bucket)
                if (seen.size() == p.size() && is_isomorphic(seen, p, p.size())) {
                    known = true;
                    break;
                }
            if (!known) {
                bucket.push_back(std::move(p));
                ++class_count;
            }
        }
        record.poset_count = class_count;
        records.push_back(std::move(record));
    }
    return records;
}

std::string index_record_to_json(const IndexRecord& record) {
    ordered_json out;
    out["series_key"] = record.series_key;
    out["terms"] = record.terms;
    out["poset_count"] = record.poset_count;
    return out.dump();
}

void write_index(std::ostream& out, const std::vector<IndexRecord>& records) {
    for (const IndexRecord& record : records) out << index_record_to_json(record) << '\n';
}

std::vector<IndexRecord> read_index(std::istream& in) {
    std::vector<IndexRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ordered_json doc = ordered_json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("series_key") ||
            !doc.contains("terms") || !doc.contains("poset_count"))
            throw parse_error("bad index record on line " + std::to_string(line_no), 0);
        try {
            IndexRecord record;
            record.series_key = doc["series_key"].get<std::string>();
            record.terms = doc["terms"].get<std::vector<std::string>>();
            record.poset_count = doc["poset_count"].get<int>();
            records.push_back(std::move(record));
        } catch (const ordered_json::exception&) {
            throw parse_error("bad index record on line " + std::to_string(line_no), 0);
        }
    }
    return records;
}

std::optional<IndexRecord> query_index(const std::vector<IndexRecord>& records,
                                       const ChainSeries& series) {
    const std::string key = series_to_text(series);
    for (const IndexRecord& record : records)
        if (record.series_key == key) return record;
    return std::nullopt;
}

}  // namespace wix

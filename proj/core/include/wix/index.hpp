#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wix/represent.hpp"

namespace wix {

/// One line of the series-to-terms index: every normal-form term whose order
/// series equals `series_key` (canonical text form), plus the number of
/// isomorphism classes among their posets.
struct IndexRecord {
    std::string series_key;
    std::vector<std::string> terms;  // canonical, sorted
    int poset_count = 0;

    friend bool operator==(const IndexRecord&, const IndexRecord&) = default;
};

/// Groups every term with units <= max_units and d <= max_d by its series.
/// Records are sorted by series key. Throws budget_error beyond the budget.
std::vector<IndexRecord> build_index(int max_units, int max_d,
                                     const SearchBudget& budget = {});

/// Line-delimited JSON, one record per line.
void write_index(std::ostream& out, const std::vector<IndexRecord>& records);
std::vector<IndexRecord> read_index(std::istream& in);

std::string index_record_to_json(const IndexRecord& record);

/// Looks a canonicalized series key up in loaded records.
std::optional<IndexRecord> query_index(const std::vector<IndexRecord>& records,
                                       const ChainSeries& series);

}  // namespace wix

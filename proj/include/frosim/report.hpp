#pragma once

#include <string>
#include <vector>

#include "frosim/frozen.hpp"

namespace frosim {

struct ReportRow {
    std::size_t rank = 0;
    std::string couple;  // "left + marker + vehicle"
    std::uint64_t count = 0;
    std::size_t author_count = 0;
    Tier tier = Tier::RARE;
    FrozenEvidence evidence = FrozenEvidence::FREQUENCY;
    double review_fraction = 0.0;
};

std::string couple_display(const Couple& couple);

// Top rows by count (descending), ties broken by couple text.
std::vector<ReportRow> report_rows(const std::vector<FrozenSimile>& frozen,
                                   std::size_t top_n);

// Human-readable table; the couple cell carries the count as
// "left + marker + vehicle (count)".
std::string render_plain(const std::vector<ReportRow>& rows);

std::string render_csv(const std::vector<ReportRow>& rows);

std::string frozen_to_json_line(const FrozenSimile& frozen);

// Throws std::runtime_error on schema mismatch.
FrozenSimile frozen_from_json(const std::string& line);

}  // namespace frosim

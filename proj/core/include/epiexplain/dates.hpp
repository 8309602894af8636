#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace epi {

// Calendar dates are carried as day-resolution time points so that
// day arithmetic is plain integer arithmetic.
using Date = std::chrono::sys_days;

// Parses strict ISO-8601 "YYYY-MM-DD". Returns nullopt for anything else,
// including syntactically valid but non-existent dates (2020-02-30).
std::optional<Date> parse_date(std::string_view text);

std::string format_date(Date d);

inline long days_between(Date from, Date to)
{
    return (to - from).count();
}

} // namespace epi

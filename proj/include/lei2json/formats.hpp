#pragma once

#include <string_view>

namespace lei2json {

// Lexical rules shared by cell coercion and schema validation. These are the
// declared contract for the three supported string formats:
//
//   date       YYYY-MM-DD, calendar-checked (month 01-12, day valid for the
//              month, Gregorian leap years).
//   date-time  RFC 3339: <date>T<hh>:<mm>:<ss>[.<digits>](Z|+hh:mm|-hh:mm),
//              'T'/'Z' case-insensitive, hours 00-23, minutes 00-59,
//              seconds 00-60 (leap second), offset hours 00-23.
//   email      exactly one '@'; non-empty local part; domain contains a '.'
//              that is neither its first nor last character; no whitespace
//              or control characters anywhere.

bool is_valid_date(std::string_view s);
bool is_valid_date_time(std::string_view s);
bool is_valid_email(std::string_view s);

}  // namespace lei2json

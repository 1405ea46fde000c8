#include "lei2json/formats.hpp"

#include <cstddef>

namespace lei2json {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

bool is_leap_year(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap_year(y)) return 29;
    return kDays[m - 1];
}

// hh:mm:ss with optional fraction; returns chars consumed, 0 on failure.
std::size_t match_time(std::string_view s) {
    if (s.size() < 8) return 0;
    if (!all_digits(s.substr(0, 2)) || s[2] != ':' || !all_digits(s.substr(3, 2)) ||
        s[5] != ':' || !all_digits(s.substr(6, 2))) {
        return 0;
    }
    int hh = to_int(s.substr(0, 2));
    int mm = to_int(s.substr(3, 2));
    int ss = to_int(s.substr(6, 2));
    if (hh > 23 || mm > 59 || ss > 60) return 0;  // 60 allows a leap second
    std::size_t used = 8;
    if (used < s.size() && s[used] == '.') {
        std::size_t frac = used + 1;
        while (frac < s.size() && s[frac] >= '0' && s[frac] <= '9') ++frac;
        if (frac == used + 1) return 0;  // '.' without digits
        used = frac;
    }
    return used;
}

}  // namespace

bool is_valid_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) ||
        !all_digits(s.substr(8, 2))) {
        return false;
    }
    int y = to_int(s.substr(0, 4));
    int m = to_int(s.substr(5, 2));
    int d = to_int(s.substr(8, 2));
    return m >= 1 && m <= 12 && d >= 1 && d <= days_in_month(y, m);
}

bool is_valid_date_time(std::string_view s) {
    if (s.size() < 20) return false;
    if (!is_valid_date(s.substr(0, 10))) return false;
    if (s[10] != 'T' && s[10] != 't') return false;
    std::size_t time_len = match_time(s.substr(11));
    if (time_len == 0) return false;
    std::string_view offset = s.substr(11 + time_len);
    if (offset.size() == 1 && (offset[0] == 'Z' || offset[0] == 'z')) return true;
    if (offset.size() == 6 && (offset[0] == '+' || offset[0] == '-') &&
        all_digits(offset.substr(1, 2)) && offset[3] == ':' && all_digits(offset.substr(4, 2))) {
        return to_int(offset.substr(1, 2)) <= 23 && to_int(offset.substr(4, 2)) <= 59;
    }
    return false;
}

bool is_valid_email(std::string_view s) {
    std::size_t at = s.find('@');
    if (at == std::string_view::npos || at == 0) return false;
    if (s.find('@', at + 1) != std::string_view::npos) return false;
    for (char c : s) {
        if (static_cast<unsigned char>(c) <= 0x20 || c == 0x7F) return false;
    }
    std::string_view domain = s.substr(at + 1);
    return domain.find('.') != std::string_view::npos && domain.front() != '.' &&
           domain.back() != '.';
}

}  // namespace lei2json

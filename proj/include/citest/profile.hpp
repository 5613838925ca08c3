#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "citest/error.hpp"

namespace citest {

using Count = std::int64_t;

enum class Source { scopus, google_scholar, other };

inline std::string_view to_string(Source s) {
    switch (s) {
        case Source::scopus: return "scopus";
        case Source::google_scholar: return "google_scholar";
        case Source::other: return "other";
    }
    return "other";
}

inline Source parse_source(std::string_view s) {
    if (s == "scopus") return Source::scopus;
    if (s == "google_scholar") return Source::google_scholar;
    return Source::other;
}

struct ProfileMeta {
    std::string name;
    Source source = Source::other;
    std::optional<std::chrono::year_month_day> snapshot_date;
};

enum class Completeness { full, prefix_only };

// Non-increasing citation counts, cit_1 first, with whether the tail is known.
struct RankedView {
    std::span<const Count> cit;
    Completeness completeness = Completeness::full;

    std::size_t size() const noexcept { return cit.size(); }
    bool full() const noexcept { return completeness == Completeness::full; }
    // 1-based rank access; ranks past the end of a full profile read as 0.
    Count at_rank(std::size_t r) const noexcept { return r >= 1 && r <= cit.size() ? cit[r - 1] : 0; }
};

class CitationProfile {
public:
    CitationProfile() = default;

    static CitationProfile normalize(std::vector<Count> raw, ProfileMeta meta = {}) {
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (raw[i] < 0) throw NegativeCitation(i);
        std::ranges::sort(raw, std::greater<>{});
        CitationProfile p;
        p.meta_ = std::move(meta);
        p.total_ = std::accumulate(raw.begin(), raw.end(), Count{0});
        p.cited_ = static_cast<std::size_t>(std::ranges::count_if(raw, [](Count c) { return c >= 1; }));
        p.cit_ = std::move(raw);
        return p;
    }

    std::span<const Count> citations() const noexcept { return cit_; }
    RankedView ranked() const noexcept { return {cit_, Completeness::full}; }
    std::size_t size() const noexcept { return cit_.size(); }
    std::size_t cited_count() const noexcept { return cited_; }
    Count total() const noexcept { return total_; }
    const ProfileMeta& meta() const noexcept { return meta_; }

    friend bool operator==(const CitationProfile& a, const CitationProfile& b) { return a.cit_ == b.cit_; }

private:
    ProfileMeta meta_;
    std::vector<Count> cit_;
    std::size_t cited_ = 0;
    Count total_ = 0;
};

class TruncatedProfile {
public:
    TruncatedProfile(std::vector<Count> head, Completeness c) : head_(std::move(head)), completeness_(c) {}

    std::span<const Count> head() const noexcept { return head_; }
    std::size_t known_rank_count() const noexcept { return head_.size(); }
    Completeness completeness() const noexcept { return completeness_; }
    RankedView ranked() const noexcept { return {head_, completeness_}; }

private:
    std::vector<Count> head_;
    Completeness completeness_;
};

inline TruncatedProfile truncate_head(const CitationProfile& profile, std::size_t m) {
    if (m > profile.size())
        throw RankOutOfRange("cannot keep " + std::to_string(m) + " ranks of a profile with " +
                             std::to_string(profile.size()));
    auto cit = profile.citations();
    return TruncatedProfile({cit.begin(), cit.begin() + static_cast<std::ptrdiff_t>(m)},
                            m < profile.size() ? Completeness::prefix_only : Completeness::full);
}

enum class Format { lines, csv, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline Count parse_count(std::string_view s, std::size_t line) {
    s = trim(s);
    Count v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

inline std::optional<std::chrono::year_month_day> parse_date(std::string_view s, std::size_t line) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    int y = 0;
    unsigned m = 0, d = 0;
    auto field = [&](std::string_view part, auto& out) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        return ec == std::errc{} && ptr == part.data() + part.size();
    };
    if (s.size() != 10 || s[4] != '-' || s[7] != '-' || !field(s.substr(0, 4), y) || !field(s.substr(5, 2), m) ||
        !field(s.substr(8, 2), d))
        throw ParseError(line, "date must be YYYY-MM-DD, got '" + std::string(s) + "'");
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!ymd.ok()) throw ParseError(line, "invalid calendar date '" + std::string(s) + "'");
    return ymd;
}

// Splits one CSV record; double quotes protect commas and "" escapes a quote.
inline std::vector<std::string> split_csv(std::string_view line, std::size_t lineno) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    if (quoted) throw ParseError(lineno, "unterminated quoted field");
    for (auto& f : out) f = std::string(trim(f));
    return out;
}

inline CitationProfile load_lines(std::istream& in) {
    std::vector<Count> raw;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (trim(line).empty()) continue;
        raw.push_back(parse_count(line, n));
    }
    return CitationProfile::normalize(std::move(raw));
}

inline CitationProfile load_csv(std::istream& in) {
    std::vector<Count> raw;
    ProfileMeta meta;
    std::vector<std::string> meta_header;
    enum class State { start, meta_values, header_seen } state = State::start;
    std::string line;
    std::size_t n = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++n;
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        saw_content = true;
        switch (state) {
            case State::start: {
                auto fields = split_csv(t, n);
                if (fields.size() == 1 && fields[0] == "citations") {
                    state = State::header_seen;
                } else if (std::ranges::find(fields, "name") != fields.end() ||
                           std::ranges::find(fields, "source") != fields.end() ||
                           std::ranges::find(fields, "date") != fields.end()) {
                    meta_header = std::move(fields);
                    state = State::meta_values;
                } else {
                    throw ParseError(n, "expected header 'citations' or a name,source,date preamble");
                }
                break;
            }
            case State::meta_values: {
                auto fields = split_csv(t, n);
                if (fields.size() != meta_header.size())
                    throw ParseError(n, "preamble row has " + std::to_string(fields.size()) + " fields, header has " +
                                            std::to_string(meta_header.size()));
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (meta_header[i] == "name") meta.name = fields[i];
                    else if (meta_header[i] == "source") meta.source = parse_source(fields[i]);
                    else if (meta_header[i] == "date") meta.snapshot_date = parse_date(fields[i], n);
                }
                state = State::start;
                meta_header.clear();
                break;
            }
            case State::header_seen:
                raw.push_back(parse_count(t, n));
                break;
        }
    }
    // A file with no data lines is an empty profile, not a malformed one.
    if (state != State::header_seen && saw_content) throw ParseError(n, "missing 'citations' header");
    return CitationProfile::normalize(std::move(raw), std::move(meta));
}

inline CitationProfile load_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    if (!j.is_object() || !j.contains("citations") || !j["citations"].is_array())
        throw ParseError(0, "expected an object with a 'citations' array");
    ProfileMeta meta;
    if (auto it = j.find("name"); it != j.end() && it->is_string()) meta.name = it->get<std::string>();
    if (auto it = j.find("source"); it != j.end() && it->is_string()) meta.source = parse_source(it->get<std::string>());
    if (auto it = j.find("date"); it != j.end() && it->is_string()) meta.snapshot_date = parse_date(it->get<std::string>(), 0);
    std::vector<Count> raw;
    for (const auto& v : j["citations"]) {
        if (!v.is_number_integer()) throw ParseError(0, "citation entries must be integers");
        raw.push_back(v.get<Count>());
    }
    return CitationProfile::normalize(std::move(raw), std::move(meta));
}

}  // namespace detail

inline CitationProfile load_profile(std::istream& in, Format format) {
    switch (format) {
        case Format::lines: return detail::load_lines(in);
        case Format::csv: return detail::load_csv(in);
        case Format::json: return detail::load_json(in);
    }
    return {};
}

inline Format format_for_path(std::string_view path) {
    auto ends_with = [&](std::string_view ext) { return path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext; };
    if (ends_with(".json")) return Format::json;
    if (ends_with(".csv")) return Format::csv;
    return Format::lines;
}

}  // namespace citest

#include "kmrank/text_io.hpp"

#include <charconv>
#include <string>

#include "kmrank/error.hpp"

namespace kmrank {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::NoSuchDecomposition: return "NoSuchDecomposition";
        case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorCode::InvalidSequence: return "InvalidSequence";
        case ErrorCode::InsertionUnderflow: return "InsertionUnderflow";
        case ErrorCode::EmptyPartition: return "EmptyPartition";
        case ErrorCode::RankTooLarge: return "RankTooLarge";
        case ErrorCode::RankTooSmall: return "RankTooSmall";
        case ErrorCode::ZeroWidthRectangle: return "ZeroWidthRectangle";
        case ErrorCode::NotInImage: return "NotInImage";
        case ErrorCode::UnknownIdentity: return "UnknownIdentity";
        case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
        case ErrorCode::ImpracticalOrder: return "ImpracticalOrder";
        case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

std::string to_text(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int part : p.parts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(part);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        const auto first = s.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos) return std::string_view{};
        const auto last = s.find_last_not_of(" \t\r\n");
        return s.substr(first, last - first + 1);
    };
    text = trim(text);
    if (text == "-") return Partition{};
    if (text.empty()) fail(ErrorCode::InvalidPartition, "empty partition text (use '-' for the empty partition)");

    // Parts are separated by commas or whitespace; a comma needs a part on
    // each side.
    std::vector<int> parts;
    auto read_part = [&](std::string_view token) {
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 0)
            fail(ErrorCode::InvalidPartition, "malformed part '" + std::string(token) + "'");
        parts.push_back(value);
    };
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto field = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        if (field.empty()) read_part(field);
        while (!field.empty()) {
            const auto gap = field.find_first_of(" \t");
            read_part(field.substr(0, gap));
            field = gap == std::string_view::npos ? std::string_view{} : trim(field.substr(gap));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition::from_multiset(std::move(parts));
}

nlohmann::json to_json(const DurfeeDecomposition& d) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& s : d.sides) sides.push_back(to_text(s));
    return {{"m", d.m}, {"k", d.k()}, {"widths", d.widths}, {"sides", sides}, {"below", to_text(d.below)}};
}

DurfeeDecomposition decomposition_from_json(const nlohmann::json& j) {
    try {
        DurfeeDecomposition d;
        d.m = j.at("m").get<int>();
        d.widths = j.at("widths").get<std::vector<int>>();
        for (const auto& s : j.at("sides")) d.sides.push_back(parse_partition(s.get<std::string>()));
        d.below = parse_partition(j.at("below").get<std::string>());
        if (j.contains("k") && j.at("k").get<int>() != d.k())
            fail(ErrorCode::InvalidDecomposition, "k does not match the number of widths");
        return d;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidDecomposition, std::string("malformed decomposition JSON: ") + e.what());
    }
}

nlohmann::json to_json(const SelectionTrace& t) {
    return {{"rows", t.rows}, {"parts", t.parts}, {"total", t.total}};
}

nlohmann::json to_json(const PartitionSequence& s) {
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& p : s.seq) seq.push_back(to_text(p));
    return {{"seq", seq}, {"bounds", s.bounds.p}};
}

nlohmann::json to_json(const RankStats& s) {
    return {{"widths", s.widths}, {"a", s.a}, {"b", s.b}, {"r", s.r}};
}

nlohmann::json to_json(const CensusTable& t) {
    nlohmann::json rows = nlohmann::json::object();
    for (const auto& [r, c] : t.rows) rows[std::to_string(r)] = c;
    return {{"n", t.n}, {"k", t.k}, {"m", t.m}, {"total", t.total()}, {"rows", rows}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j = {
        {"identity", r.identity.name},
        {"params", {{"k", r.identity.k}, {"a", r.identity.a}, {"m", r.identity.m}, {"r", r.identity.r}}},
        {"order", r.order},
        {"success", r.success},
        {"lhs", r.lhs_label},
        {"rhs", r.rhs_label},
    };
    if (r.mismatch_index) {
        j["mismatch"] = {{"index", *r.mismatch_index}, {"lhs_value", r.lhs_value}, {"rhs_value", r.rhs_value}};
    }
    return j;
}

}  // namespace kmrank

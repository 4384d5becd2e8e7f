#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kmrank/census.hpp"
#include "kmrank/durfee.hpp"
#include "kmrank/partition.hpp"
#include "kmrank/qseries.hpp"
#include "kmrank/rank.hpp"
#include "kmrank/select_insert.hpp"

namespace kmrank {

/// Text form: comma-separated parts ("5,5,4,1"); the empty partition is "-".
std::string to_text(const Partition& p);
/// Parts may be separated by commas or whitespace and given in any order;
/// zeros are dropped.
/// Throws InvalidPartition on malformed input.
Partition parse_partition(std::string_view text);

nlohmann::json to_json(const DurfeeDecomposition& d);
DurfeeDecomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SelectionTrace& t);
nlohmann::json to_json(const PartitionSequence& s);
nlohmann::json to_json(const RankStats& s);
nlohmann::json to_json(const CensusTable& t);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace kmrank

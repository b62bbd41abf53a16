#pragma once

#include "subpart/analyze.hpp"
#include "subpart/hstats.hpp"
#include "subpart/oracle.hpp"
#include "subpart/partition.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace subpart {

enum class Format { Text, Json };

/// Text partition document:
///
///     version 1
///     p 2
///     e 1
///     q 2
///     modulus 0 1
///     n 4
///     member 1 0 0 1 | 0 1 1 1
///
/// One `member` line per subspace, its RREF rows separated by `|`, entries
/// as field element codes. Lines starting with `#` are ignored.
std::string write_partition(const SubspacePartition& p, Format format = Format::Text);
/// Accepts either format (JSON if the first non-blank character is `{`).
/// Member bases are re-reduced; a dependent basis is a parse error.
SubspacePartition read_partition(std::string_view document);

SubspacePartition read_partition_file(const std::string& path);
void write_partition_file(const std::string& path, const SubspacePartition& p, Format format = Format::Text);

/// "[3^8,2^1,1^4]" (any order, spaces allowed).
PartitionType parse_type(std::string_view s);

nlohmann::json to_json(const SubspacePartition& p);
nlohmann::json to_json(const PartitionType& t);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const HedenLehmannReport& r);
nlohmann::json to_json(const SizeIdentityReport& r);
nlohmann::json to_json(const AlphaContext& a);
nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SupertailReport& r);
nlohmann::json to_json(const Lemma31Report& r);
nlohmann::json to_json(const Corollary16Report& r);
nlohmann::json to_json(const ConjectureReport& r);

std::string to_text(const SupertailReport& r);
std::string to_text(const ConjectureReport& r);

}  // namespace subpart

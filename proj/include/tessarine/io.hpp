#pragma once

// JSON forms of the library types. A matrix pair is
//   {"n": 2, "A": [[[re, im], ...], ...], "B": [[[re, im], ...], ...]}
// and a scalar {"p": [re, im], "q": [re, im]}. Doubles are written with
// round-trip precision, so parse(serialize(m)) == m bit for bit.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tessarine/explorer.hpp"

namespace tess::io {

using nlohmann::json;

json to_json(const DoubleComplex& x);
DoubleComplex scalar_from_json(const json& j);

json to_json(const CMatrix& a);
CMatrix matrix_from_json(const json& j, Eigen::Index n);

json to_json(const DCMatrix& m);
/// Throws ParseError on malformed input, non-finite entries, or dimensions
/// that disagree with "n".
DCMatrix pair_from_json(const json& j);

DCMatrix parse_pair(std::string_view text);
DCMatrix read_pair(const std::filesystem::path& path);
std::string serialize_pair(const DCMatrix& m);

json to_json(const std::vector<linalg::JordanBlock>& blocks);
json to_json(const ExistenceReport& report);
json to_json(const PenroseResult& check);
json to_json(const explore::TrialRecord& record);
json to_json(const explore::ScanSummary& summary, const std::vector<explore::TrialRecord>& records);

}  // namespace tess::io

#pragma once

// JSON and CSV forms for every report type, plus atomic file output.
//
// Format notes:
//   - Rationals are "num/den" strings, always with the slash, lowest terms.
//   - Integers are JSON numbers when they fit in 64 bits, else decimal
//     strings; readers accept both.
//   - Object keys are emitted sorted, reports carry no timestamps or
//     floats, so equal inputs give byte-identical files.

#include "diogon/bounds.hpp"
#include "diogon/circle_construct.hpp"
#include "diogon/ngon_search.hpp"
#include "diogon/set.hpp"
#include "diogon/trigon_laws.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace diogon {

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadScalar& s);
QuadScalar quadscalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadPoint& p);
QuadPoint quadpoint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiophantineSet& s);
// Also accepts a witness object (same point/matrix keys, extras ignored).
DiophantineSet set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuasiDiophantineSet& s);

nlohmann::json to_json(const PythagoreanAngle& a);

nlohmann::json to_json(const ApexCandidate& c);
ApexCandidate apex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchReport& rep);
SearchReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& rep);

// dump with 2-space indent, sorted keys, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

// Write-then-rename so readers never observe a half-written file. Creates
// parent directories as needed.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_text(const std::filesystem::path& path);

// CSV: header line plus one row per instance, rationals as exact strings.
std::string lemma1_csv(const std::vector<Lemma1Row>& rows);
std::string task_csv(const std::vector<TaskRow>& rows);
std::string witness_summary_csv(const SearchReport& rep);

}  // namespace diogon

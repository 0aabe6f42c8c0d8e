#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "x0plus/ffcount.hpp"
#include "x0plus/genus.hpp"
#include "x0plus/genus2.hpp"
#include "x0plus/quadform.hpp"
#include "x0plus/sieve.hpp"

namespace x0plus {

enum class Format { Tsv, Json };

using Json = nlohmann::ordered_json;

Json to_json(const Classification& c);
Json to_json(const GenusReport& g);
Json to_json(const CountReport& c);
Json to_json(const QuadricClassification& q);
Json to_json(const Genus2Verdict& v);
Json to_json(const AdmissiblePairCandidate& p);
Json to_json(const MainTable& t);

// TSV header line plus rows; every renderer ends with a newline
std::string render_classifications(const std::vector<Classification>& v, Format f);
std::string render_genus(const GenusReport& g, Format f);
std::string render_count(const CountReport& c, Format f);
std::string render_quadric(const QuadricClassification& q, Format f);
std::string render_genus2(const Genus2Verdict& v, Format f);
std::string render_sieve(i64 n, const std::vector<AdmissiblePairCandidate>& v, Format f);
// TSV: "genus<TAB>levels" rows, a blank line, then the genus-2, unresolved and discrepancy sections
std::string render_table(const MainTable& t, Format f);

}  // namespace x0plus

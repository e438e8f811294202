/// @file report.hpp
/// @brief JSON and CSV forms of HK reports and series records.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "adehk/catalog.hpp"
#include "adehk/hk.hpp"
#include "adehk/rational_series.hpp"
#include "adehk/series_engine.hpp"

namespace adehk {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const FrobeniusClass& fc);
FrobeniusClass frobenius_class_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const HkReport& r);
/// Throws ParseError on a missing or malformed field.
HkReport hk_report_from_json(const Json& j);

struct SeriesRecord {
  std::string ring;
  long a = 1, b = 1, c = 1;
  std::uint32_t p = 2;
  RationalSeries series;
  Classification classification;
};

Json to_json(const SeriesRecord& s);
SeriesRecord series_record_from_json(const Json& j);

bool operator==(const FrobeniusClass& a, const FrobeniusClass& b);
bool operator==(const Classification& a, const Classification& b);
bool operator==(const HkReport& a, const HkReport& b);
bool operator==(const SeriesRecord& a, const SeriesRecord& b);

/// ring,p,e,value,oracle,class,twist,route
std::string csv_header();
std::string csv_row(const HkReport& r);
/// Short class label without commas: M_8, R(-15)+R(-16), Syz(X;Y^2;Z), A.
std::string class_label(const FrobeniusClass& fc);

}  // namespace adehk

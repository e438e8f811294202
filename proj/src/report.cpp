#include "adehk/report.hpp"

#include "adehk/error.hpp"

namespace adehk {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("report: bad field '") + key + "': " + ex.what());
  }
}

const char* fc_kind_name(FrobeniusClass::Kind k) {
  switch (k) {
    case FrobeniusClass::Kind::Indecomposable: return "indecomposable";
    case FrobeniusClass::Kind::FreeSplit: return "free-split";
    case FrobeniusClass::Kind::Unindexed: return "unindexed";
    case FrobeniusClass::Kind::DelegateA: return "type-a";
  }
  return "";
}

FrobeniusClass::Kind fc_kind_parse(const std::string& s) {
  if (s == "indecomposable") return FrobeniusClass::Kind::Indecomposable;
  if (s == "free-split") return FrobeniusClass::Kind::FreeSplit;
  if (s == "unindexed") return FrobeniusClass::Kind::Unindexed;
  if (s == "type-a") return FrobeniusClass::Kind::DelegateA;
  throw ParseError("report: unknown class kind '" + s + "'");
}

const char* cl_kind_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Indecomposable: return "indecomposable";
    case Classification::Kind::FreeSplit: return "free-split";
    case Classification::Kind::Unknown: return "unknown";
  }
  return "";
}

Classification::Kind cl_kind_parse(const std::string& s) {
  if (s == "indecomposable") return Classification::Kind::Indecomposable;
  if (s == "free-split") return Classification::Kind::FreeSplit;
  if (s == "unknown") return Classification::Kind::Unknown;
  throw ParseError("report: unknown classification kind '" + s + "'");
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw ParseError("report: expected an integer, got " + j.dump());
}

Json to_json(const FrobeniusClass& fc) {
  Json j;
  j["kind"] = fc_kind_name(fc.kind);
  j["text"] = fc.str();
  switch (fc.kind) {
    case FrobeniusClass::Kind::Indecomposable:
      j["index"] = fc.index;
      j["twist"] = fc.twist;
      break;
    case FrobeniusClass::Kind::FreeSplit:
      j["m"] = fc.m;
      j["n"] = fc.n;
      break;
    case FrobeniusClass::Kind::Unindexed:
      j["twist"] = fc.twist;
      break;
    case FrobeniusClass::Kind::DelegateA: break;
  }
  if (!fc.representative.empty()) j["representative"] = fc.representative;
  return j;
}

FrobeniusClass frobenius_class_from_json(const Json& j) {
  FrobeniusClass fc;
  fc.kind = fc_kind_parse(get_as<std::string>(j, "kind"));
  if (j.contains("index")) fc.index = get_as<int>(j, "index");
  if (j.contains("twist")) fc.twist = get_as<long>(j, "twist");
  if (j.contains("m")) fc.m = get_as<long>(j, "m");
  if (j.contains("n")) fc.n = get_as<long>(j, "n");
  if (j.contains("representative")) fc.representative = get_as<std::vector<std::string>>(j, "representative");
  return fc;
}

Json to_json(const Classification& c) {
  Json j;
  j["kind"] = cl_kind_name(c.kind);
  j["text"] = c.str();
  if (c.kind == Classification::Kind::Indecomposable) {
    j["index"] = c.index;
    j["shift"] = c.shift;
    if (!c.also_matches.empty()) j["also_matches"] = c.also_matches;
  } else if (c.kind == Classification::Kind::FreeSplit) {
    j["m"] = c.m;
    j["n"] = c.n;
  }
  return j;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.kind = cl_kind_parse(get_as<std::string>(j, "kind"));
  if (j.contains("index")) c.index = get_as<int>(j, "index");
  if (j.contains("shift")) c.shift = get_as<long>(j, "shift");
  if (j.contains("also_matches")) c.also_matches = get_as<std::vector<int>>(j, "also_matches");
  if (j.contains("m")) c.m = get_as<long>(j, "m");
  if (j.contains("n")) c.n = get_as<long>(j, "n");
  return c;
}

Json to_json(const HkReport& r) {
  Json j;
  j["ring"] = r.ring;
  j["p"] = r.p;
  j["e"] = r.e;
  j["value"] = bigint_to_json(r.value);
  j["route"] = route_name(r.route);
  j["oracle_value"] = r.oracle_value ? bigint_to_json(*r.oracle_value) : Json(nullptr);
  j["oracle_status"] = r.oracle_status;
  j["class"] = to_json(r.frobenius_class);
  return j;
}

HkReport hk_report_from_json(const Json& j) {
  HkReport r;
  r.ring = get_as<std::string>(j, "ring");
  r.p = get_as<std::uint32_t>(j, "p");
  r.e = get_as<unsigned>(j, "e");
  r.value = bigint_from_json(field(j, "value"));
  r.route = parse_route(get_as<std::string>(j, "route"));
  const Json& ov = field(j, "oracle_value");
  if (!ov.is_null()) r.oracle_value = bigint_from_json(ov);
  r.oracle_status = get_as<std::string>(j, "oracle_status");
  r.frobenius_class = frobenius_class_from_json(field(j, "class"));
  return r;
}

Json to_json(const SeriesRecord& s) {
  Json j;
  j["ring"] = s.ring;
  j["exponents"] = {s.a, s.b, s.c};
  j["p"] = s.p;
  j["series"] = s.series.str();
  j["classification"] = to_json(s.classification);
  return j;
}

SeriesRecord series_record_from_json(const Json& j) {
  SeriesRecord s;
  s.ring = get_as<std::string>(j, "ring");
  const auto ex = get_as<std::vector<long>>(j, "exponents");
  if (ex.size() != 3) throw ParseError("report: 'exponents' needs three entries");
  s.a = ex[0];
  s.b = ex[1];
  s.c = ex[2];
  s.p = get_as<std::uint32_t>(j, "p");
  s.series = RationalSeries::parse(get_as<std::string>(j, "series"));
  s.classification = classification_from_json(field(j, "classification"));
  return s;
}

bool operator==(const FrobeniusClass& a, const FrobeniusClass& b) {
  return a.kind == b.kind && a.index == b.index && a.twist == b.twist && a.m == b.m && a.n == b.n &&
         a.representative == b.representative;
}

bool operator==(const Classification& a, const Classification& b) {
  return a.kind == b.kind && a.index == b.index && a.shift == b.shift && a.also_matches == b.also_matches &&
         a.m == b.m && a.n == b.n;
}

bool operator==(const HkReport& a, const HkReport& b) {
  return a.ring == b.ring && a.p == b.p && a.e == b.e && a.value == b.value && a.route == b.route &&
         a.oracle_value == b.oracle_value && a.oracle_status == b.oracle_status &&
         a.frobenius_class == b.frobenius_class;
}

bool operator==(const SeriesRecord& a, const SeriesRecord& b) {
  return a.ring == b.ring && a.a == b.a && a.b == b.b && a.c == b.c && a.p == b.p &&
         a.series.str() == b.series.str() && a.classification == b.classification;
}

std::string class_label(const FrobeniusClass& fc) {
  switch (fc.kind) {
    case FrobeniusClass::Kind::Indecomposable: return "M_" + std::to_string(fc.index);
    case FrobeniusClass::Kind::FreeSplit:
      return "R(-" + std::to_string(fc.m) + ")+R(-" + std::to_string(fc.n) + ")";
    case FrobeniusClass::Kind::Unindexed: {
      std::string s = "Syz(";
      for (std::size_t k = 0; k < fc.representative.size(); ++k) s += (k ? ";" : "") + fc.representative[k];
      return s + ")";
    }
    case FrobeniusClass::Kind::DelegateA: return "A";
  }
  return "";
}

std::string csv_header() { return "ring,p,e,value,oracle,class,twist,route"; }

std::string csv_row(const HkReport& r) {
  std::string oracle;
  if (r.oracle_value) oracle = r.oracle_value->get_str();
  else if (r.oracle_status == "skipped") oracle = "skipped";
  const bool twisted = r.frobenius_class.kind == FrobeniusClass::Kind::Indecomposable ||
                       r.frobenius_class.kind == FrobeniusClass::Kind::Unindexed;
  return r.ring + "," + std::to_string(r.p) + "," + std::to_string(r.e) + "," + r.value.get_str() + "," + oracle + "," +
         class_label(r.frobenius_class) + "," + (twisted ? std::to_string(r.frobenius_class.twist) : "") + "," +
         route_name(r.route);
}

}  // namespace adehk

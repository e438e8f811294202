#include "doctest.h"
#include "gen.hpp"

#include "adehk/error.hpp"
#include "adehk/field.hpp"
#include "adehk/report.hpp"

using namespace adehk;

namespace {

const std::vector<AdeRingSpec>& rings() {
  static const std::vector<AdeRingSpec> r{make_ring(Family::E6), make_ring(Family::E7), make_ring(Family::E8),
                                          make_ring(Family::A, 2), make_ring(Family::D, 3), make_ring(Family::D, 4)};
  return r;
}

HkReport reparse(const HkReport& r) { return hk_report_from_json(Json::parse(to_json(r).dump(2))); }

}  // namespace

TEST_CASE("HK report JSON") {
  const HkReport r = hk_report(make_ring(Family::E8), 7, 1, true);
  const Json j = to_json(r);
  CHECK(j["ring"] == "E8");
  CHECK(j["value"] == 96);
  CHECK(j["oracle_value"] == 96);
  CHECK(j["oracle_status"] == "verified");
  CHECK(j["route"] == "closed-form");
  CHECK(j["class"]["kind"] == "indecomposable");
  CHECK(j["class"]["index"] == 8);
  CHECK(j["class"]["twist"] == 90);
  CHECK(reparse(r) == r);
  const HkReport unverified = hk_report(make_ring(Family::E8), 7, 1, false);
  CHECK(to_json(unverified)["oracle_value"].is_null());
  CHECK(reparse(unverified) == unverified);
}

TEST_CASE("values beyond 64 bits travel as decimal strings") {
  const HkReport r = hk_report(make_ring(Family::E8), 97, 9, false);
  const Json j = to_json(r);
  CHECK(j["value"].is_string());
  CHECK(BigInt(j["value"].get<std::string>()) == r.value);
  CHECK(reparse(r) == r);
  CHECK(bigint_from_json(bigint_to_json(BigInt(-5))) == BigInt(-5));
  CHECK_THROWS_AS(bigint_from_json(Json("12x")), ParseError);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(hk_report_from_json(Json::parse("{}")), ParseError);
  Json j = to_json(hk_report(make_ring(Family::E8), 7, 1, false));
  j["route"] = "fast";
  CHECK_THROWS_AS(hk_report_from_json(j), ParseError);
}

TEST_CASE("series record JSON") {
  const AdeRingSpec e8 = make_ring(Family::E8);
  const HypersurfaceSpec h = HypersurfaceSpec::from_ring(e8);
  SeriesRecord s{"E8", 7, 7, 7, 7, syzygy_series({h, 7, 7, 7}, 7), {}};
  s.classification = classify(s.series, ring_series(h), catalog_series(e8, 7));
  const Json j = to_json(s);
  CHECK(j["exponents"] == Json::array({7, 7, 7}));
  CHECK(j["series"] == "t^112+t^115+t^117+t^120 ; [10,6]");
  CHECK(j["classification"]["kind"] == "indecomposable");
  CHECK(series_record_from_json(Json::parse(j.dump())) == s);
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() == "ring,p,e,value,oracle,class,twist,route");
  CHECK(csv_row(hk_report(make_ring(Family::E8), 7, 1, true)) == "E8,7,1,96,96,M_8,90,closed-form");
  CHECK(csv_row(hk_report(make_ring(Family::E8), 2, 1, false)) == "E8,2,1,8,,R(-30)+R(-32),,closed-form");
  CHECK(csv_row(hk_report(make_ring(Family::E8), 7, 2, true, HkRoute::ClosedForm, 10)) ==
        "E8,7,2,4781,skipped,M_1,744,closed-form");
  CHECK(csv_row(hk_report(make_ring(Family::A, 1), 3, 1, false)) == "A:n=1,3,1,13,,A,,closed-form");
}

TEST_CASE("property: reports survive a JSON round trip") {
  gen::Rng rng(0x4e90);
  for (int trial = 0; trial < 150; ++trial) {
    const AdeRingSpec& ring = rings()[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rings().size()) - 1))];
    std::uint32_t p = 0;
    while (!is_prime(p)) p = static_cast<std::uint32_t>(rng.uniform(2, 60));
    const unsigned e = static_cast<unsigned>(rng.uniform(1, 3));
    const HkRoute route = rng.coin() ? HkRoute::ClosedForm : HkRoute::SyzygyFormula;
    const HkReport r = hk_report(ring, p, e, rng.coin(), route, 20000);
    REQUIRE_MESSAGE(reparse(r) == r, ring.selector() << " p=" << p << " e=" << e);
  }
}

#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "davenport/fine.hpp"
#include "davenport/identities.hpp"
#include "davenport/report_io.hpp"

using namespace davenport;

namespace {

IdentityReport sample_report() {
    IdentityReport rep;
    rep.identity = "thm12";
    rep.params.emplace_back("fn", "moebius");
    rep.params.emplace_back("x", "5/2");
    rep.lhs = 0.1 + 0.2; // deliberately not a round double
    rep.rhs = 0.3;
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    rep.bound = 1e-12;
    rep.bound_is_heuristic = false;
    rep.pass = true;
    return rep;
}

FineScan sample_scan() {
    FineScan scan;
    FineReport a;
    a.family = "d2";
    a.base_fn = "liouville";
    a.N = 3;
    a.coprime_ok = true;
    a.value = 1.25e-10;
    a.bound = 1.7e-6;
    a.method = "collapsed";
    FineReport b = a;
    b.N = 4;
    b.coprime_ok = false;
    b.value = -0.4375;
    scan.reports = {a, b};
    scan.coprime_total = 1;
    scan.coprime_small = 1;
    scan.noncoprime_total = 1;
    scan.noncoprime_small = 0;
    return scan;
}

} // namespace

TEST_CASE("identity reports serialize to parseable JSON with the full field set") {
    const std::string text = reports_json({sample_report()});
    const nlohmann::json doc = nlohmann::json::parse(text);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    const nlohmann::json& j = doc[0];
    const std::vector<std::string> keys = {"identity", "params",  "lhs", "rhs",
                                           "residual", "bound",   "bound_is_heuristic", "pass"};
    for (const std::string& k : keys) CHECK(j.contains(k));
    CHECK(j.size() == keys.size());
    CHECK(j["identity"] == "thm12");
    CHECK(j["params"]["fn"] == "moebius");
    CHECK(j["params"]["x"] == "5/2");
    CHECK(j["pass"] == true);
    CHECK(j["bound_is_heuristic"] == false);
    // nlohmann serializes doubles round-trip exact.
    CHECK(j["lhs"].get<double>() == 0.1 + 0.2);
}

TEST_CASE("identity report CSV: header, row shape, round-trip exact numbers") {
    const std::string text = reports_csv({sample_report()});
    const std::string header = text.substr(0, text.find('\n'));
    CHECK(header == "identity,lhs,rhs,residual,bound,bound_is_heuristic,pass,params");

    const std::string row = text.substr(text.find('\n') + 1);
    CHECK(row.substr(0, 6) == "thm12,");
    const std::size_t comma = row.find(',');
    const std::string lhs_field = row.substr(comma + 1, row.find(',', comma + 1) - comma - 1);
    CHECK(std::strtod(lhs_field.c_str(), nullptr) == 0.1 + 0.2);
    CHECK(row.find("fn=moebius;x=5/2") != std::string::npos);
}

TEST_CASE("identity report table lines carry the verdict prefix") {
    IdentityReport fail = sample_report();
    fail.pass = false;
    const std::string text = reports_table({sample_report(), fail});
    CHECK(text.substr(0, 5) == "PASS ");
    CHECK(text.find("\nFAIL ") != std::string::npos);
    CHECK(text.find("thm12[fn=moebius;x=5/2]") != std::string::npos);
}

TEST_CASE("scan serialization: JSON tallies and CSV header") {
    const FineScan scan = sample_scan();
    const std::string jtext = fine_json(scan);
    const nlohmann::json doc = nlohmann::json::parse(jtext);
    CHECK(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["family"] == "d2");
    CHECK(doc["reports"][0]["N"] == 3);
    CHECK(doc["reports"][1]["coprime_ok"] == false);
    CHECK(doc["coprime_total"] == 1);
    CHECK(doc["coprime_small"] == 1);
    CHECK(doc["noncoprime_total"] == 1);
    CHECK(doc["noncoprime_small"] == 0);

    const std::string ctext = fine_csv(scan);
    CHECK(ctext.substr(0, ctext.find('\n')) ==
          "family,base_fn,N,coprime_ok,value,bound,bound_is_heuristic,method");
    CHECK(ctext.find("d2,liouville,3,true,") != std::string::npos);
    CHECK(ctext.find("d2,liouville,4,false,") != std::string::npos);

    const std::string ttext = fine_table(scan);
    CHECK(ttext.find("coprime small/total: 1/1") != std::string::npos);
    CHECK(ttext.find("noncoprime small/total: 0/1") != std::string::npos);
}

TEST_CASE("probe serialization keeps the exploratory column set") {
    ProbeRow row;
    row.x = Rational(100, 1);
    row.D = 0.016860916904102;
    row.ratio = row.D * 100.0;
    row.log_comparison = row.D * 200.0 / std::log(100.0);

    const std::string ctext = probe_csv({row});
    CHECK(ctext.substr(0, ctext.find('\n')) == "x,D,ratio,log_comparison");
    CHECK(ctext.find("100,") == ctext.find('\n') + 1);

    const nlohmann::json doc = nlohmann::json::parse(probe_json({row}));
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["x"] == "100");
    CHECK(doc[0]["D"].get<double>() == row.D);
    CHECK(doc[0]["ratio"].get<double>() == row.ratio);
    CHECK(doc[0]["log_comparison"].get<double>() == row.log_comparison);

    const std::string ttext = probe_table({row});
    CHECK(ttext.find("x=100 ") == 0);
    CHECK(ttext.find("D*2x/logx=") != std::string::npos);

    CHECK(probe_json({}) == "[]\n");
    CHECK(probe_csv({}) == "x,D,ratio,log_comparison\n");
}

TEST_CASE("identical inputs serialize to identical bytes") {
    const std::vector<IdentityReport> reps = {sample_report(), sample_report()};
    CHECK(reports_json(reps) == reports_json(reps));
    CHECK(reports_csv(reps) == reports_csv(reps));
    const FineScan scan = sample_scan();
    CHECK(fine_json(scan) == fine_json(scan));
}

#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "slopelab/primes.hpp"
#include "slopelab/record_io.hpp"

using namespace slopelab;

namespace {

using SM = std::vector<SlopeMult>;

}  // namespace

TEST_SUITE("record_io") {

TEST_CASE("round trip on computed records") {
    for (long p : primes_between(2, 13)) {
        for (int k = 12; k <= 70; k += 2) {
            const auto r = compute_record(p, k);
            const auto text = serialize_record(r);
            CHECK(parse_record(text) == r);
            CHECK(serialize_record(parse_record(text)) == text);
            CHECK(record_tool_version(text) == kToolVersion);
        }
    }
}

TEST_CASE("round trip keeps the degenerate branch") {
    const auto r = record_from_tp_slopes(5, 12, SM{{Rational(11, 2), 1}});
    CHECK(parse_record(serialize_record(r)) == r);
}

TEST_CASE("field order and shape") {
    const auto j = to_json(compute_record(79, 38));
    std::vector<std::string> keys;
    for (const auto& [key, val] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"p", "k", "dim", "tp_slopes", "u_slopes", "ssing", "ulmer_ok",
                                           "exceptional", "fractional", "tool_version"});
    CHECK(j["ssing"][1]["num"] == 1);
    CHECK(j["ssing"][1]["den"] == 37);
    CHECK(j["ssing"][1]["mult"] == 1);
}

TEST_CASE("malformed records are rejected") {
    auto j = nlohmann::json::parse(serialize_record(compute_record(79, 38)));
    auto bad = j;
    bad["ssing"][1]["den"] = 0;
    CHECK_THROWS_AS(record_from_json(bad), RecordFormatError);
    bad = j;
    bad["ssing"][1]["num"] = 2;
    bad["ssing"][1]["den"] = 74;
    CHECK_THROWS_AS(record_from_json(bad), RecordFormatError);
    bad = j;
    bad["ssing"][1]["den"] = -37;
    CHECK_THROWS_AS(record_from_json(bad), RecordFormatError);
    bad = j;
    bad["u_slopes"][0]["mult"] = 0;
    CHECK_THROWS_AS(record_from_json(bad), RecordFormatError);
    bad = j;
    bad.erase("dim");
    CHECK_THROWS_AS(record_from_json(bad), RecordFormatError);
    CHECK_THROWS_AS(parse_record("{not json"), RecordFormatError);
    CHECK(record_tool_version("{}").empty());
}

TEST_CASE("text form") {
    const auto text = format_record_text(compute_record(79, 38));
    CHECK(text.find("slopes: 0, 1\n") != std::string::npos);
    CHECK(text.find("exceptional: 1\n") != std::string::npos);
    CHECK(text.find("fractional: none\n") != std::string::npos);
    CHECK(join_slopes({}) == "none");
    CHECK(join_slopes(SM{{Rational(1, 2), 2}}) == "1/2, 1/2");
}

TEST_CASE("distribution CSV") {
    Histogram h{4, {Rational(1, 2), 0, 0, Rational(1, 2)}};
    std::ostringstream os;
    write_distribution_csv(os, h);
    CHECK(os.str() ==
          "bin_lo,bin_hi,mass_num,mass_den,mass_decimal\n"
          "0,1/4,1,2,0.5000000000\n"
          "1/4,1/2,0,1,0.0000000000\n"
          "1/2,3/4,0,1,0.0000000000\n"
          "3/4,1,1,2,0.5000000000\n");
}

}

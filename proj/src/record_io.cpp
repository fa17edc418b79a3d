#include "slopelab/record_io.hpp"

#include <numeric>
#include <sstream>

namespace slopelab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json slopes_to_json(const std::vector<SlopeMult>& slopes) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : slopes) {
        ordered_json o;
        o["num"] = s.slope.num();
        o["den"] = s.slope.den();
        o["mult"] = s.mult;
        arr.push_back(std::move(o));
    }
    return arr;
}

std::vector<SlopeMult> slopes_from_json(const json& arr, const char* field) {
    if (!arr.is_array()) throw RecordFormatError(std::string("record field '") + field + "' must be an array");
    std::vector<SlopeMult> out;
    for (const auto& o : arr) {
        const auto num = o.at("num").get<std::int64_t>();
        const auto den = o.at("den").get<std::int64_t>();
        const auto mult = o.at("mult").get<std::int64_t>();
        if (den <= 0 || std::gcd(num, den) != 1) {
            throw RecordFormatError(std::string("record field '") + field + "': rational " + std::to_string(num) + "/" +
                                    std::to_string(den) + " is not in lowest terms with positive denominator");
        }
        if (mult <= 0) throw RecordFormatError(std::string("record field '") + field + "': multiplicity must be positive");
        out.push_back({Rational(num, den), mult});
    }
    return out;
}

}  // namespace

ordered_json to_json(const SlopeRecord& r) {
    ordered_json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["dim"] = r.dim;
    j["tp_slopes"] = slopes_to_json(r.tp_slopes);
    j["u_slopes"] = slopes_to_json(r.u_slopes);
    j["ssing"] = slopes_to_json(r.ssing);
    j["ulmer_ok"] = r.ulmer_ok;
    j["exceptional"] = slopes_to_json(r.exceptional);
    j["fractional"] = slopes_to_json(r.fractional);
    j["tool_version"] = kToolVersion;
    return j;
}

SlopeRecord record_from_json(const json& j) {
    try {
        SlopeRecord r;
        r.p = j.at("p").get<long>();
        r.k = j.at("k").get<int>();
        r.dim = j.at("dim").get<int>();
        r.tp_slopes = slopes_from_json(j.at("tp_slopes"), "tp_slopes");
        r.u_slopes = slopes_from_json(j.at("u_slopes"), "u_slopes");
        r.ssing = slopes_from_json(j.at("ssing"), "ssing");
        r.ulmer_ok = j.at("ulmer_ok").get<bool>();
        r.exceptional = slopes_from_json(j.at("exceptional"), "exceptional");
        r.fractional = slopes_from_json(j.at("fractional"), "fractional");
        return r;
    } catch (const json::exception& e) {
        throw RecordFormatError(std::string("malformed record: ") + e.what());
    }
}

std::string serialize_record(const SlopeRecord& r) { return to_json(r).dump(2) + "\n"; }

SlopeRecord parse_record(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw RecordFormatError(std::string("record is not valid JSON: ") + e.what());
    }
    return record_from_json(j);
}

std::string record_tool_version(std::string_view text) {
    try {
        return json::parse(text).at("tool_version").get<std::string>();
    } catch (const json::exception&) {
        return {};
    }
}

void write_distribution_csv(std::ostream& os, const Histogram& h) {
    os << "bin_lo,bin_hi,mass_num,mass_den,mass_decimal\n";
    for (int i = 0; i < h.bins; ++i) {
        const Rational lo(i, h.bins);
        const Rational hi(i + 1, h.bins);
        const Rational& m = h.mass[static_cast<std::size_t>(i)];
        os << lo.str() << ',' << hi.str() << ',' << m.num() << ',' << m.den() << ',' << m.rounded_decimal(10) << '\n';
    }
}

std::string join_slopes(const std::vector<SlopeMult>& slopes) {
    const auto flat = expand(slopes);
    if (flat.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (i > 0) out += ", ";
        out += flat[i].str();
    }
    return out;
}

std::string format_record_text(const SlopeRecord& r) {
    std::ostringstream os;
    os << "p: " << r.p << '\n'
       << "k: " << r.k << '\n'
       << "dim: " << r.dim << '\n'
       << "slopes: " << join_slopes(r.tp_slopes) << '\n'
       << "u_slopes: " << join_slopes(r.u_slopes) << '\n'
       << "ssing: " << join_slopes(r.ssing) << '\n'
       << "ulmer_ok: " << (r.ulmer_ok ? "true" : "false") << '\n'
       << "exceptional: " << join_slopes(r.exceptional) << '\n'
       << "fractional: " << join_slopes(r.fractional) << '\n';
    return os.str();
}

}  // namespace slopelab

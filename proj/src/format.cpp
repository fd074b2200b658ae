#include <padic/format.hpp>

#include <json.hpp>

namespace padic {

std::string encode_record(const ResultRecord& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["p"] = r.p;
    j["method"] = r.method;
    if (r.value.is_zero()) {
        j["valuation"] = r.value.abs_precision();
        j["digits"] = std::vector<long>{};
        j["precision"] = 0;
    } else {
        j["valuation"] = r.value.valuation();
        j["digits"] = r.value.digits();
        j["precision"] = r.value.precision();
    }
    j["converged"] = r.converged;
    j["levels"] = r.levels;
    return j.dump();
}

ResultRecord decode_record(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    r.p = j.at("p").get<long>();
    r.method = j.at("method").get<std::string>();
    r.converged = j.at("converged").get<bool>();
    r.levels = j.at("levels").get<long>();
    long val = j.at("valuation").get<long>();
    int prec = j.at("precision").get<int>();
    auto digits = j.at("digits").get<std::vector<long>>();
    if (prec == 0) {
        r.value = PadicNumber::zero(r.p, val);
    } else {
        mpz_class unit = 0;
        mpz_class pw = 1;
        for (long d : digits) {
            unit += d * pw;
            pw *= r.p;
        }
        r.value = PadicNumber::from_parts(r.p, val, unit, prec);
    }
    return r;
}

}  // namespace padic

#include "podles/report.hpp"

#include <cstdio>

namespace podles {

std::string fmt_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string checks_json(const std::vector<ResidualCheck>& checks) {
    std::string out = "[";
    bool first = true;
    for (const auto& c : checks) {
        if (!first)
            out += ",";
        first = false;
        out += "{\"name\":\"" + c.name + "\",\"residual\":" + fmt_g12(c.residual) +
               ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    return out + "]";
}

} // namespace

std::string to_json(const IdentityReport& r) {
    std::string out = "{\"n\":" + std::to_string(r.n) + ",\"q\":\"" + format_rational(r.q) +
                      "\",\"s\":\"" + format_rational(r.s) + "\",\"identities\":[";
    bool first = true;
    for (const auto& c : r.identities) {
        if (!first)
            out += ",";
        first = false;
        out += "{\"name\":\"" + c.name + "\",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    return out + "]}";
}

std::string to_json(const BundleReport& r) {
    return "{\"N\":" + std::to_string(r.N) + ",\"q\":\"" + format_rational(r.q) + "\",\"s\":\"" +
           format_rational(r.s) + "\",\"checks\":" + checks_json(r.checks) + "}";
}

std::string to_json(const DiscReport& r) {
    return "{\"q\":\"" + format_rational(r.q) + "\",\"s\":\"" + format_rational(r.s) +
           "\",\"checks\":" + checks_json(r.checks) + "}";
}

std::string to_json(const PairingReport& r) {
    return "{\"value\":" + fmt_g12(r.value) + ",\"tail_bound\":" + fmt_g12(r.tail_bound) +
           ",\"rounded\":" + std::to_string(r.rounded) + ",\"gap\":" + fmt_g12(r.gap) +
           ",\"certified\":" + (r.certified ? "true" : "false") + "}";
}

} // namespace podles

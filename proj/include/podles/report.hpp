#pragma once

#include <string>
#include <vector>

#include "podles/params.hpp"

namespace podles {

/* Fixed 12-significant-digit formatting; reports must be byte-stable. */
std::string fmt_g12(double x);

struct IdentityCheck {
    std::string name;
    bool pass;
};

/* Result of the 14-identity suite at one level n. */
struct IdentityReport {
    int n = 0;
    Rational q, s;
    std::vector<IdentityCheck> identities;

    bool all_pass() const {
        for (const auto& c : identities)
            if (!c.pass)
                return false;
        return true;
    }
};

std::string to_json(const IdentityReport& r);

struct ResidualCheck {
    std::string name;
    double residual;
    bool pass;
};

struct BundleReport {
    int N = 0;
    Rational q, s;
    std::vector<ResidualCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

std::string to_json(const BundleReport& r);

struct DiscReport {
    Rational q, s;
    std::vector<ResidualCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

std::string to_json(const DiscReport& r);

/* One pairing number with its certification data. */
struct PairingReport {
    double value = 0.0;
    double tail_bound = 0.0;     // certified bound on the discarded remainder
    long long rounded = 0;
    double gap = 0.0;            // |value - rounded|
    bool certified = false;      // gap + tail_bound < 1/2
    bool heuristic_tail = false; // tail_bound from ratio estimation, not a certificate
};

std::string to_json(const PairingReport& r);

} // namespace podles

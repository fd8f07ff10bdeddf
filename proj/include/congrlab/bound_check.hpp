#pragma once

// BoundCheck: the uniform comparison record emitted by every theorem/lemma
// check. Verdict convention: pass iff lhs <= gate_constant * rhs, where rhs
// already carries any p^slack factor. Lower-bound checks store the bound in
// lhs and the measured quantity in rhs so the same convention applies.

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace congrlab {

enum class Verdict { pass, fail, report_only };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "report-only";
    }
}

// 9 significant digits, the CSV float format.
inline std::string fmt_g9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

struct BoundCheck {
    std::string name;
    std::uint64_t p = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0; // lhs / rhs when rhs > 0, else 0
    double slack_exponent = 0.0;
    double gate_constant = 1.0;
    Verdict verdict = Verdict::report_only;
    std::vector<std::pair<std::string, std::string>> params;

    BoundCheck& with(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    BoundCheck& with(std::string key, std::uint64_t value) {
        return with(std::move(key), std::to_string(value));
    }
    BoundCheck& with(std::string key, long long value) {
        return with(std::move(key), std::to_string(value));
    }
    BoundCheck& with(std::string key, double value) {
        return with(std::move(key), fmt_g9(value));
    }
};

inline BoundCheck make_check(std::string name, std::uint64_t p, double lhs, double rhs,
                             double slack, double gate) {
    BoundCheck c;
    c.name = std::move(name);
    c.p = p;
    c.lhs = lhs;
    c.rhs = rhs;
    c.ratio = rhs > 0 ? lhs / rhs : 0.0;
    c.slack_exponent = slack;
    c.gate_constant = gate;
    c.verdict = lhs <= gate * rhs ? Verdict::pass : Verdict::fail;
    return c;
}

// For checks whose verdict is decided by exact integer/rational arithmetic
// at the call site, or that are informational only.
inline BoundCheck make_check_verdict(std::string name, std::uint64_t p, double lhs, double rhs,
                                     double slack, double gate, Verdict v) {
    BoundCheck c = make_check(std::move(name), p, lhs, rhs, slack, gate);
    c.verdict = v;
    return c;
}

} // namespace congrlab

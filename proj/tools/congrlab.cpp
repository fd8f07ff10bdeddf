// congrlab: sweep the bound checks over sampled primes and write the
// results as CSV. Exit code 0 when no check fails, 1 when some check fails,
// 2 on usage or configuration errors.
//
// Usage:
//   congrlab <command> [--p-min N] [--p-max N] [--count N] [--seed N]
//            [--slack R] [--gate R] [--eps R] [--budget N] [--out PATH]
//            [--config PATH]
// Commands: theorem1 theorem2 corollary2 coverage4 coverage5 lemmas

#include <cstdio>
#include <cstring>
#include <string>

#include "congrlab/congrlab.hpp"

namespace {

void usage(FILE* to) {
    std::fprintf(to,
                 "usage: congrlab <command> [options]\n"
                 "commands:\n"
                 "  theorem1    J <= H p^o(1) at the corner regimes\n"
                 "  theorem2    T_p(d, lambda, L, p/d) against the trivial and p^(1/3) bounds\n"
                 "  corollary2  solutions of x^x = 1 (mod p) against p^(1/3)\n"
                 "  coverage4   |I . G| coverage and exceptional set\n"
                 "  coverage5   |I . I . I . G| coverage and exceptional set\n"
                 "  lemmas      Lemmas 1-6, the Section 5/6 lemmas, Eq. (5)/(7), Pluennecke\n"
                 "options:\n"
                 "  --p-min N    smallest prime anchor (default 1000)\n"
                 "  --p-max N    largest prime anchor (default 10000)\n"
                 "  --count N    number of sampled primes (default 10)\n"
                 "  --seed N     seed for lambda/s0/L draws (default 1)\n"
                 "  --slack R    slack exponent, rhs *= p^R where marked (default 0.25)\n"
                 "  --gate R     gate constant C in lhs <= C rhs (default 10)\n"
                 "  --eps R      corner-regime epsilon (default 0.05)\n"
                 "  --budget N   per-cell enumeration budget (default 5e7)\n"
                 "  --out PATH   CSV output path (default checks.csv)\n"
                 "  --config PATH  key=value config file; flags override it\n");
}

} // namespace

int main(int argc, char** argv) {
    using namespace congrlab;
    if (argc < 2) {
        usage(stderr);
        return 2;
    }
    if (std::strcmp(argv[1], "--help") == 0 || std::strcmp(argv[1], "-h") == 0) {
        usage(stdout);
        return 0;
    }
    auto cmd = parse_command(argv[1]);
    if (!cmd) {
        std::fprintf(stderr, "congrlab: unknown command '%s'\n", argv[1]);
        usage(stderr);
        return 2;
    }
    try {
        // config file first, then flag overrides
        SweepConfig cfg;
        std::vector<std::string> args(argv + 2, argv + argc);
        for (std::size_t i = 0; i + 1 < args.size(); i += 2)
            if (args[i] == "--config") cfg = load_config_file(args[i + 1]);
        if (auto bad = apply_flags(cfg, args)) {
            std::fprintf(stderr, "congrlab: bad option '%s'\n", bad->c_str());
            usage(stderr);
            return 2;
        }
        validate(cfg);
        std::vector<BoundCheck> checks = run_sweep(*cmd, cfg);
        emit_csv(checks, cfg.out_path);
        std::size_t fails = 0, reports = 0;
        for (const BoundCheck& c : checks) {
            if (c.verdict == Verdict::fail) ++fails;
            if (c.verdict == Verdict::report_only) ++reports;
        }
        std::printf("%s: %zu checks, %zu fail, %zu report-only -> %s\n", to_string(*cmd),
                    checks.size(), fails, reports, cfg.out_path.c_str());
        return fails == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "congrlab: config parse error: %s\n", e.what());
        return 2;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "congrlab: config validation error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "congrlab: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "congrlab: %s\n", e.what());
        return 1;
    }
}

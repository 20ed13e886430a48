// Acceptance gate: one line per criterion, nonzero exit if any fails.
// argv[1] (optional, required only by the CLI criterion) is the path to the
// command-line binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "zbnet/zbnet.hpp"

using namespace zbnet;

namespace {

std::string g_cli_path;

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// ----- small independent oracles (integer box tests, float quadrature) -----

struct IntPoints {
    std::int64_t denom = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
};

double midpoint_l2_oracle(const IntPoints& ip, int g) {
    const double n = static_cast<double>(ip.pts.size());
    double acc = 0;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const std::int64_t t1n = 2 * i + 1, t2n = 2 * j + 1;
            std::int64_t cnt = 0;
            for (const auto& [u, w] : ip.pts)
                if (2 * g * u < t1n * ip.denom && 2 * g * w < t2n * ip.denom) ++cnt;
            const double delta = static_cast<double>(cnt) / n -
                                 (t1n / (2.0 * g)) * (t2n / (2.0 * g));
            acc += delta * delta;
        }
    return acc / (static_cast<double>(g) * g);
}

double dense_linf_oracle(const IntPoints& ip, int g) {
    const double n = static_cast<double>(ip.pts.size());
    double best = 0;
    for (int i = 0; i <= g; ++i)
        for (int j = 0; j <= g; ++j) {
            std::int64_t cnt = 0;
            for (const auto& [u, w] : ip.pts)
                if (g * u < i * ip.denom && g * w < j * ip.denom) ++cnt;
            best = std::max(best, std::abs(static_cast<double>(cnt) / n -
                                           (static_cast<double>(i) / g) *
                                               (static_cast<double>(j) / g)));
        }
    return best;
}

// ----- criteria -----

// Enumerated weight minima of the folded nets clear their guaranteed floors.
bool minima_clear_floor(WeightKind kind, std::string& detail) {
    struct Grid {
        int base, m_max;
    };
    for (const Grid grid : {Grid{2, 6}, Grid{3, 4}}) {
        for (int m = 1; m <= grid.m_max; ++m) {
            const int n = 2 * m;
            const int floor_value = kind == WeightKind::nrt ? m - 1 : 2 * m - 3;
            const MinWeightResult r = min_weight(folded_matrices(grid.base, m, n), kind, n);
            const bool ok = r.exceeds_threshold || r.value > floor_value;
            if (!ok) {
                detail = "b=" + std::to_string(grid.base) + " m=" + std::to_string(m) +
                         " minimum " + std::to_string(r.value);
                return false;
            }
        }
    }
    return true;
}

bool constructions_coincide(std::string& detail) {
    for (int base : {2, 3, 5})
        for (int m = 1; m <= 6; ++m)
            for (int n : {2 * m, 2 * m + 3}) {
                const DigitalNet direct = folded_points(base, m, n);
                const DigitalNet viamat = generate_points(folded_matrices(base, m, n));
                const DigitalNet ham = hammersley_points(base, m);
                bool ok = direct.points == viamat.points;
                for (std::size_t i = 0; ok && i < ham.points.size(); ++i)
                    ok = direct.points[i].num1 == baker_fold(ham.points[i].num1, base, m, n) &&
                         direct.points[i].num2 == baker_fold(ham.points[i].num2, base, m, n);
                if (!ok) {
                    detail = "b=" + std::to_string(base) + " m=" + std::to_string(m) +
                             " n=" + std::to_string(n);
                    return false;
                }
            }
    return true;
}

bool row_independence_exhaustive(std::string& detail) {
    for (int base : {2, 3, 4, 5})
        for (int m = 2; m <= 6; ++m) {
            const LemmaLinearReport rep = verify_lemma_linear(base, m, 2 * m);
            if (!rep.all_pass()) {
                detail = rep.first_failure;
                return false;
            }
        }
    return true;
}

bool structural_consistent(std::string& detail) {
    auto fail = [&detail](const std::string& what) {
        detail = what;
        return false;
    };
    struct Grid {
        int base, m_max;
    };
    for (const Grid grid : {Grid{2, 6}, Grid{3, 4}}) {
        for (int m = 1; m <= grid.m_max; ++m) {
            const int n = 2 * m;
            const GeneratingMatrices g = folded_matrices(grid.base, m, n);
            const int s1 = structural_rho1_bound(g);
            const int s2 = structural_rho2_bound(g);
            const MinWeightResult w1 = min_weight(g, WeightKind::nrt, n);
            const MinWeightResult w2 = min_weight(g, WeightKind::dick, n);
            const std::string at = "folded b=" + std::to_string(grid.base) + " m=" + std::to_string(m);
            if (s1 < m - 1 || s2 < 2 * m - 3) return fail(at + " bound below floor");
            if (!(w1.exceeds_threshold ? s1 <= n : s1 < w1.value))
                return fail(at + " rho1 not strictly below enumerated");
            if (!(w2.exceeds_threshold ? s2 <= n : s2 < w2.value))
                return fail(at + " rho2 not strictly below enumerated");
        }
    }
    for (int base : {2, 3})
        for (int m = 1; m <= 4; ++m) {
            const GeneratingMatrices g = hammersley_matrices(base, m);
            const int s1 = structural_rho1_bound(g);
            const MinWeightResult w1 = min_weight(g, WeightKind::nrt, g.n);
            if (!(w1.exceeds_threshold ? s1 <= g.n : s1 < w1.value))
                return fail("hammersley b=" + std::to_string(base) + " m=" + std::to_string(m));
        }
    return true;
}

bool discrepancy_oracles(std::string& detail) {
    const IntPoints origin{1, {{0, 0}}};
    const IntPoints pair{2, {{0, 0}, {1, 1}}};
    auto scaled = [](const IntPoints& ip) {
        std::vector<RatPoint> pts;
        for (const auto& [u, w] : ip.pts) pts.push_back({Rational(u, ip.denom), Rational(w, ip.denom)});
        return scale_points(pts);
    };

    const Rational sq1 = l2_exact(scaled(origin));
    if (sq1 != Rational(11, 18)) {
        detail = "L2^2 single-point fixture, got " + format_rational(sq1);
        return false;
    }
    const Rational sq2 = l2_exact(scaled(pair));
    if (sq2 != Rational(91, 576)) {
        detail = "L2^2 two-point fixture, got " + format_rational(sq2);
        return false;
    }
    if (std::abs(midpoint_l2_oracle(origin, 256) - to_double(sq1)) >= 1e-3 ||
        std::abs(midpoint_l2_oracle(pair, 256) - to_double(sq2)) >= 1e-3) {
        detail = "midpoint 256x256 integration disagrees with the exact kernel";
        return false;
    }

    const Rational li1 = linf_exact(scaled(origin));
    const Rational li2 = linf_exact(scaled(pair));
    if (li1 != Rational(1) || li2 != Rational(3, 4)) {
        detail = "Linf fixtures, got " + format_rational(li1) + " and " + format_rational(li2);
        return false;
    }
    const int g = 256;
    for (const auto& [ip, exact] : {std::pair<const IntPoints&, double>{origin, 1.0},
                                    std::pair<const IntPoints&, double>{pair, 0.75}}) {
        const double dense = dense_linf_oracle(ip, g);
        if (dense > exact + 1e-12 || exact > dense + 3.0 / g) {
            detail = "dense-grid maximum out of resolution window";
            return false;
        }
    }
    return true;
}

// Window endpoints frozen from the exact kernels (scan --base 2 --m-range
// 4..12); each window spans less than a factor of two.  Tabulated folded
// ratios: L2·2^m/√m in [0.3691, 0.3909], Linf·2^m/m in [0.5188, 0.5750].
constexpr double kFoldedL2RatioLo = 0.32;
constexpr double kFoldedL2RatioHi = 0.44;
constexpr double kFoldedLinfRatioLo = 0.45;
constexpr double kFoldedLinfRatioHi = 0.65;

bool scaling_dichotomy(std::string& detail) {
    static_assert(kFoldedL2RatioHi <= 2 * kFoldedL2RatioLo);
    static_assert(kFoldedLinfRatioHi <= 2 * kFoldedLinfRatioLo);
    std::vector<double> ham_l2_ratio;
    std::vector<double> ham_l2_times_n;  // L2·2^m: tabulated as 0.125·m + 0.608
    for (int m = 4; m <= 12; ++m) {
        const double bm = static_cast<double>(std::int64_t{1} << m);
        const ScaledPointSet folded = scale_net(folded_points(2, m, 2 * m));
        const double l2f = std::sqrt(to_double(l2_exact(folded)));
        const double linff = to_double(linf_exact(folded));
        const double r2 = l2f * bm / std::sqrt(static_cast<double>(m));
        const double rinf = linff * bm / static_cast<double>(m);
        if (r2 < kFoldedL2RatioLo || r2 > kFoldedL2RatioHi) {
            detail = "folded L2 ratio " + std::to_string(r2) + " at m=" + std::to_string(m);
            return false;
        }
        if (rinf < kFoldedLinfRatioLo || rinf > kFoldedLinfRatioHi) {
            detail = "folded Linf ratio " + std::to_string(rinf) + " at m=" + std::to_string(m);
            return false;
        }
        const ScaledPointSet ham = scale_net(hammersley_points(2, m));
        const double l2h = std::sqrt(to_double(l2_exact(ham)));
        ham_l2_ratio.push_back(l2h * bm / std::sqrt(static_cast<double>(m)));
        ham_l2_times_n.push_back(l2h * bm);
    }
    // The √m-normalized ratio L2·2^m/√m ~ (0.125·m + 0.61)/√m bottoms out
    // between m = 4 and m = 5, so strict growth starts at the second step;
    // the ~1.9x rise over the range shows in the un-normalized L2·2^m.
    for (std::size_t i = 2; i < ham_l2_ratio.size(); ++i)
        if (ham_l2_ratio[i] <= ham_l2_ratio[i - 1]) {
            detail = "hammersley L2 ratio not increasing at step " + std::to_string(i);
            return false;
        }
    if (ham_l2_ratio.back() <= ham_l2_ratio.front()) {
        detail = "hammersley L2 ratio did not grow across the range";
        return false;
    }
    for (std::size_t i = 1; i < ham_l2_times_n.size(); ++i)
        if (ham_l2_times_n[i] <= ham_l2_times_n[i - 1]) {
            detail = "hammersley L2*N not increasing at step " + std::to_string(i);
            return false;
        }
    if (ham_l2_times_n.back() / ham_l2_times_n.front() < 1.5) {
        detail = "hammersley L2*N growth below 1.5x over the range";
        return false;
    }
    return true;
}

bool norm_monotonicity(std::string& detail) {
    const ScaledPointSet s = scale_net(folded_points(2, 6, 12));
    const DiscrepancyReport e1 = lp_estimate(s, 1.0, 100000);
    const DiscrepancyReport e2 = lp_estimate(s, 2.0, 100000);
    const DiscrepancyReport e4 = lp_estimate(s, 4.0, 100000);
    const double linf = to_double(linf_exact(s));
    if (!(e1.estimate <= e2.estimate + 1e-12 && e2.estimate <= e4.estimate + 1e-12 &&
          e4.estimate <= linf + 1e-12)) {
        detail = "ordering violated: " + std::to_string(e1.estimate) + ", " +
                 std::to_string(e2.estimate) + ", " + std::to_string(e4.estimate) + ", Linf " +
                 std::to_string(linf);
        return false;
    }
    const double target = std::sqrt(to_double(l2_exact(s)));
    if (std::abs(e2.estimate - target) > 3 * e2.std_error) {
        detail = "p=2 estimate " + std::to_string(e2.estimate) + " vs exact " +
                 std::to_string(target) + " (3 SE = " + std::to_string(3 * e2.std_error) + ")";
        return false;
    }
    return true;
}

bool cli_round_trip(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "CLI binary path not provided as argv[1]";
        return false;
    }
    const std::string file =
        (std::filesystem::temp_directory_path() /
         ("zbnet_roundtrip_" + std::to_string(::getpid()) + ".csv"))
            .string();
    const CliResult gen = run_cli("gen --construction folded --base 2 --m 3 --out " + file);
    if (gen.code != 0) {
        detail = "gen exited with " + std::to_string(gen.code);
        return false;
    }
    const Rational sq = l2_exact(scale_net(folded_points(2, 3, 6)));
    const Rational li = linf_exact(scale_net(folded_points(2, 3, 6)));
    const CliResult d1 = run_cli("disc --in " + file + " --metric l2");
    const CliResult d2 = run_cli("disc --in " + file + " --metric l2");
    const CliResult d3 = run_cli("disc --construction folded --base 2 --m 3 --metric l2");
    const CliResult li1 = run_cli("disc --in " + file + " --metric linf");
    std::filesystem::remove(file);
    if (d1.code != 0 || li1.code != 0) {
        detail = "disc exited nonzero";
        return false;
    }
    if (d1.out != d2.out || d1.out != d3.out) {
        detail = "repeated runs differ";
        return false;
    }
    if (d1.out.find("l2_squared=" + format_rational(sq) + " ") == std::string::npos ||
        li1.out.find("linf=" + format_rational(li) + " ") == std::string::npos) {
        detail = "CLI values differ from direct library evaluation";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    struct Criterion {
        const char* name;
        bool (*check)(std::string&);
    };
    const std::vector<Criterion> criteria{
        {"folded-net NRT minimum exceeds m-1 (b=2 m<=6, b=3 m<=4)",
         [](std::string& d) { return minima_clear_floor(WeightKind::nrt, d); }},
        {"folded-net Dick minimum exceeds 2m-3 on the same grid",
         [](std::string& d) { return minima_clear_floor(WeightKind::dick, d); }},
        {"point-formula, matrix, and digit-fold constructions coincide (b=2,3,5; m<=6)",
         constructions_coincide},
        {"generating-matrix row independence holds exhaustively (b=2,3,4,5; m<=6)",
         row_independence_exhaustive},
        {"structural rank bounds sit below enumerated minima and above their floors",
         structural_consistent},
        {"exact L2/Linf agree with fixtures and independent grid oracles",
         discrepancy_oracles},
        {"folded scaling ratios stay in frozen factor-2 windows; Hammersley L2 ratio grows",
         scaling_dichotomy},
        {"Lp estimates are monotone in p and match exact L2 within 3 SE",
         norm_monotonicity},
        {"CLI round-trip reproduces library-exact values byte-identically",
         cli_round_trip},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        const bool ok = criteria[i].check(detail);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%zu/%zu] %s  %s (%.2fs)%s%s%s\n", i + 1, criteria.size(),
                    ok ? "PASS" : "FAIL", criteria[i].name, secs, ok ? "" : " -- ",
                    ok ? "" : detail.c_str(), "");
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures, criteria.size());
    return 1;
}

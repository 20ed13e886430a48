#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zbnet/zbnet.hpp"

using namespace zbnet;

namespace {

// --out FILE redirects a command's report; default is stdout.  Binary mode so
// line endings stay LF everywhere.
struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        require(file.good(), "cannot open output file: " + path);
        os = &file;
    }
};

TableFormat parse_format(const std::string& f) {
    if (f == "csv") return TableFormat::csv;
    if (f == "tsv") return TableFormat::tsv;
    if (f == "plain") return TableFormat::plain;
    throw std::invalid_argument("unknown format: " + f);
}

DigitalNet build_net(int base, int m, int depth, const std::string& construction) {
    require(m >= 1, "m must be >= 1");
    if (construction == "hammersley") {
        const int n = depth < 0 ? m : depth;
        require(n == m, "hammersley: depth equals m (one digit per index digit)");
        return hammersley_points(base, m);
    }
    require(construction == "folded", "unknown construction: " + construction);
    return folded_points(base, m, depth < 0 ? 2 * m : depth);
}

GeneratingMatrices build_matrices(int base, int m, int depth, const std::string& construction) {
    require(m >= 1, "m must be >= 1");
    if (construction == "hammersley") {
        const int n = depth < 0 ? m : depth;
        require(n == m, "hammersley: depth equals m (one digit per index digit)");
        return hammersley_matrices(base, m);
    }
    require(construction == "folded", "unknown construction: " + construction);
    return folded_matrices(base, m, depth < 0 ? 2 * m : depth);
}

struct NetOpts {
    int base = 2;
    int m = 0;
    int depth = -1;  // -1: construction default (m or 2m)
    std::string construction = "folded";
    std::string format = "csv";
    std::string out;
};

void add_net_flags(CLI::App* cmd, NetOpts& o, bool m_required) {
    cmd->add_option("--base", o.base, "digit base b >= 2")->capture_default_str();
    auto* m_opt = cmd->add_option("--m", o.m, "number of index digits; the net has b^m points");
    if (m_required) m_opt->required();
    cmd->add_option("--depth", o.depth, "output digits n (default: m for hammersley, 2m for folded)");
    cmd->add_option("--construction", o.construction, "hammersley | folded")
        ->check(CLI::IsMember({"hammersley", "folded"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

int run_gen(const NetOpts& o) {
    const DigitalNet net = build_net(o.base, o.m, o.depth, o.construction);
    OutStream out;
    out.open(o.out);
    write_points(*out.os, net, o.construction, parse_format(o.format));
    return 0;
}

std::string render_min(const MinWeightResult& r) {
    if (r.exceeds_threshold) return "exceeds(" + std::to_string(r.threshold_checked) + ")";
    return std::to_string(r.value) + " witness=(" + std::to_string(r.witness.k1) + "," +
           std::to_string(r.witness.k2) + ")";
}

int run_weights(const NetOpts& o) {
    const GeneratingMatrices g = build_matrices(o.base, o.m, o.depth, o.construction);
    const bool folded = o.construction == "folded";
    OutStream out;
    out.open(o.out);
    std::ostream& os = *out.os;

    os << "construction=" << o.construction << " base=" << g.base << " m=" << g.m
       << " depth=" << g.n << "\n";
    os << "structural_rho1=" << structural_rho1_bound(g) << "\n";
    if (g.n >= 2 * g.m)
        os << "structural_rho2=" << structural_rho2_bound(g) << "\n";
    else
        os << "structural_rho2=-\n";  // rank criterion needs depth >= 2m

    const MinWeightResult nrt = min_weight(g, WeightKind::nrt, g.n);
    const MinWeightResult dick = min_weight(g, WeightKind::dick, g.n);
    os << "nrt_min=" << render_min(nrt) << "\n";
    os << "dick_min=" << render_min(dick) << "\n";

    if (!folded) {
        os << "note=thresholds m-1 and 2m-3 are folded-net guarantees; report only\n";
        return 0;
    }
    // exceeds(n) implies the minimum is > n >= both thresholds
    const bool nrt_ok = nrt.exceeds_threshold || nrt.value > g.m - 1;
    const bool dick_ok = dick.exceeds_threshold || dick.value > 2 * g.m - 3;
    os << "NRT minimum > " << g.m - 1 << ": " << (nrt_ok ? "PASS" : "FAIL") << "\n";
    os << "Dick minimum > " << 2 * g.m - 3 << ": " << (dick_ok ? "PASS" : "FAIL") << "\n";
    return nrt_ok && dick_ok ? 0 : 1;
}

struct DiscOpts : NetOpts {
    std::string in;
    std::string metric = "l2";
    double p = 2.0;
    std::int64_t samples = 10000;
    std::optional<std::uint64_t> seed;
};

int run_disc(const DiscOpts& o) {
    ScaledPointSet s;
    if (!o.in.empty()) {
        std::ifstream f(o.in, std::ios::binary);
        require(f.good(), "cannot open input file: " + o.in);
        s = scale_points(read_points(f));
    } else {
        require(o.m >= 1, "provide --m (net) or --in FILE (point list)");
        s = scale_net(build_net(o.base, o.m, o.depth, o.construction));
    }
    OutStream out;
    out.open(o.out);
    std::ostream& os = *out.os;

    if (o.metric == "l2") {
        const Rational sq = l2_exact(s);
        os << "l2_squared=" << format_rational(sq) << " (≈ " << decimal_string(sq) << ")\n";
        os << "l2=" << decimal_string(std::sqrt(to_double(sq))) << "\n";
    } else if (o.metric == "linf") {
        const Rational v = linf_exact(s);
        os << "linf=" << format_rational(v) << " (≈ " << decimal_string(v) << ")\n";
    } else {
        const DiscrepancyReport rep = lp_estimate(s, o.p, o.samples, o.seed);
        os << "lp[p=" << decimal_string(o.p) << "]=" << decimal_string(rep.estimate) << " ± "
           << decimal_string(rep.std_error) << " (" << rep.samples << " samples, ";
        if (rep.seed)
            os << "seed=" << *rep.seed;
        else
            os << "midpoint " << rep.grid_side << "x" << rep.grid_side;
        os << ")\n";
    }
    return 0;
}

struct VerifyOpts {
    int base = 2;
    int m_max = 5;
};

int run_verify(const VerifyOpts& o) {
    check_base(o.base);
    require(o.m_max >= 1, "m-max must be >= 1");
    int checks = 0, failures = 0;
    auto report = [&](const std::string& name, int m, bool ok, const std::string& detail = "") {
        ++checks;
        if (!ok) ++failures;
        std::cout << "CHECK " << name << " b=" << o.base << " m=" << m
                  << (ok ? " PASS" : " FAIL");
        if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    };

    for (int m = 1; m <= o.m_max; ++m) {
        const int n = 2 * m;
        const GeneratingMatrices g = folded_matrices(o.base, m, n);
        const DigitalNet direct = folded_points(o.base, m, n);
        const DigitalNet viamat = generate_points(g);
        const DigitalNet ham = hammersley_points(o.base, m);
        std::vector<NetPoint> viafold;
        for (const NetPoint& p : ham.points)
            viafold.push_back({baker_fold(p.num1, o.base, m, n), baker_fold(p.num2, o.base, m, n)});
        report("construction_equivalence", m,
               direct.points == viamat.points && direct.points == viafold);

        std::vector<NetPoint> sorted = direct.points;
        std::sort(sorted.begin(), sorted.end());
        report("point_distinctness", m,
               std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

        const LemmaLinearReport rows = verify_lemma_linear(o.base, m, n);
        report("row_independence", m, rows.all_pass(), rows.first_failure);

        const MinWeightResult w1 = min_weight(g, WeightKind::nrt, n);
        report("nrt_minimum", m, w1.exceeds_threshold || w1.value > m - 1);
        const MinWeightResult w2 = min_weight(g, WeightKind::dick, n);
        report("dick_minimum", m, w2.exceeds_threshold || w2.value > 2 * m - 3);

        const int s1 = structural_rho1_bound(g);
        const int s2 = structural_rho2_bound(g);
        bool ok = s1 >= m - 1 && s2 >= 2 * m - 3;
        ok = ok && (w1.exceeds_threshold ? s1 <= n : s1 < w1.value);
        ok = ok && (w2.exceeds_threshold ? s2 <= n : s2 < w2.value);
        report("structural_bounds", m, ok);
    }

    if (failures > 0) {
        std::cout << "RESULT FAIL (" << failures << " of " << checks << " checks)\n";
        return 1;
    }
    std::cout << "RESULT PASS (" << checks << " checks)\n";
    return 0;
}

struct ScanOpts {
    int base = 2;
    std::string m_range;
    std::string format = "csv";
    std::string out;
};

std::pair<int, int> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    require(pos != std::string::npos, "m-range must look like A..B");
    int lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoi(s.substr(0, pos), &used);
        require(used == pos, "m-range must look like A..B");
        const std::string tail = s.substr(pos + 2);
        hi = std::stoi(tail, &used);
        require(used == tail.size(), "m-range must look like A..B");
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("m-range must look like A..B");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("m-range values out of range");
    }
    require(lo >= 1 && lo <= hi, "m-range requires 1 <= A <= B");
    return {lo, hi};
}

int run_scan(const ScanOpts& o) {
    check_base(o.base);
    const auto [lo, hi] = parse_range(o.m_range);
    // quadratic kernels: keep interactive sweeps under the documented ceiling
    require(checked_pow(o.base, hi) <= (std::int64_t{1} << 13),
            "scan is capped at b^m <= 8192 points");
    OutStream out;
    out.open(o.out);
    std::ostream& os = *out.os;
    const char sep = table_separator(parse_format(o.format));

    os << "m" << sep << "N" << sep << "construction" << sep << "L2" << sep << "L2_scaled" << sep
       << "Linf" << sep << "Linf_scaled\n";
    for (int m = lo; m <= hi; ++m) {
        const double bm = static_cast<double>(checked_pow(o.base, m));
        for (const std::string construction : {"hammersley", "folded"}) {
            const DigitalNet net = construction == "hammersley"
                                       ? hammersley_points(o.base, m)
                                       : folded_points(o.base, m, 2 * m);
            const ScaledPointSet s = scale_net(net);
            const double l2 = std::sqrt(to_double(l2_exact(s)));
            const double linf = to_double(linf_exact(s));
            os << m << sep << net.points.size() << sep << construction << sep
               << decimal_string(l2) << sep << decimal_string(l2 * bm / std::sqrt(m)) << sep
               << decimal_string(linf) << sep << decimal_string(linf * bm / m) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital nets over Z_b: point generation, dual weights, exact discrepancy"};
    app.require_subcommand(1);
    int rc = 0;

    NetOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "generate the points of a net");
    add_net_flags(gen, gen_opts, true);
    gen->add_option("--format", gen_opts.format, "csv | tsv | plain")
        ->check(CLI::IsMember({"csv", "tsv", "plain"}))
        ->capture_default_str();
    gen->callback([&] { rc = run_gen(gen_opts); });

    NetOpts weight_opts;
    auto* weights = app.add_subcommand("weights", "dual-net minimum weights and structural bounds");
    add_net_flags(weights, weight_opts, true);
    weights->callback([&] { rc = run_weights(weight_opts); });

    DiscOpts disc_opts;
    auto* disc = app.add_subcommand("disc", "discrepancy of a net or a point-list file");
    add_net_flags(disc, disc_opts, false);
    disc->add_option("--in", disc_opts.in, "point-list file (lines of \"p/q,p/q\")")
        ->excludes(disc->get_option("--m"));
    disc->add_option("--metric", disc_opts.metric, "l2 | linf | lp")
        ->check(CLI::IsMember({"l2", "linf", "lp"}))
        ->capture_default_str();
    disc->add_option("--p", disc_opts.p, "norm exponent for --metric lp (finite, >= 1)")
        ->capture_default_str();
    disc->add_option("--samples", disc_opts.samples, "sample budget for --metric lp")
        ->capture_default_str();
    disc->add_option("--seed", disc_opts.seed,
                     "random sampling with this seed (default: deterministic midpoint grid)");
    disc->callback([&] { rc = run_disc(disc_opts); });

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "run the folded-net property suite for m = 1..m-max");
    verify->add_option("--base", verify_opts.base, "digit base b >= 2")->capture_default_str();
    verify->add_option("--m-max", verify_opts.m_max, "largest m to check")->capture_default_str();
    verify->callback([&] { rc = run_verify(verify_opts); });

    ScanOpts scan_opts;
    auto* scan = app.add_subcommand("scan", "discrepancy scaling table over a range of m");
    scan->add_option("--base", scan_opts.base, "digit base b >= 2")->capture_default_str();
    scan->add_option("--m-range", scan_opts.m_range, "inclusive range, e.g. 2..10")->required();
    scan->add_option("--format", scan_opts.format, "csv | tsv")
        ->check(CLI::IsMember({"csv", "tsv"}))
        ->capture_default_str();
    scan->add_option("--out", scan_opts.out, "write the table to a file instead of stdout");
    scan->callback([&] { rc = run_scan(scan_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_rc = app.exit(e);
        return cli_rc == 0 ? 0 : 2;  // help/version are success; every parse error is usage
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

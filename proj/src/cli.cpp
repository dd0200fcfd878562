#include "bgph/cli.hpp"

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "bgph/config.hpp"
#include "bgph/distances.hpp"
#include "bgph/io.hpp"
#include "bgph/selftest.hpp"

namespace bgph {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitFail = 3;

unsigned env_threads() {
    if (const char* v = std::getenv("BGPH_THREADS")) {
        long n = std::strtol(v, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return 0;
}

struct common_opts {
    unsigned field = 2;
    std::size_t cap = 20;
    unsigned threads = env_threads();

    pipeline_options pipeline() const {
        run_config cfg{field, cap, kDefaultTolerance, threads};
        cfg.validate();
        return {cfg.effective_threads(), cap, kDefaultTolerance};
    }
};

void add_common(CLI::App* cmd, common_opts& c) {
    cmd->add_option("--field", c.field, "coefficient field characteristic (prime)");
    cmd->add_option("--cap", c.cap, "vertex cap for subset enumeration")->check(CLI::Range(1, 24));
    cmd->add_option("--threads", c.threads, "worker threads (default: BGPH_THREADS or all cores)");
}

pseudo_metric_space load_space(const std::string& path, bool matrix) {
    std::string text = io::read_file(path);
    if (!matrix) return io::points_from_csv(text);
    std::string warning;
    auto x = io::matrix_from_csv(text, &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    return x;
}

int cmd_barcode(const std::string& input, bool matrix, const std::string& mode,
                const common_opts& copts, const std::string& out, const std::string& svg) {
    std::string text = io::read_file(input);
    pseudo_metric_space x = matrix ? [&] {
        std::string warning;
        auto s = io::matrix_from_csv(text, &warning);
        if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
        return s;
    }()
                                   : io::points_from_csv(text);

    prime_field F(copts.field);
    pipeline_options opt = copts.pipeline();

    io::barcode_document doc;
    doc.field_p = copts.field;
    doc.input_hash = io::fnv1a_hex(text);
    doc.vertex_cap = copts.cap;
    doc.tolerance = opt.tol;
    if (mode == "ph")
        doc.bars = persistent_homology(x, F, opt);
    else if (mode == "phz")
        doc.bars = phz(x, F, opt);
    else if (mode == "phhz")
        doc.bars = phhz(x, F, opt);
    else
        throw CLI::ValidationError("--mode", "must be ph, phz or phhz");

    std::string json = io::serialize(doc);
    if (out.empty())
        std::cout << json;
    else
        io::write_file(out, json);
    if (!svg.empty()) io::write_file(svg, io::render_svg(doc.bars));
    return kExitOk;
}

int cmd_distance(const std::string& a, const std::string& b, const std::string& kind,
                 bool ungraded) {
    auto da = io::deserialize(io::read_file(a));
    auto db = io::deserialize(io::read_file(b));
    if (kind != "bottleneck" && kind != "interleaving")
        throw CLI::ValidationError("--kind", "must be bottleneck or interleaving");
    bottleneck_options opt;
    opt.grade_matched = !ungraded;
    double v = kind == "bottleneck" ? bottleneck(da.bars, db.bars, opt)
                                    : interleaving_via_isometry(da.bars, db.bars, opt);
    if (v == kInfiniteDeath)
        std::cout << "inf\n";
    else
        std::cout.precision(17), std::cout << v << "\n";
    return kExitOk;
}

int cmd_gh(const std::string& a, const std::string& b, bool matrix, const std::string& mode) {
    auto x = load_space(a, matrix);
    auto y = load_space(b, matrix);
    double v = 0;
    if (mode == "exact")
        v = gromov_hausdorff(x, y);
    else if (mode == "bijective")
        v = gromov_hausdorff_bijective(x, y);
    else
        throw CLI::ValidationError("--mode", "must be exact or bijective");
    std::cout.precision(17);
    std::cout << v << "\n";
    return kExitOk;
}

int cmd_stability(const std::string& a, const std::string& b, bool matrix, const std::string& mode,
                  const common_opts& copts) {
    auto x = load_space(a, matrix);
    auto y = load_space(b, matrix);
    prime_field F(copts.field);
    pipeline_options opt = copts.pipeline();

    double lhs = 0, rhs = 0;
    if (mode == "phz") {
        if (x.size() != y.size())
            throw std::invalid_argument("phz stability requires |X| = |Y| (d'_GH)");
        lhs = interleaving_via_isometry(phz(x, F, opt), phz(y, F, opt));
        rhs = 2.0 * gromov_hausdorff_bijective(x, y);
    } else if (mode == "phhz") {
        lhs = interleaving_via_isometry(phhz(x, F, opt), phhz(y, F, opt));
        rhs = 2.0 * gromov_hausdorff(x, y);
    } else {
        throw CLI::ValidationError("--mode", "must be phz or phhz");
    }

    bool pass = lhs <= rhs + kDefaultTolerance;
    std::cout.precision(17);
    std::cout << "W_inf = " << lhs << "\n";
    std::cout << "2 d" << (mode == "phz" ? "'" : "") << "_GH = " << rhs << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << ": " << lhs << (pass ? " <= " : " > ") << rhs << "\n";
    return pass ? kExitOk : kExitFail;
}

int cmd_betti(const std::string& input, bool matrix, double t, const common_opts& copts,
              const std::string& out) {
    auto x = load_space(input, matrix);
    if (x.size() > copts.cap) throw cap_exceeded("space exceeds the vertex cap");
    prime_field F(copts.field);
    auto table = betti_table(vietoris_rips(x, t), F);
    std::string csv = io::betti_csv(table, x.size());
    if (out.empty())
        std::cout << csv;
    else
        io::write_file(out, csv);
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, int trials, const common_opts& copts) {
    prime_field F(copts.field);
    random_model model;
    model.seed = seed;
    auto rep = run_property_suite(model, trials, F);
    std::cout << rep.to_string();
    return rep.ok() ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"bigraded persistent homology of finite pseudo-metric spaces"};
    app.require_subcommand(1);

    // barcode
    auto* barcode_cmd = app.add_subcommand("barcode", "compute ph/phz/phhz barcodes");
    std::string input, mode = "phz", out, svg;
    bool matrix = false;
    common_opts bc_opts;
    barcode_cmd->add_option("--input", input, "CSV input")->required();
    barcode_cmd->add_flag("--matrix", matrix, "input is a distance matrix, not coordinates");
    barcode_cmd->add_option("--mode", mode, "ph | phz | phhz");
    barcode_cmd->add_option("--out", out, "output JSON path (default: stdout)");
    barcode_cmd->add_option("--svg", svg, "also render an SVG to this path");
    add_common(barcode_cmd, bc_opts);

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "bottleneck/interleaving distance of barcodes");
    std::string da, db, dkind = "bottleneck";
    bool ungraded = false;
    dist_cmd->add_option("--a", da, "first barcode JSON")->required();
    dist_cmd->add_option("--b", db, "second barcode JSON")->required();
    dist_cmd->add_option("--kind", dkind, "bottleneck | interleaving");
    dist_cmd->add_flag("--ungraded", ungraded, "allow matches across grades");

    // gh
    auto* gh_cmd = app.add_subcommand("gh", "Gromov-Hausdorff distance of two spaces");
    std::string ga, gb, gmode = "exact";
    bool gmatrix = false;
    gh_cmd->add_option("--a", ga, "first CSV input")->required();
    gh_cmd->add_option("--b", gb, "second CSV input")->required();
    gh_cmd->add_flag("--matrix", gmatrix, "inputs are distance matrices");
    gh_cmd->add_option("--mode", gmode, "exact | bijective");

    // stability
    auto* st_cmd = app.add_subcommand("stability", "verify a stability inequality on a pair");
    std::string sa, sb, smode = "phhz";
    bool smatrix = false;
    common_opts st_opts;
    st_cmd->add_option("--a", sa, "first CSV input")->required();
    st_cmd->add_option("--b", sb, "second CSV input")->required();
    st_cmd->add_flag("--matrix", smatrix, "inputs are distance matrices");
    st_cmd->add_option("--mode", smode, "phz | phhz");
    add_common(st_cmd, st_opts);

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "bigraded Betti table of R(X,t) as CSV");
    std::string bi, bout;
    bool bmatrix = false;
    double bt = 0.0;
    common_opts b_opts;
    betti_cmd->add_option("--input", bi, "CSV input")->required();
    betti_cmd->add_flag("--matrix", bmatrix, "input is a distance matrix");
    betti_cmd->add_option("--t", bt, "filtration parameter")->required();
    betti_cmd->add_option("--out", bout, "output CSV path (default: stdout)");
    add_common(betti_cmd, b_opts);

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run the randomized property suite");
    std::uint64_t seed = 1;
    int trials = 50;
    common_opts self_opts;
    self_cmd->add_option("--seed", seed, "base seed");
    self_cmd->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    add_common(self_cmd, self_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (barcode_cmd->parsed()) return cmd_barcode(input, matrix, mode, bc_opts, out, svg);
        if (dist_cmd->parsed()) return cmd_distance(da, db, dkind, ungraded);
        if (gh_cmd->parsed()) return cmd_gh(ga, gb, gmatrix, gmode);
        if (st_cmd->parsed()) return cmd_stability(sa, sb, smatrix, smode, st_opts);
        if (betti_cmd->parsed()) return cmd_betti(bi, bmatrix, bt, b_opts, bout);
        if (self_cmd->parsed()) return cmd_selftest(seed, trials, self_opts);
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bgph

#include "triqmc/cli.hpp"

#include "triqmc/discrepancy.hpp"
#include "triqmc/errors.hpp"
#include "triqmc/integrands.hpp"
#include "triqmc/io.hpp"
#include "triqmc/lattice.hpp"
#include "triqmc/quadrature.hpp"
#include "triqmc/vdc.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace triqmc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string gen = "vdc";
    std::string triangle = "equilateral";
    std::string n_text;
    std::string n_list_text;
    std::uint64_t start = 0;
    std::uint64_t seed = 0;
    int depth = 16;
    std::string leaf = "uniform";
    std::string angle_tan;
    std::optional<double> angle_rad;
    bool unsafe_angle = false;
    bool exact_count = false;
    std::string out_path;
    std::string format;
    std::string points_path;
    std::size_t grid = 0;
    std::string family = "parallelogram";
    int k = 2;
    std::string integrand;
    std::size_t replicates = 1;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

template <class T>
T parse_number(const std::string& s, const char* what)
{
    std::istringstream in(s);
    T v{};
    if (!(in >> v) || !in.eof()) {
        throw UsageError(fmt::format("{}: '{}' is not a valid number", what, s));
    }
    return v;
}

Triangle parse_triangle(const std::string& spec)
{
    if (spec == "equilateral") {
        return reference_triangle(ReferenceTriangle::equilateral_unit_area);
    }
    if (spec == "pillards-cools") {
        return reference_triangle(ReferenceTriangle::pillards_cools);
    }
    if (spec == "right") {
        return reference_triangle(ReferenceTriangle::right_unit);
    }
    const auto parts = split(spec, ',');
    if (parts.size() != 6) {
        throw UsageError("--triangle takes equilateral, pillards-cools, right or six comma-separated numbers");
    }
    double v[6];
    for (int k = 0; k < 6; ++k) {
        v[k] = parse_number<double>(parts[static_cast<std::size_t>(k)], "--triangle");
    }
    try {
        return make_triangle({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
    } catch (const DegenerateTriangle& e) {
        throw UsageError(e.what());
    }
}

std::size_t parse_count(const std::string& s)
{
    const auto v = parse_number<long long>(s, "--n");
    if (v < 1) {
        throw UsageError(fmt::format("point count must be positive, got {}", s));
    }
    return static_cast<std::size_t>(v);
}

// "a,b,c" lists values; "lo..hi" doubles from lo while <= hi.
std::vector<std::size_t> parse_count_list(const std::string& s)
{
    std::vector<std::size_t> ns;
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const std::size_t lo = parse_count(s.substr(0, dots));
        const std::size_t hi = parse_count(s.substr(dots + 2));
        for (std::size_t n = lo; n <= hi; n *= 2) {
            ns.push_back(n);
        }
    } else {
        for (const std::string& part : split(s, ',')) {
            ns.push_back(parse_count(part));
        }
    }
    if (ns.empty()) {
        throw UsageError("empty point-count list");
    }
    return ns;
}

GeneratorSpec parse_generator(const RunConfig& cfg)
{
    GeneratorSpec spec;
    if (cfg.gen == "vdc") {
        spec.kind = GeneratorKind::vdc;
    } else if (cfg.gen == "vdc-scrambled") {
        spec.kind = GeneratorKind::vdc_scrambled;
    } else if (cfg.gen == "lattice") {
        spec.kind = GeneratorKind::lattice;
    } else if (cfg.gen == "lattice-shifted") {
        spec.kind = GeneratorKind::lattice_shifted;
    } else {
        throw UsageError(fmt::format("unknown generator '{}'", cfg.gen));
    }
    spec.domain = parse_triangle(cfg.triangle);
    spec.start = cfg.start;
    spec.scramble_depth = cfg.depth;
    spec.exact_count = cfg.exact_count;
    if (cfg.leaf == "uniform") {
        spec.leaf = LeafMode::uniform_leaf;
    } else if (cfg.leaf == "centroid") {
        spec.leaf = LeafMode::centroid;
    } else {
        throw UsageError(fmt::format("--leaf must be uniform or centroid, got '{}'", cfg.leaf));
    }
    if (!cfg.angle_tan.empty() && cfg.angle_rad) {
        throw UsageError("--angle-tan and --angle-rad are mutually exclusive");
    }
    if (!cfg.angle_tan.empty()) {
        const auto parts = split(cfg.angle_tan, ',');
        if (parts.size() != 4) {
            throw UsageError("--angle-tan takes four integers a,b,c,d");
        }
        try {
            spec.angle = QuadraticIrrational(
                parse_number<std::int64_t>(parts[0], "--angle-tan"), parse_number<std::int64_t>(parts[1], "--angle-tan"),
                parse_number<std::int64_t>(parts[2], "--angle-tan"), parse_number<std::int64_t>(parts[3], "--angle-tan"));
            check_admissible(std::get<QuadraticIrrational>(spec.angle));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    } else if (cfg.angle_rad) {
        if (!cfg.unsafe_angle) {
            throw UsageError("--angle-rad carries no discrepancy guarantee; pass --unsafe-angle to use it");
        }
        spec.angle = RawAngle{*cfg.angle_rad};
    }
    return spec;
}

void add_generator_options(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--gen", cfg.gen, "vdc | vdc-scrambled | lattice | lattice-shifted");
    app->add_option("--triangle", cfg.triangle, "equilateral | pillards-cools | right | ax,ay,bx,by,cx,cy");
    app->add_option("--start", cfg.start, "first vdc index");
    app->add_option("--seed", cfg.seed, "seed for scrambling and random shifts");
    app->add_option("--depth", cfg.depth, "number of scrambled base-4 digits");
    app->add_option("--leaf", cfg.leaf, "uniform | centroid (scrambled vdc)");
    app->add_option("--angle-tan", cfg.angle_tan, "lattice angle as quadratic-irrational tangent a,b,c,d");
    app->add_option("--angle-rad", cfg.angle_rad, "lattice angle in radians (requires --unsafe-angle)");
    app->add_flag("--unsafe-angle", cfg.unsafe_angle, "allow --angle-rad");
    app->add_flag("--exact-count", cfg.exact_count, "trim or pad lattice points to exactly N");
    app->add_option("--out", cfg.out_path, "output file (default stdout)");
}

std::string domain_json(const Triangle& t)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Point& p : t.corners()) {
        j.push_back({p.x, p.y});
    }
    return j.dump();
}

std::string cmd_generate(const RunConfig& cfg)
{
    const GeneratorSpec spec = parse_generator(cfg);
    const SampleSet ps = generate(spec, parse_count(cfg.n_text), cfg.seed);
    std::ostringstream out;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["meta"] = ps.meta;
        j["domain"] = nlohmann::ordered_json::parse(domain_json(ps.domain));
        auto pts = nlohmann::ordered_json::array();
        for (const Point& p : ps.points) {
            pts.push_back({p.x, p.y});
        }
        j["points"] = std::move(pts);
        out << j.dump(2) << '\n';
    } else {
        write_points_csv(out, ps.points);
    }
    return out.str();
}

DiscrepancyReport evaluate(const SampleSet& ps, const RunConfig& cfg, unsigned threads)
{
    if (cfg.family == "parallelogram") {
        return cfg.grid > 0 ? parallelogram_discrepancy_grid(ps, cfg.grid) : parallelogram_discrepancy(ps, threads);
    }
    if (cfg.family == "pc") {
        return pc_discrepancy(ps);
    }
    if (cfg.family == "subtriangle") {
        DiscrepancyReport r;
        r.family = DiscrepancyFamily::subtriangle;
        r.value = subtriangle_discrepancy(ps, cfg.k);
        r.n_points = ps.size();
        return r;
    }
    throw UsageError(fmt::format("--family must be parallelogram, pc or subtriangle, got '{}'", cfg.family));
}

std::string cmd_discrepancy(const RunConfig& cfg)
{
    const unsigned threads = thread_cap();
    std::ostringstream out;
    if (!cfg.points_path.empty()) {
        std::ifstream in(cfg.points_path);
        if (!in) {
            throw Error(fmt::format("cannot open points file '{}'", cfg.points_path));
        }
        SampleSet ps{parse_triangle(cfg.triangle), read_points_csv(in), "file " + cfg.points_path};
        if (!all_inside(ps)) {
            throw Error("points file contains points outside the domain triangle");
        }
        out << to_json(evaluate(ps, cfg, threads)).dump(2) << '\n';
        return out.str();
    }
    const GeneratorSpec spec = parse_generator(cfg);
    if (cfg.n_list_text.empty()) {
        const SampleSet ps = generate(spec, parse_count(cfg.n_text), cfg.seed);
        out << to_json(evaluate(ps, cfg, threads)).dump(2) << '\n';
        return out.str();
    }
    // Sweep: one row per target N with 1/N and log(N)/N reference columns.
    const std::vector<std::size_t> ns = parse_count_list(cfg.n_list_text);
    if (cfg.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const std::size_t n : ns) {
            auto j = to_json(evaluate(generate(spec, n, cfg.seed), cfg, threads));
            j["target_n"] = n;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
    } else {
        out << "N,points,value,inv_n,log_n_over_n\n";
        for (const std::size_t n : ns) {
            const SampleSet ps = generate(spec, n, cfg.seed);
            const DiscrepancyReport r = evaluate(ps, cfg, threads);
            const auto nd = static_cast<double>(n);
            out << n << ',' << ps.size() << ',' << format_real(r.value) << ',' << format_real(1.0 / nd) << ','
                << format_real(std::log(nd) / nd) << '\n';
        }
    }
    return out.str();
}

std::string emit_rows(const std::vector<ConvergenceRow>& rows, const std::string& format)
{
    std::ostringstream out;
    if (format == "json") {
        out << to_json(rows).dump(2) << '\n';
    } else {
        write_rows_csv(out, rows);
    }
    return out.str();
}

Integrand lookup_integrand(const RunConfig& cfg, const Triangle& domain)
{
    if (cfg.integrand.empty()) {
        throw UsageError("--f is required");
    }
    return make_integrand(cfg.integrand, domain);
}

std::string cmd_integrate(const RunConfig& cfg)
{
    const GeneratorSpec spec = parse_generator(cfg);
    const Integrand f = lookup_integrand(cfg, spec.domain);
    const std::vector<std::size_t> ns{parse_count(cfg.n_text)};
    return emit_rows(convergence_study(spec, f, ns, 1, cfg.seed, 1), cfg.format);
}

std::string cmd_converge(const RunConfig& cfg)
{
    const GeneratorSpec spec = parse_generator(cfg);
    const Integrand f = lookup_integrand(cfg, spec.domain);
    if (cfg.replicates < 1) {
        throw UsageError("--R must be at least 1");
    }
    const std::vector<std::size_t> ns = parse_count_list(cfg.n_text);
    return emit_rows(convergence_study(spec, f, ns, cfg.replicates, cfg.seed, thread_cap()), cfg.format);
}

} // namespace

unsigned thread_cap()
{
    if (const char* env = std::getenv("TRIQMC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quasi-Monte Carlo point sets, discrepancies and quadrature on triangles", "triqmc"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* gen = app.add_subcommand("generate", "write a point set as CSV (x,y) or JSON");
    add_generator_options(gen, cfg);
    gen->add_option("--n", cfg.n_text, "number of points")->required();
    gen->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* disc = app.add_subcommand("discrepancy", "evaluate the discrepancy of a point set");
    add_generator_options(disc, cfg);
    auto* n_opt = disc->add_option("--n", cfg.n_text, "number of points");
    auto* list_opt = disc->add_option("--n-list", cfg.n_list_text, "sweep: lo..hi (doubling) or a,b,c");
    auto* points_opt = disc->add_option("--points", cfg.points_path, "CSV file of points to evaluate");
    n_opt->excludes(list_opt);
    points_opt->excludes(n_opt)->excludes(list_opt);
    disc->add_option("--grid", cfg.grid, "approximate on a grid of this resolution");
    disc->add_option("--family", cfg.family, "parallelogram | pc | subtriangle");
    disc->add_option("--k", cfg.k, "subdivision depth for --family subtriangle");
    disc->add_option("--format", cfg.format, "csv | json (sweeps)")->check(CLI::IsMember({"csv", "json"}));

    auto* integ = app.add_subcommand("integrate", "estimate an integral with one point set");
    add_generator_options(integ, cfg);
    integ->add_option("--n", cfg.n_text, "number of points")->required();
    integ->add_option("--f", cfg.integrand, "built-in integrand name");
    integ->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* conv = app.add_subcommand("converge", "RMSE convergence study over a list of N");
    add_generator_options(conv, cfg);
    conv->add_option("--n", cfg.n_text, "lo..hi (doubling) or a,b,c")->required();
    conv->add_option("--f", cfg.integrand, "built-in integrand name");
    conv->add_option("--R", cfg.replicates, "replicates per N (randomized generators)");
    conv->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    std::string text;
    try {
        if (gen->parsed()) {
            text = cmd_generate(cfg);
        } else if (disc->parsed()) {
            if (cfg.n_text.empty() && cfg.n_list_text.empty() && cfg.points_path.empty()) {
                throw UsageError("discrepancy needs --n, --n-list or --points");
            }
            text = cmd_discrepancy(cfg);
        } else if (integ->parsed()) {
            text = cmd_integrate(cfg);
        } else {
            text = cmd_converge(cfg);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const UnknownIntegrand& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return runtime;
    }

    if (cfg.out_path.empty()) {
        out << text;
        return ok;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file || !(file << text)) {
        err << "error: cannot write '" << cfg.out_path << "'\n";
        return runtime;
    }
    return ok;
}

} // namespace triqmc::cli

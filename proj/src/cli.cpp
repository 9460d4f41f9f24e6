#include "gaussprob/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "gaussprob/density.hpp"
#include "gaussprob/gaussian.hpp"
#include "gaussprob/lattice.hpp"
#include "gaussprob/render.hpp"
#include "gaussprob/zeta.hpp"

namespace gaussprob {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::int64_t> parse_radii(const std::string& text) {
    std::vector<std::int64_t> radii;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::int64_t v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last)
            throw UsageError("--radii: cannot parse '" + std::string(first, last) + "'");
        radii.push_back(v);
        pos = comma + 1;
    }
    if (radii.empty()) throw UsageError("--radii: at least one radius is required");
    return radii;
}

double parse_target(const std::string& text, const EstimatorConfig& config) {
    if (text == "auto") {
        if (config.ring == Ring::Gaussian) return reciprocal(dedekind_zeta_Qi(2)).value;
        return rational_coprime_constant(config.k).value;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw UsageError("--target: expected 'auto' or a real number, got '" + text + "'");
    return v;
}

SamplingMode parse_mode(const std::string& name) {
    return name == "exhaustive" ? SamplingMode::Exhaustive : SamplingMode::MonteCarlo;
}

Ring parse_ring(const std::string& name) { return name == "gauss" ? Ring::Gaussian : Ring::Rational; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian-integer coprimality: gcd, prime classes, lattices, zeta constants, densities",
                 "gaussprob"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    unsigned threads = 0;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--threads", threads, "Worker threads (default: $GAUSSPROB_THREADS or all cores)");

    // classify
    std::int64_t cls_a = 0, cls_b = 0;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a+bi as zero/unit/split/inert/ramified/composite");
    classify_cmd->add_option("a", cls_a, "Real part")->required();
    classify_cmd->add_option("b", cls_b, "Imaginary part")->required();

    // gcd
    std::int64_t g_a1 = 0, g_b1 = 0, g_a2 = 0, g_b2 = 0;
    auto* gcd_cmd = app.add_subcommand("gcd", "Canonical gcd of a1+b1 i and a2+b2 i");
    gcd_cmd->add_option("a1", g_a1)->required();
    gcd_cmd->add_option("b1", g_b1)->required();
    gcd_cmd->add_option("a2", g_a2)->required();
    gcd_cmd->add_option("b2", g_b2)->required();

    // constants
    int s = 2;
    ZetaLimits limits;
    auto* constants_cmd = app.add_subcommand("constants", "zeta(s), L(s,chi), zeta_Q(i)(s) and its reciprocal");
    constants_cmd->add_option("--s", s, "Integer argument s >= 2")->capture_default_str();
    constants_cmd->add_option("--prime-limit", limits.prime_limit, "Euler-product prime limit")->capture_default_str();
    constants_cmd->add_option("--n-limit", limits.n_limit, "Series term limit")->capture_default_str();

    // density
    std::string ring_name = "gauss", mode_name = "exhaustive";
    EstimatorConfig config;
    std::int64_t radius = 10;
    auto* density_cmd = app.add_subcommand("density", "Coprimality density over a box of the given radius");
    density_cmd->add_option("--ring", ring_name)->check(CLI::IsMember({"gauss", "rational"}))->capture_default_str();
    density_cmd->add_option("--k", config.k, "Tuple size (rational ring)")->capture_default_str();
    density_cmd->add_option("--radius", radius)->capture_default_str();
    density_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"exhaustive", "mc"}))->capture_default_str();
    density_cmd->add_option("--samples", config.mc.samples)->capture_default_str();
    density_cmd->add_option("--seed", config.mc.seed)->capture_default_str();

    // lattice
    std::int64_t lat_a = 0, lat_b = 0, base_re = 0, base_im = 0;
    auto* lattice_cmd = app.add_subcommand("lattice", "Pick's-theorem counts for the fundamental domain of a+bi");
    lattice_cmd->add_option("--a", lat_a)->required();
    lattice_cmd->add_option("--b", lat_b)->required();
    lattice_cmd->add_option("--base-re", base_re, "Base vertex, real part (must lie in the lattice)");
    lattice_cmd->add_option("--base-im", base_im, "Base vertex, imaginary part");

    // convergence
    std::string radii_text, target_text = "auto";
    std::string conv_format = "csv";
    auto* convergence_cmd = app.add_subcommand("convergence", "Density estimate vs. target over a list of radii");
    convergence_cmd->add_option("--radii", radii_text, "Comma-separated ascending radii")->required();
    convergence_cmd->add_option("--target", target_text, "'auto' or a real number")->capture_default_str();
    convergence_cmd->add_option("--ring", ring_name)->check(CLI::IsMember({"gauss", "rational"}));
    convergence_cmd->add_option("--k", config.k);
    convergence_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"exhaustive", "mc"}));
    convergence_cmd->add_option("--samples", config.mc.samples);
    convergence_cmd->add_option("--seed", config.mc.seed);

    std::vector<std::string> argv_storage{"gaussprob"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        config.threads = threads;
        config.ring = parse_ring(ring_name);
        config.mode = parse_mode(mode_name);
        const bool format_given = app.count("--format") > 0;
        const OutputFormat format = parse_output_format(format_name);

        if (*classify_cmd) {
            const GaussianInt z{cls_a, cls_b};
            out << render_classification(z, classify(z), format);
        } else if (*gcd_cmd) {
            out << render_gcd(gcd({g_a1, g_b1}, {g_a2, g_b2}), format);
        } else if (*constants_cmd) {
            if (s < 2) throw UsageError("--s must be >= 2");
            const TruncatedValue zeta = zeta_euler(s, limits.prime_limit);
            const TruncatedValue l = dirichlet_L(s, limits.n_limit);
            const TruncatedValue dedekind = zeta * l;
            std::vector<NamedValue> rows{{"zeta", zeta},
                                         {"L_chi", l},
                                         {"dedekind_zeta_Qi", dedekind},
                                         {"inverse_dedekind_zeta_Qi", reciprocal(dedekind)}};
            if (s == 2) rows.push_back({"three_factor_product", coprime_constant_product(limits.prime_limit)});
            out << render_constants(rows, format);
        } else if (*density_cmd) {
            const DensityEstimate e = estimate_density(config, radius);
            out << render_density(e, config.ring, config.k, format);
        } else if (*lattice_cmd) {
            const GaussianInt g{lat_a, lat_b};
            if (g.is_zero()) throw UsageError("lattice: generator must be nonzero");
            const GaussianInt base{base_re, base_im};
            if (!MultiplicityLattice(g).contains(base))
                throw UsageError("lattice: base vertex " + to_string(base) + " is not in the lattice of " + to_string(g));
            const FundamentalDomain domain(g, base);
            out << render_lattice(domain, pick_identity_check(domain), format);
        } else if (*convergence_cmd) {
            const std::vector<std::int64_t> radii = parse_radii(radii_text);
            const double target = parse_target(target_text, config);
            const auto rows = convergence_table(radii, config, target);
            out << render_convergence(rows, target, format_given ? format : parse_output_format(conv_format));
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gaussprob

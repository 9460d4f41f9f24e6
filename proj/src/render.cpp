#include "gaussprob/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace gaussprob {

namespace {

using nlohmann::ordered_json;

// JSON has no infinity; an unbounded tail is written as null.
ordered_json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_exact(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string render_classification(const GaussianInt& z, const PrimeClass& c, OutputFormat format) {
    const std::int64_t n = norm(z);
    switch (format) {
        case OutputFormat::Text: {
            std::string s(to_string(c.tag));
            s += ", norm=" + std::to_string(n);
            if (c.rational_prime) s += ", p=" + std::to_string(*c.rational_prime);
            return s + "\n";
        }
        case OutputFormat::Csv:
            return std::string(kClassifyCsvHeader) + "\n" + std::to_string(z.re) + "," + std::to_string(z.im) + "," +
                   std::string(to_string(c.tag)) + "," + std::to_string(n) + "," +
                   (c.rational_prime ? std::to_string(*c.rational_prime) : "") + "\n";
        case OutputFormat::Json: {
            ordered_json j{{"re", z.re}, {"im", z.im}, {"class", to_string(c.tag)}, {"norm", n}};
            j["rational_prime"] = c.rational_prime ? ordered_json(*c.rational_prime) : ordered_json(nullptr);
            return dump(j);
        }
    }
    return {};
}

std::string render_gcd(const GaussianInt& g, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return to_string(g) + "\n";
        case OutputFormat::Csv:
            return std::string(kGcdCsvHeader) + "\n" + std::to_string(g.re) + "," + std::to_string(g.im) + "\n";
        case OutputFormat::Json: return dump({{"gcd", to_string(g)}, {"re", g.re}, {"im", g.im}});
    }
    return {};
}

std::string render_constants(std::span<const NamedValue> rows, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::Text: {
            char line[160];
            std::snprintf(line, sizeof line, "%-24s %-20s %s\n", "quantity", "value", "tail_bound");
            out += line;
            for (const auto& r : rows) {
                std::snprintf(line, sizeof line, "%-24s %-20s %s\n", r.name.c_str(), format_text(r.value.value).c_str(),
                              format_text(r.value.tail_bound).c_str());
                out += line;
            }
            return out;
        }
        case OutputFormat::Csv:
            out = std::string(kConstantsCsvHeader) + "\n";
            for (const auto& r : rows)
                out += r.name + "," + format_exact(r.value.value) + "," + format_exact(r.value.tail_bound) + "\n";
            return out;
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows)
                arr.push_back({{"quantity", r.name},
                               {"value", json_number(r.value.value)},
                               {"tail_bound", json_number(r.value.tail_bound)}});
            return dump({{"constants", arr}});
        }
    }
    return out;
}

std::string render_density(const DensityEstimate& e, Ring ring, int k, OutputFormat format) {
    const std::string ring_name(to_string(ring));
    const std::string mode_name(to_string(e.mode));
    const std::string k_text = std::to_string(ring == Ring::Gaussian ? 2 : k);
    switch (format) {
        case OutputFormat::Text: {
            std::string s = "ring=" + ring_name + " k=" + k_text + " mode=" + mode_name +
                            " radius=" + std::to_string(e.region_radius) + " hits=" + std::to_string(e.hits) +
                            " trials=" + std::to_string(e.trials) + " estimate=" + format_text(e.estimate);
            if (e.std_error) s += " std_error=" + format_text(*e.std_error);
            if (e.seed) s += " seed=" + std::to_string(*e.seed);
            return s + "\n";
        }
        case OutputFormat::Csv:
            return std::string(kDensityCsvHeader) + "\n" + ring_name + "," + k_text + "," + mode_name + "," +
                   std::to_string(e.region_radius) + "," + std::to_string(e.hits) + "," + std::to_string(e.trials) +
                   "," + format_exact(e.estimate) + "," + (e.std_error ? format_exact(*e.std_error) : "") + "," +
                   (e.seed ? std::to_string(*e.seed) : "") + "\n";
        case OutputFormat::Json: {
            ordered_json j{{"ring", ring_name},   {"k", std::stoi(k_text)},    {"mode", mode_name},
                           {"radius", e.region_radius}, {"hits", e.hits}, {"trials", e.trials},
                           {"estimate", e.estimate}};
            j["std_error"] = e.std_error ? ordered_json(*e.std_error) : ordered_json(nullptr);
            j["seed"] = e.seed ? ordered_json(*e.seed) : ordered_json(nullptr);
            return dump(j);
        }
    }
    return {};
}

std::string render_lattice(const FundamentalDomain& domain, const PickReport& report, OutputFormat format) {
    const GaussianInt& g = domain.generator();
    const GaussianInt& base = domain.base_vertex();
    const char* pick = report.holds() ? "ok" : "violated";
    switch (format) {
        case OutputFormat::Text:
            return "A=" + std::to_string(report.area) + " I=" + std::to_string(report.interior) +
                   " B=" + std::to_string(report.boundary) + " pick=" + pick + "\n";
        case OutputFormat::Csv:
            return std::string(kLatticeCsvHeader) + "\n" + std::to_string(g.re) + "," + std::to_string(g.im) + "," +
                   std::to_string(base.re) + "," + std::to_string(base.im) + "," + std::to_string(report.area) + "," +
                   std::to_string(report.interior) + "," + std::to_string(report.boundary) + "," + pick + "\n";
        case OutputFormat::Json:
            return dump({{"a", g.re},
                         {"b", g.im},
                         {"base_re", base.re},
                         {"base_im", base.im},
                         {"area", report.area},
                         {"interior", report.interior},
                         {"boundary", report.boundary},
                         {"pick", report.holds()}});
    }
    return {};
}

std::string render_convergence(std::span<const ConvergenceRow> rows, double target, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::Text:
            out = "target=" + format_text(target) + "\n";
            for (const auto& r : rows)
                out += "radius=" + std::to_string(r.radius) + " estimate=" + format_text(r.estimate) +
                       " abs_error=" + format_text(r.abs_error) + "\n";
            return out;
        case OutputFormat::Csv:
            out = std::string(kConvergenceCsvHeader) + "\n";
            for (const auto& r : rows)
                out += std::to_string(r.radius) + "," + format_exact(r.estimate) + "," + format_exact(r.abs_error) + "\n";
            return out;
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows)
                arr.push_back({{"radius", r.radius}, {"estimate", r.estimate}, {"abs_error", r.abs_error}});
            return dump({{"target", target}, {"rows", arr}});
        }
    }
    return out;
}

}  // namespace gaussprob

#pragma once

// Text / CSV / JSON rendering of results for the command-line tool.
// Text uses 12 significant digits; CSV and JSON use the shortest
// representation that parses back to the same double.

#include <span>
#include <string>
#include <string_view>

#include "gaussprob/density.hpp"
#include "gaussprob/gaussian.hpp"
#include "gaussprob/lattice.hpp"
#include "gaussprob/zeta.hpp"

namespace gaussprob {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_output_format(std::string_view name);

std::string format_text(double x);
std::string format_exact(double x);

struct NamedValue {
    std::string name;
    TruncatedValue value;
};

inline constexpr std::string_view kConstantsCsvHeader = "quantity,value,tail_bound";
inline constexpr std::string_view kDensityCsvHeader = "ring,k,mode,radius,hits,trials,estimate,std_error,seed";
inline constexpr std::string_view kConvergenceCsvHeader = "radius,estimate,abs_error";
inline constexpr std::string_view kLatticeCsvHeader = "a,b,base_re,base_im,area,interior,boundary,pick";
inline constexpr std::string_view kClassifyCsvHeader = "re,im,class,norm,rational_prime";
inline constexpr std::string_view kGcdCsvHeader = "re,im";

std::string render_classification(const GaussianInt& z, const PrimeClass& c, OutputFormat format);
std::string render_gcd(const GaussianInt& g, OutputFormat format);
std::string render_constants(std::span<const NamedValue> rows, OutputFormat format);
std::string render_density(const DensityEstimate& e, Ring ring, int k, OutputFormat format);
std::string render_lattice(const FundamentalDomain& domain, const PickReport& report, OutputFormat format);
std::string render_convergence(std::span<const ConvergenceRow> rows, double target, OutputFormat format);

}  // namespace gaussprob

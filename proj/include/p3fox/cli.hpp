#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "p3fox/ode.hpp"
#include "p3fox/painleve.hpp"
#include "p3fox/rational.hpp"

namespace p3fox::cli {

enum class Command { eval, asym, expand, trace, grid, verify };
enum class Format { csv, json };

struct AlphaScan {
    Rational lo, hi, step;
};

struct RunConfig {
    Command command = Command::eval;
    SolutionParams params{0, 0.0, Cylinder{1.0, 0.0}};
    std::optional<Rational> alpha_exact;  // set when --alpha is a real rational
    std::optional<cplx> x;
    cplx x0{0.05};
    std::vector<cplx> path;  // from --x1 or --path
    std::optional<GridSpec> rect;
    double tol = 1e-9;
    double budget = 12.0;
    std::optional<AlphaScan> scan;
    bool compare_asym = false;
    // Unset: JSON for single records (eval, asym without a scan), CSV otherwise.
    std::optional<Format> format;
    std::string output;  // empty for stdout
    std::uint64_t seed = 20240611;
};

// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
    std::string text;
};

// "1.5", "-223/225", "0.3-2i", "i". Throws UsageError.
cplx parse_complex(const std::string& text);
double parse_real(const std::string& text);

// Arguments without the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

// Writes the result to `out`; returns the exit code.
int run(const RunConfig& config, std::ostream& out);

// Full driver: parse, run, map errors to exit codes 2 (usage), 3 (domain)
// and 4 (numerical); verify failures exit 1.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace p3fox::cli

#ifndef BANALG_REPORT_HPP
#define BANALG_REPORT_HPP

#include "banalg/hochschild.hpp"
#include "banalg/localization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace banalg {

/// Default truncation order; the BANALG_ORDER environment variable
/// overrides it for the CLI.
constexpr int kDefaultOrder = 8;
constexpr int kDefaultTrials = 200;

struct RunOutcome {
    std::vector<std::string> lines;  // newline-delimited JSON objects
    bool ok = false;
};

struct CertifyRequest {
    std::string flavor = "poly";  // poly | tate(..) | formal | stein(..) | disc
    RingDescriptor ring = RingDescriptor::integers();
    int order = kDefaultOrder;
    int degree = kDefaultOrder;
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    long coeff_lo = -9;
    long coeff_hi = 9;
    std::optional<int> counterexample_n;
};
RunOutcome run_certify(const CertifyRequest& req);

struct StrictnessRequest {
    std::string flavor = "poly";
    RingDescriptor ring = RingDescriptor::rationals();
    int order = kDefaultOrder;
    std::uint64_t seed = 0;
};
RunOutcome run_check_strictness(const StrictnessRequest& req);

struct HepiRequest {
    std::string source = "poly";
    std::string target = "tate(1)";
    RingDescriptor ring = RingDescriptor::padic(2);
    int order = kDefaultOrder;
    std::uint64_t seed = 0;
};
RunOutcome run_verify_hepi(const HepiRequest& req);

struct LocalizeRequest {
    std::string kind = "weierstrass";  // weierstrass | laurent | rational | adic
    std::string base = "none";         // base flavor literal, or "none" for the ground ring
    std::string flavor = "tate(1)";    // adjoined 1-dimensional flavor (weierstrass/laurent/rational)
    std::string element;               // a (weierstrass/laurent)
    std::string g, f;                  // rational data
    std::string witness_a, witness_b;  // rational witnesses
    std::string generators;            // adic: comma-separated elements
    RingDescriptor ring = RingDescriptor::rationals();
    int order = kDefaultOrder;
    std::uint64_t seed = 0;
};
RunOutcome run_localize(const LocalizeRequest& req);

struct HHRequest {
    std::string model = "koszul";  // koszul | bar | hypersurface
    std::string flavor = "poly";
    std::string bar_algebra = "trunc";  // trunc | split | quotient
    std::string relation = "x^2";       // quotient/hypersurface relation
    RingDescriptor ring = RingDescriptor::rationals();
    int order = kDefaultOrder;
    int cutoff = 4;
    std::uint64_t seed = 0;
};
RunOutcome run_hh(const HHRequest& req);

/// One acceptance criterion outcome.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double ms = 0;
    std::string details;  // JSON object text, deterministic
};

/// Runs the full acceptance matrix (criteria 1..9) at the given seed and
/// order. Criterion 9 re-runs the first eight and compares the rendered
/// reports byte for byte, ignoring timing.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int order = kDefaultOrder);

/// NDJSON lines for the matrix subcommand; timing included unless
/// `with_timing` is false (the form used for determinism comparisons).
std::vector<std::string> render_criteria(const std::vector<CriterionResult>& results,
                                         bool with_timing);

RunOutcome run_matrix(std::uint64_t seed, int order = kDefaultOrder);

}  // namespace banalg

#endif

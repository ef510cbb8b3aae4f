#include "banalg/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

int default_order() {
    if (const char* env = std::getenv("BANALG_ORDER")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return banalg::kDefaultOrder;
}

int emit(const banalg::RunOutcome& outcome) {
    for (const std::string& line : outcome.lines) std::cout << line << "\n";
    return outcome.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"banalg: certified computations in truncated normed series algebras"};
    app.require_subcommand(1);

    const int order0 = default_order();
    std::string ring_text = "z";
    std::uint64_t seed = 0;
    int order = order0;

    banalg::CertifyRequest certify;
    auto* certify_cmd = app.add_subcommand("certify", "run division bound certificates");
    certify_cmd->add_option("--flavor", certify.flavor, "poly|tate(..)|formal|stein(..)|disc");
    certify_cmd->add_option("--degree", certify.degree, "max total degree of sampled inputs");
    certify_cmd->add_option("--trials", certify.trials, "number of randomized trials");
    certify_cmd->add_option("--coeff-lo", certify.coeff_lo, "coefficient range lower bound");
    certify_cmd->add_option("--coeff-hi", certify.coeff_hi, "coefficient range upper bound");
    int counterexample = -1;
    certify_cmd->add_option("--counterexample", counterexample,
                            "emit the disc counterexample certificate for this n");

    banalg::StrictnessRequest strict;
    auto* strict_cmd = app.add_subcommand("check-strictness", "diagonal strictness of a flavor");
    strict_cmd->add_option("--flavor", strict.flavor, "one-variable flavor literal");

    banalg::HepiRequest hepi;
    auto* hepi_cmd = app.add_subcommand("verify-hepi", "diagonal Koszul criterion for a map");
    hepi_cmd->add_option("--source", hepi.source, "source flavor literal");
    hepi_cmd->add_option("--target", hepi.target, "target flavor literal");

    banalg::LocalizeRequest loc;
    auto* loc_cmd = app.add_subcommand("localize", "derived localization complexes");
    loc_cmd->add_option("--kind", loc.kind, "weierstrass|laurent|rational|adic")->required();
    loc_cmd->add_option("--base", loc.base, "base flavor literal, or 'none' for the ground ring");
    loc_cmd->add_option("--flavor", loc.flavor, "adjoined one-dimensional flavor");
    loc_cmd->add_option("--element", loc.element, "element a of the base");
    loc_cmd->add_option("--g", loc.g, "rational localization denominator g");
    loc_cmd->add_option("--f", loc.f, "rational localization numerator f");
    loc_cmd->add_option("--witness-a", loc.witness_a, "witness a with a*f + b*g = 1");
    loc_cmd->add_option("--witness-b", loc.witness_b, "witness b with a*f + b*g = 1");
    loc_cmd->add_option("--generators", loc.generators, "adic: comma-separated elements");

    banalg::HHRequest hh;
    auto* hh_cmd = app.add_subcommand("hh", "Hochschild homology ranks");
    hh_cmd->add_option("--model", hh.model, "koszul|bar|hypersurface");
    hh_cmd->add_option("--flavor", hh.flavor, "algebra flavor literal (koszul/bar trunc)");
    hh_cmd->add_option("--bar-algebra", hh.bar_algebra, "trunc|split|quotient");
    hh_cmd->add_option("--relation", hh.relation, "quotient relation, e.g. x^2");
    hh_cmd->add_option("--cutoff", hh.cutoff, "homological cutoff");

    auto* matrix_cmd = app.add_subcommand("matrix", "run the full acceptance matrix");

    for (auto* cmd : {certify_cmd, strict_cmd, hepi_cmd, loc_cmd, hh_cmd, matrix_cmd}) {
        cmd->add_option("--ring", ring_text, "ground ring: z|q|padic:p[:prec]|trivial-z|trivial-q");
        cmd->add_option("--order", order, "truncation order (env BANALG_ORDER overrides default)");
        cmd->add_option("--seed", seed, "campaign seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(certify_cmd)) {
            certify.ring = banalg::parse_ring(ring_text);
            certify.order = order;
            certify.seed = seed;
            if (counterexample >= 0) certify.counterexample_n = counterexample;
            if (certify.degree > order) certify.degree = order;
            return emit(banalg::run_certify(certify));
        }
        if (app.got_subcommand(strict_cmd)) {
            strict.ring = banalg::parse_ring(ring_text == "z" ? "q" : ring_text);
            strict.order = order;
            strict.seed = seed;
            return emit(banalg::run_check_strictness(strict));
        }
        if (app.got_subcommand(hepi_cmd)) {
            hepi.ring = banalg::parse_ring(ring_text == "z" ? "padic:2" : ring_text);
            hepi.order = order;
            hepi.seed = seed;
            return emit(banalg::run_verify_hepi(hepi));
        }
        if (app.got_subcommand(loc_cmd)) {
            loc.ring = banalg::parse_ring(ring_text == "z" ? "q" : ring_text);
            loc.order = order;
            loc.seed = seed;
            return emit(banalg::run_localize(loc));
        }
        if (app.got_subcommand(hh_cmd)) {
            hh.ring = banalg::parse_ring(ring_text == "z" ? "q" : ring_text);
            hh.order = order;
            hh.seed = seed;
            return emit(banalg::run_hh(hh));
        }
        if (app.got_subcommand(matrix_cmd)) {
            return emit(banalg::run_matrix(seed, order));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "banalg: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "banalg: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

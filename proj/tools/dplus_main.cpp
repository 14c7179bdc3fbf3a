#include "dplus/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

using dplus::cli::Format;

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D-plus discriminant of polynomials with multiple roots, in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    Format format = Format::text;
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->capture_default_str();
    unsigned cap = dplus::kDefaultScaleCap;
    app.add_option("--cap", cap, "Largest degree for symbolic work")->capture_default_str();

    dplus::cli::ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "D+(p) from the coefficients of p");
    c->add_option("polynomial", compute.polynomial, "\"1,-5,7,-3\" or \"x^3-5x^2+7x-3\"")->required();
    c->add_flag("--show-mu", compute.show_mu, "Also list the square-free factors");
    c->add_flag("--show-gist", compute.show_gist, "Also print H_{n,m} and C_mu");

    dplus::cli::GistOptions gist;
    std::string mu;
    auto* g = app.add_subcommand("gist", "Print H_{n,m} and optionally C_mu");
    g->add_option("--n", gist.n, "Degree")->required();
    g->add_option("--m", gist.m, "Number of distinct roots")->required();
    g->add_option("--mu", mu, "Multiplicity vector, e.g. 2,1");

    unsigned pm = 0, pn = 0;
    auto* pc = app.add_subcommand("poisson-check", "Verify the symbolic Poisson identities for degrees (m, n)");
    pc->add_option("--m", pm, "Degree of A")->required();
    pc->add_option("--n", pn, "Degree of B")->required();

    dplus::cli::BoundOptions bound;
    std::string bound_poly;
    unsigned bn = 0, bl = 0;
    auto* b = app.add_subcommand("bound", "log(1/|D+(p)|) next to the 2n(ln n + L ln 2) ceiling");
    b->add_option("polynomial", bound_poly, "Integer polynomial with positive leading coefficient");
    auto* bn_opt = b->add_option("--n", bn, "Degree (ceiling only)");
    auto* bl_opt = b->add_option("--L", bl, "Bit length of the leading coefficient (ceiling only)");

    unsigned xn = 0, xm = 0;
    auto* px = app.add_subcommand("partition-max", "max prod mu_i^mu_i over m-partitions of n");
    px->add_option("--n", xn, "n")->required();
    px->add_option("--m", xm, "m")->required();

    dplus::cli::SelftestOptions self;
    auto* s = app.add_subcommand("selftest", "Regression checks against the worked examples");
    s->add_flag("--extended", self.extended, "Also run a seeded random oracle suite");
    s->add_option("--seed", self.seed, "Seed for --extended")->capture_default_str();
    s->add_option("--inject-fault", self.inject_fault, "Corrupt one check (for testing the harness)")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : dplus::cli::kUsage;
    }

    if (*c) {
        compute.format = format;
        compute.cap = cap;
        return dplus::cli::cmd_compute(compute, std::cout, std::cerr);
    }
    if (*g) {
        gist.format = format;
        gist.cap = cap;
        if (!mu.empty()) gist.mu = mu;
        return dplus::cli::cmd_gist(gist, std::cout, std::cerr);
    }
    if (*pc) return dplus::cli::cmd_poisson_check(pm, pn, format, std::cout, std::cerr);
    if (*b) {
        bound.format = format;
        bound.cap = cap;
        if (!bound_poly.empty()) bound.polynomial = bound_poly;
        if (*bn_opt) bound.n = bn;
        if (*bl_opt) bound.L = bl;
        return dplus::cli::cmd_bound(bound, std::cout, std::cerr);
    }
    if (*px) return dplus::cli::cmd_partition_max(xn, xm, format, std::cout, std::cerr);
    if (*s) return dplus::cli::cmd_selftest(self, std::cout, std::cerr);
    return dplus::cli::kUsage;
}

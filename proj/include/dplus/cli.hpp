#pragma once

// Command implementations behind the `dplus` executable. Each command writes its
// report to `out`, diagnostics to `err`, and returns the process exit code:
// 0 success, 1 usage or parse error, 2 domain error, 3 internal contract violation.

#include "dplus/bounds.hpp"
#include "dplus/dplus.hpp"
#include "dplus/gist.hpp"
#include "dplus/parse.hpp"
#include "dplus/poisson.hpp"
#include "dplus/resultant.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace dplus::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInternal = 3 };
enum class Format { text, json };

using Json = nlohmann::json;  // std::map-backed, so keys serialize in sorted order

/// Runs `body`, translating library exceptions into exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ScaleCapExceeded& e) {
        err << "scale cap: " << e.what() << "\n";
        return kDomain;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const ContractViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const NonExactDivision& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline Json parts_json(const MultiplicityVector& mu) { return Json(mu.parts()); }

struct ComputeOptions {
    std::string polynomial;
    Format format = Format::text;
    bool show_mu = false;
    bool show_gist = false;
    unsigned cap = kDefaultScaleCap;
};

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        UniPoly p = parse_polynomial(opt.polynomial);
        if (p.is_zero()) throw DomainError("the zero polynomial has no D+ discriminant");
        DPlusReport rep = dplus_from_coeffs(p, opt.cap);
        Decimal complexity = Decimal(rep.mu.n()) * rep.log_inverse;
        auto factors = opt.show_mu ? square_free_decomposition(p) : std::vector<std::pair<UniPoly, unsigned>>{};
        if (opt.format == Format::json) {
            Json j;
            j["command"] = "compute";
            j["input"] = p.str();
            Json coeffs = Json::array();
            for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
            j["coefficients"] = coeffs;
            j["n"] = rep.mu.n();
            j["m"] = rep.mu.m();
            j["mu"] = parts_json(rep.mu);
            j["dplus"] = rep.value.str();
            j["dplus_numerator"] = rep.value.numerator().get_str();
            j["dplus_denominator"] = rep.value.denominator().get_str();
            j["denominator_bound"] = rep.denominator_bound ? Json(rep.denominator_bound->get_str()) : Json(nullptr);
            j["log_inverse"] = decimal_str(rep.log_inverse);
            j["complexity_term"] = decimal_str(complexity);
            if (opt.show_mu) {
                Json fs = Json::array();
                for (const auto& [f, k] : factors) fs.push_back({{"factor", f.str()}, {"multiplicity", k}});
                j["square_free_factors"] = fs;
            }
            if (opt.show_gist) {
                j["gist"] = rep.gist ? Json{{"H", rep.gist->h->str()}, {"C_mu", rep.gist->c_mu.get_str()}}
                                     : Json(nullptr);
            }
            emit(out, j);
            return kOk;
        }
        out << "p = " << p.str() << "\n";
        out << "mu = " << rep.mu.str() << "\n";
        if (opt.show_mu)
            for (const auto& [f, k] : factors) out << "  factor (" << f.str() << ")^" << k << "\n";
        out << "D+ = " << rep.value << "\n";
        if (opt.show_gist) {
            if (rep.gist) {
                out << "H = " << *rep.gist->h << "\n";
                out << "C_mu = " << rep.gist->c_mu.get_str() << "\n";
            } else {
                out << "H = (none: single distinct root, D+ is the empty product)\n";
            }
        }
        if (rep.denominator_bound) out << "denominator bound = " << rep.denominator_bound->get_str() << "\n";
        out << "log(1/|D+|) = " << decimal_str(rep.log_inverse) << "\n";
        out << "cluster cost term = " << decimal_str(complexity) << "\n";
        return kOk;
    });
}

struct GistOptions {
    unsigned n = 0, m = 0;
    std::optional<std::string> mu;
    Format format = Format::text;
    unsigned cap = kDefaultScaleCap;
};

inline int cmd_gist(const GistOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_scale_cap(opt.n, opt.cap);
        if (opt.m < 2 || opt.m > opt.n) throw DomainError("gist needs 2 <= m <= n");
        std::optional<MultiplicityVector> mu;
        if (opt.mu) {
            mu = MultiplicityVector::parse(*opt.mu);
            if (mu->n() != opt.n || mu->m() != opt.m)
                throw DomainError("--mu " + mu->str() + " is not a partition of n = " + std::to_string(opt.n) +
                                  " into m = " + std::to_string(opt.m) + " parts");
        }
        auto h = cached_h_poly(opt.n, opt.m, opt.cap);
        if (opt.format == Format::json) {
            Json j{{"command", "gist"}, {"n", opt.n}, {"m", opt.m}, {"H", h->str()}, {"H_terms", h->size()}};
            if (mu) {
                j["mu"] = parts_json(*mu);
                j["C_mu"] = c_mu(*mu).get_str();
            }
            emit(out, j);
            return kOk;
        }
        out << "H = " << *h << "\n";
        if (mu) out << "C_mu = " << c_mu(*mu).get_str() << "\n";
        return kOk;
    });
}

inline int cmd_poisson_check(unsigned m, unsigned n, Format format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        PoissonReport rep = poisson_verify(m, n);
        if (format == Format::json) {
            emit(out, Json{{"command", "poisson-check"}, {"m", m}, {"n", n}, {"Q_a", rep.a}, {"Q_b", rep.b},
                           {"Q_ab", rep.ab}, {"pass", rep.all()}});
        } else {
            auto word = [](bool ok) { return ok ? "holds" : "FAILS"; };
            out << "m = " << m << ", n = " << n << "\n";
            out << "res(A,B) = Q_a  under V^a:       " << word(rep.a) << "\n";
            out << "res(A,B) = Q_b  under V^b:       " << word(rep.b) << "\n";
            out << "res(A,B) = Q_ab under V^a, V^b:  " << word(rep.ab) << "\n";
        }
        if (!rep.all()) {
            err << "symbolic Poisson identity failed\n";
            return kInternal;
        }
        return kOk;
    });
}

struct BoundOptions {
    std::optional<std::string> polynomial;
    std::optional<unsigned> n, L;
    Format format = Format::text;
    unsigned cap = kDefaultScaleCap;
};

inline int cmd_bound(const BoundOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!opt.polynomial) {
            if (!opt.n || !opt.L) throw std::invalid_argument("bound needs a polynomial or both --n and --L");
            Decimal b = dplus_log_bound(*opt.n, *opt.L);
            if (opt.format == Format::json)
                emit(out, Json{{"command", "bound"}, {"n", *opt.n}, {"L", *opt.L}, {"corollary_bound", decimal_str(b)}});
            else
                out << "2n(ln n + L ln 2) = " << decimal_str(b) << "\n";
            return kOk;
        }
        UniPoly p = parse_polynomial(*opt.polynomial);
        BoundReport rep = cluster_cost_term(p, opt.cap);
        if (opt.format == Format::json) {
            emit(out, Json{{"command", "bound"},
                           {"input", p.str()},
                           {"n", rep.n},
                           {"m", rep.m},
                           {"L", rep.L},
                           {"dplus", rep.dplus.str()},
                           {"log_inverse", decimal_str(rep.log_inverse)},
                           {"complexity_term", decimal_str(rep.complexity_term)},
                           {"corollary_bound", decimal_str(rep.corollary_bound)},
                           {"phi_max", decimal_str(rep.phi.value)},
                           {"f_max", rep.f_max.get_str()},
                           {"within_bound", rep.within_bound()}});
        } else {
            out << "p = " << p.str() << "\n";
            out << "n = " << rep.n << ", m = " << rep.m << ", L = " << rep.L << "\n";
            out << "D+ = " << rep.dplus << "\n";
            out << "log(1/|D+|) = " << decimal_str(rep.log_inverse) << "\n";
            out << "2n(ln n + L ln 2) = " << decimal_str(rep.corollary_bound) << "\n";
            out << "cluster cost term = " << decimal_str(rep.complexity_term) << "\n";
            out << "within bound: " << (rep.within_bound() ? "yes" : "NO") << "\n";
        }
        if (!rep.within_bound()) {
            err << "log(1/|D+|) exceeds the a-priori ceiling\n";
            return kInternal;
        }
        return kOk;
    });
}

inline int cmd_partition_max(unsigned n, unsigned m, Format format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        FMax f = f_max_bruteforce(n, m);
        PhiMax phi = phi_max(n, m);
        Decimal ln_f = ln(f.value);
        if (format == Format::json) {
            emit(out, Json{{"command", "partition-max"},
                           {"n", n},
                           {"m", m},
                           {"f_max", f.value.get_str()},
                           {"argmax", parts_json(f.argmax)},
                           {"maximizers", f.maximizers},
                           {"partitions", f.partitions},
                           {"ln_f_max", decimal_str(ln_f)},
                           {"phi_max", decimal_str(phi.value)}});
        } else {
            out << "F_{" << n << "," << m << "} = " << f.value.get_str() << " at " << f.argmax.str() << " ("
                << f.partitions << " partitions, " << f.maximizers << " maximizer)\n";
            out << "ln F = " << decimal_str(ln_f) << "\n";
            out << "Phi  = " << decimal_str(phi.value) << "\n";
        }
        return kOk;
    });
}

struct SelftestOptions {
    bool extended = false;
    std::uint64_t seed = 20210402;
    std::string inject_fault;  // name of a check whose computed value is corrupted
};

inline int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        struct Check {
            std::string name;
            std::function<std::optional<std::string>()> run;  // divergence description, if any
        };
        auto mismatch = [](const std::string& expected, const std::string& got) -> std::optional<std::string> {
            if (expected == got) return std::nullopt;
            return "expected " + expected + ", got " + got;
        };
        bool corrupt = false;
        auto tamper = [&](const std::string& name, std::string value) {
            if (opt.inject_fault == name) {
                corrupt = true;
                return value.empty() || value[0] != '-' ? "-" + value : value.substr(1);
            }
            return value;
        };

        std::vector<Check> checks;
        checks.push_back({"example1_dplus", [&] {
            auto rep = dplus_from_coeffs(UniPoly{1, -5, 7, -3});
            return mismatch("-8 (2,1)", tamper("example1_dplus", rep.value.str()) + " " + rep.mu.str());
        }});
        checks.push_back({"example1_closed_form", [&] {
            Rational a0(1), a1(-5), a2(7), a3(-3);
            Rational v = (pow(a1, 3) - Rational(9, 2) * a0 * a1 * a2 + Rational(27, 2) * a0 * a0 * a3) / pow(a0, 3);
            return mismatch("-8", tamper("example1_closed_form", v.str()));
        }});
        checks.push_back({"discriminant_n3", [&] {
            VarTable c = generic_coeff_table(3);
            auto expected = parse_multipoly(
                "-4*c1^3*c3 + c1^2*c2^2 + 18*c0*c1*c2*c3 - 4*c0*c2^3 - 27*c0^2*c3^2", c);
            return mismatch(expected.str(), tamper("discriminant_n3", discriminant_symbolic(3).str()));
        }});
        checks.push_back({"derivative_c3", [&] {
            VarTable c = generic_coeff_table(3);
            auto expected = parse_multipoly("-4*c1^3 + 18*c0*c1*c2 - 54*c0^2*c3", c);
            return mismatch(expected.str(),
                            tamper("derivative_c3", discriminant_symbolic(3).partial_derivative("c3").str()));
        }});
        checks.push_back({"h_3_2", [&] {
            return mismatch("4*z1^3 - 18*z1*z2 + 54*z3", tamper("h_3_2", h_poly(3, 2).str()));
        }});
        checks.push_back({"c_mu", [&] {
            return mismatch("-4", tamper("c_mu", c_mu(MultiplicityVector{2, 1}).get_str()));
        }});
        for (auto [pm, pn] : {std::pair{1u, 1u}, std::pair{2u, 2u}}) {
            std::string name = "poisson_" + std::to_string(pm) + "_" + std::to_string(pn);
            checks.push_back({name, [&, pm, pn, name] {
                auto rep = poisson_verify(pm, pn);
                std::string got = std::string(rep.a ? "1" : "0") + (rep.b ? "1" : "0") + (rep.ab ? "1" : "0");
                return mismatch("111", tamper(name, got));
            }});
        }
        checks.push_back({"partition_5_2", [&] {
            auto f = f_max_bruteforce(5, 2);
            return mismatch("256 (4,1)", tamper("partition_5_2", f.value.get_str()) + " " + f.argmax.str());
        }});

        if (opt.extended) {
            out << "extended oracle suite, seed " << opt.seed << "\n";
            checks.push_back({"random_oracle", [&]() -> std::optional<std::string> {
                std::mt19937_64 rng(opt.seed);
                for (int t = 0; t < 60; ++t) {
                    unsigned n = 2 + rng() % 5;
                    unsigned m = 1 + rng() % n;
                    auto parts = partitions(n, m);
                    auto mu = parts[rng() % parts.size()];
                    std::vector<Rational> r;
                    while (r.size() < m) {
                        Rational v(Integer(static_cast<long>(rng() % 41) - 20), Integer(static_cast<long>(1 + rng() % 20)));
                        if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
                    }
                    Rational lead(static_cast<long>(1 + rng() % 10));
                    auto rep = dplus_from_coeffs(build_poly_from_roots(mu, r, lead));
                    auto want = dplus_from_roots(mu, r);
                    if (rep.value != want)
                        return "case " + std::to_string(t) + " mu " + mu.str() + ": expected " + want.str() + ", got " +
                               rep.value.str();
                }
                return std::nullopt;
            }});
        }

        std::size_t passed = 0;
        for (const auto& c : checks) {
            auto divergence = c.run();
            if (divergence) {
                out << "FAIL " << c.name << ": " << *divergence << "\n";
                out << passed << " of " << checks.size() << " checks passed before the first failure\n";
                err << "selftest failed at " << c.name << "\n";
                return kInternal;
            }
            out << "ok   " << c.name << "\n";
            ++passed;
        }
        if (!opt.inject_fault.empty() && !corrupt) {
            err << "unknown fault target " << opt.inject_fault << "\n";
            return kUsage;
        }
        out << passed << " checks passed\n";
        return kOk;
    });
}

}  // namespace dplus::cli

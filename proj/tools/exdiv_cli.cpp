#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <json.hpp>
#include <string>
#include <vector>

#include "exdiv/arith.hpp"
#include "exdiv/fields.hpp"
#include "exdiv/ideal.hpp"
#include "exdiv/ideal_json.hpp"
#include "exdiv/oracle.hpp"
#include "exdiv/verify.hpp"

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json = false;
    bool quiet = false;
};

std::string rat_str(const exdiv::BigRat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return r.str();
}

void emit_json(const Options& opt, const std::string& command, ordered_json inputs,
               ordered_json result, const std::string& status) {
    ordered_json envelope{{"schema_version", kSchemaVersion},
                          {"command", command},
                          {"inputs", std::move(inputs)},
                          {"result", std::move(result)},
                          {"status", status}};
    std::cout << envelope.dump(2) << "\n";
    (void)opt;
}

ordered_json report_json(const exdiv::InequalityReport& r) {
    ordered_json j{{"claim_id", r.claim_id},
                   {"witness", r.witness},
                   {"lhs", rat_str(r.lhs)},
                   {"relation", exdiv::relation_symbol(r.relation)}};
    if (r.mid) {
        j["mid"] = rat_str(*r.mid);
        j["upper_relation"] = exdiv::relation_symbol(*r.upper_relation);
    }
    j["rhs"] = rat_str(r.rhs);
    j["holds"] = r.holds;
    j["is_equality"] = r.is_equality;
    return j;
}

std::string report_line(const exdiv::InequalityReport& r) {
    std::string s = r.claim_id + " [" + r.witness + "]: " + rat_str(r.lhs) + " " +
                    exdiv::relation_symbol(r.relation) + " ";
    if (r.mid)
        s += rat_str(*r.mid) + " " + exdiv::relation_symbol(*r.upper_relation) + " ";
    s += rat_str(r.rhs);
    s += r.holds ? (r.is_equality ? "  (equality)" : "  (holds)") : "  VIOLATED";
    return s;
}

std::string list_str(const std::vector<std::uint64_t>& v, std::uint64_t max_list) {
    if (v.size() > max_list) return "(" + std::to_string(v.size()) + " entries, elided)";
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

int cmd_arith(const Options& opt, std::uint64_t n, std::uint64_t max_list) {
    auto f = exdiv::factorize(n);
    auto ds = exdiv::divisors(n);
    auto eds = exdiv::exponential_divisors(n);

    std::string fact;
    for (std::size_t i = 0; i < f.pairs.size(); ++i) {
        if (i) fact += " * ";
        fact += std::to_string(f.pairs[i].prime);
        if (f.pairs[i].exponent > 1) fact += "^" + std::to_string(f.pairs[i].exponent);
    }
    if (fact.empty()) fact = "1";

    if (opt.json) {
        ordered_json factj = ordered_json::array();
        for (const auto& [p, a] : f.pairs)
            factj.push_back({{"prime", std::to_string(p)}, {"exponent", std::to_string(a)}});
        ordered_json result{{"factorization", std::move(factj)},
                            {"tau", std::to_string(exdiv::tau(f))},
                            {"tau_star", std::to_string(exdiv::tau_star(n))},
                            {"tau_e", std::to_string(exdiv::tau_e(f))},
                            {"omega", std::to_string(exdiv::omega(n))},
                            {"big_omega", std::to_string(exdiv::big_omega(n))},
                            {"phi", std::to_string(exdiv::euler_phi(n))}};
        auto lst = [&](const std::vector<std::uint64_t>& v) {
            ordered_json a = ordered_json::array();
            if (v.size() <= max_list)
                for (auto x : v) a.push_back(std::to_string(x));
            return ordered_json{{"count", std::to_string(v.size())}, {"values", a}};
        };
        result["divisors"] = lst(ds);
        result["exponential_divisors"] = lst(eds);
        emit_json(opt, "arith", {{"n", std::to_string(n)}}, std::move(result), "ok");
    } else if (!opt.quiet) {
        std::cout << "n = " << n << "\n"
                  << "factorization = " << fact << "\n"
                  << "tau = " << exdiv::tau(f) << "\n"
                  << "tau_star = " << exdiv::tau_star(n) << "\n"
                  << "tau_e = " << exdiv::tau_e(f) << "\n"
                  << "omega = " << exdiv::omega(n) << "\n"
                  << "big_omega = " << exdiv::big_omega(n) << "\n"
                  << "phi = " << exdiv::euler_phi(n) << "\n"
                  << "divisors = " << list_str(ds, max_list) << "\n"
                  << "exponential_divisors = " << list_str(eds, max_list) << "\n";
    }
    return kExitOk;
}

int cmd_split(const Options& opt, const std::string& subtype, const ordered_json& inputs,
              const exdiv::SplittingType& s, const exdiv::FactoredIdeal& I) {
    exdiv::BigInt t = exdiv::tau_ideal(I);
    exdiv::BigInt te = exdiv::tau_e_ideal(I);
    std::uint64_t om = exdiv::omega_ideal(I);
    if (opt.json) {
        ordered_json result{{"field", I.field_tag},
                            {"e", std::to_string(s.e)},
                            {"f", std::to_string(s.f)},
                            {"g", std::to_string(s.g)},
                            {"degree", std::to_string(s.n)},
                            {"ideal", exdiv::to_text(I)},
                            {"factors", exdiv::to_json(I)},
                            {"tau", t.str()},
                            {"tau_e", te.str()},
                            {"omega", std::to_string(om)}};
        emit_json(opt, "split " + subtype, inputs, std::move(result), "ok");
    } else if (!opt.quiet) {
        std::cout << "field = " << I.field_tag << "\n"
                  << "e = " << s.e << ", f = " << s.f << ", g = " << s.g
                  << " (degree " << s.n << ")\n"
                  << "ideal = " << exdiv::to_text(I) << "\n";
        for (const auto& fac : I.factors)
            if (!fac.label.description.empty())
                std::cout << "P" << fac.label.index << " = " << fac.label.description
                          << "\n";
        std::cout << "tau = " << t << "\n"
                  << "tau_e = " << te << "\n"
                  << "omega = " << om << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& claim, const exdiv::SweepRange& r,
               const ordered_json& inputs) {
    exdiv::SweepResult res = exdiv::sweep(claim, r);
    bool ok = res.violations.empty();
    if (opt.json) {
        ordered_json viols = ordered_json::array();
        for (const auto& v : res.violations) viols.push_back(report_json(v));
        ordered_json eqs = ordered_json::array();
        for (const auto& e : res.equalities) eqs.push_back(report_json(e));
        ordered_json result{{"claim", claim},
                            {"checked", std::to_string(res.checked)},
                            {"violations", std::move(viols)},
                            {"equality_count", std::to_string(res.equality_count)},
                            {"equalities", std::move(eqs)}};
        emit_json(opt, "verify", inputs, std::move(result), ok ? "ok" : "violation");
    } else if (!opt.quiet) {
        std::cout << "claim = " << claim << "\n"
                  << "checked = " << res.checked << "\n"
                  << "violations = " << res.violations.size() << "\n";
        for (const auto& v : res.violations) std::cout << "  " << report_line(v) << "\n";
        std::cout << "equalities = " << res.equality_count << "\n";
        for (const auto& e : res.equalities) std::cout << "  " << report_line(e) << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

struct OracleOutcome {
    std::uint64_t checked = 0;
    bool ok = true;
    std::string first_disagreement;
};

int finish_oracle(const Options& opt, const std::string& suite, const ordered_json& inputs,
                  const OracleOutcome& out) {
    if (opt.json) {
        ordered_json result{{"suite", suite},
                            {"checked", std::to_string(out.checked)},
                            {"pass", out.ok}};
        if (!out.ok) result["first_disagreement"] = out.first_disagreement;
        emit_json(opt, "oracle-check", inputs, std::move(result),
                  out.ok ? "ok" : "violation");
    } else if (!opt.quiet) {
        std::cout << "suite = " << suite << "\n"
                  << "checked = " << out.checked << "\n"
                  << (out.ok ? "pass" : "FAIL: " + out.first_disagreement) << "\n";
    }
    return out.ok ? kExitOk : kExitViolation;
}

OracleOutcome oracle_tau(std::uint64_t max_n) {
    OracleOutcome out;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        ++out.checked;
        if (exdiv::oracle::brute_tau(n) != exdiv::tau(n)) {
            out.ok = false;
            out.first_disagreement = "tau mismatch at n=" + std::to_string(n);
            return out;
        }
        if (n >= 2 &&
            exdiv::oracle::brute_exponential_divisors(n).size() != exdiv::tau_e(n)) {
            out.ok = false;
            out.first_disagreement = "tau_e mismatch at n=" + std::to_string(n);
            return out;
        }
    }
    return out;
}

OracleOutcome oracle_quadratic(std::uint64_t max_d, std::uint64_t max_p) {
    OracleOutcome out;
    for (std::int64_t d = -static_cast<std::int64_t>(max_d);
         d <= static_cast<std::int64_t>(max_d); ++d) {
        if (d == 0 || d == 1 || !exdiv::is_squarefree(d)) continue;
        exdiv::QuadraticField K = exdiv::make_quadratic_field(d);
        for (std::uint64_t p = 2; p <= max_p; ++p) {
            if (!exdiv::is_prime(p)) continue;
            ++out.checked;
            auto [s, I] = exdiv::split_quadratic(K, p);
            if (s != exdiv::oracle::dedekind_quadratic_oracle(d, p)) {
                out.ok = false;
                out.first_disagreement =
                    "d=" + std::to_string(d) + " p=" + std::to_string(p);
                return out;
            }
        }
    }
    return out;
}

OracleOutcome oracle_order(std::uint64_t max_n) {
    OracleOutcome out;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        for (std::uint64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            ++out.checked;
            if (exdiv::oracle::brute_order(a, n) != exdiv::multiplicative_order(a, n)) {
                out.ok = false;
                out.first_disagreement =
                    "a=" + std::to_string(a) + " n=" + std::to_string(n);
                return out;
            }
        }
    }
    return out;
}

OracleOutcome oracle_kummer(std::uint64_t l, std::uint64_t max_p, std::uint64_t max_mu) {
    OracleOutcome out;
    std::vector<std::uint64_t> ls = l == 0 ? std::vector<std::uint64_t>{3, 5}
                                           : std::vector<std::uint64_t>{l};
    for (std::uint64_t li : ls) {
        for (std::uint64_t p = 2; p <= max_p; ++p) {
            if (!exdiv::is_prime(p) || p == li) continue;
            if (exdiv::multiplicative_order(p, li) != li - 1) continue;
            exdiv::KummerField K{li, 1};
            for (std::int64_t mu = -static_cast<std::int64_t>(max_mu);
                 mu <= static_cast<std::int64_t>(max_mu); ++mu) {
                if (mu == 0) continue;
                K.mu = mu;
                ++out.checked;
                if (exdiv::power_residue_character(K, p) !=
                    exdiv::oracle::brute_character(li, mu, p)) {
                    out.ok = false;
                    out.first_disagreement = "l=" + std::to_string(li) +
                                             " mu=" + std::to_string(mu) +
                                             " p=" + std::to_string(p);
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized divisor functions and prime-ideal splitting"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON envelope on stdout");
    app.add_flag("--quiet", opt.quiet, "suppress text output (exit code only)");

    // arith
    std::uint64_t arith_n = 0;
    std::uint64_t max_list = 64;
    auto* arith = app.add_subcommand("arith", "arithmetic functions of n");
    arith->add_option("n", arith_n, "positive integer")->required();
    arith->add_option("--max-list", max_list, "elide enumerations longer than this");

    // split
    auto* split = app.add_subcommand("split", "prime decomposition in a number field");
    split->require_subcommand(1);
    std::int64_t q_d = 0;
    std::uint64_t q_p = 0;
    auto* quad = split->add_subcommand("quadratic", "Q(sqrt(d))");
    quad->add_option("--d", q_d, "squarefree d, not 0 or 1")->required();
    quad->add_option("--p", q_p, "rational prime")->required();
    std::uint64_t c_n = 0, c_p = 0;
    auto* cyc = split->add_subcommand("cyclotomic", "Q(zeta_n)");
    cyc->add_option("--n", c_n, "n >= 3")->required();
    cyc->add_option("--p", c_p, "rational prime")->required();
    std::uint64_t k_l = 0, k_p = 0;
    std::int64_t k_mu = 0;
    auto* kum = split->add_subcommand("kummer", "Q(zeta_l, mu^(1/l))");
    kum->add_option("--l", k_l, "odd prime l")->required();
    kum->add_option("--mu", k_mu, "nonzero rational mu")->required();
    kum->add_option("--p", k_p, "rational prime with pZ[zeta_l] prime")->required();

    // verify
    std::string claim;
    exdiv::SweepRange flags;
    auto* verify = app.add_subcommand("verify", "sweep a claim over a range");
    verify->add_option("claim", claim, "claim id")->required();
    verify->add_option("--max-n", flags.max_n);
    verify->add_option("--max-m", flags.max_m);
    verify->add_option("--max-e", flags.max_e);
    verify->add_option("--max-g", flags.max_g);
    verify->add_option("--max-exp", flags.max_exp);
    verify->add_option("--max-d", flags.max_d);
    verify->add_option("--max-p", flags.max_p);
    verify->add_option("--max-cyc-n", flags.max_cyc_n);
    verify->add_option("--max-cyc-p", flags.max_cyc_p);

    // oracle-check
    std::string suite;
    std::uint64_t o_max_n = 0, o_max_d = 0, o_max_p = 0, o_l = 0, o_max_mu = 0;
    auto* ocheck = app.add_subcommand("oracle-check", "closed form vs brute force");
    ocheck->add_option("suite", suite, "one of: tau, quadratic, order, kummer")
        ->required();
    ocheck->add_option("--max-n", o_max_n);
    ocheck->add_option("--max-d", o_max_d);
    ocheck->add_option("--max-p", o_max_p);
    ocheck->add_option("--l", o_l);
    ocheck->add_option("--max-mu", o_max_mu);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*arith) {
            if (arith_n == 0) throw std::domain_error("arith: n must be positive");
            return cmd_arith(opt, arith_n, max_list);
        }
        if (*split) {
            if (*quad) {
                auto [s, I] = exdiv::split_quadratic(exdiv::make_quadratic_field(q_d), q_p);
                return cmd_split(opt, "quadratic",
                                 {{"d", std::to_string(q_d)}, {"p", std::to_string(q_p)}},
                                 s, I);
            }
            if (*cyc) {
                auto [s, I] = exdiv::split_cyclotomic(exdiv::make_cyclotomic_field(c_n), c_p);
                return cmd_split(opt, "cyclotomic",
                                 {{"n", std::to_string(c_n)}, {"p", std::to_string(c_p)}},
                                 s, I);
            }
            auto [s, I] = exdiv::split_kummer(exdiv::make_kummer_field(k_l, k_mu), k_p);
            return cmd_split(opt, "kummer",
                             {{"l", std::to_string(k_l)},
                              {"mu", std::to_string(k_mu)},
                              {"p", std::to_string(k_p)}},
                             s, I);
        }
        if (*verify) {
            exdiv::SweepRange range = exdiv::default_range(claim);
            auto merge = [](std::uint64_t& dst, std::uint64_t src) {
                if (src != 0) dst = src;
            };
            merge(range.max_n, flags.max_n);
            merge(range.max_m, flags.max_m);
            merge(range.max_e, flags.max_e);
            merge(range.max_g, flags.max_g);
            merge(range.max_exp, flags.max_exp);
            merge(range.max_d, flags.max_d);
            merge(range.max_p, flags.max_p);
            merge(range.max_cyc_n, flags.max_cyc_n);
            merge(range.max_cyc_p, flags.max_cyc_p);
            ordered_json inputs{{"claim", claim}};
            return cmd_verify(opt, claim, range, inputs);
        }
        if (*ocheck) {
            OracleOutcome out;
            ordered_json inputs{{"suite", suite}};
            if (suite == "tau") {
                out = oracle_tau(o_max_n ? o_max_n : 100000);
            } else if (suite == "quadratic") {
                out = oracle_quadratic(o_max_d ? o_max_d : 100, o_max_p ? o_max_p : 1000);
            } else if (suite == "order") {
                out = oracle_order(o_max_n ? o_max_n : 200);
            } else if (suite == "kummer") {
                out = oracle_kummer(o_l, o_max_p ? o_max_p : 100, o_max_mu ? o_max_mu : 100);
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitUsage;
            }
            return finish_oracle(opt, suite, inputs, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include "mbar_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbar/closed_forms.hpp"
#include "mbar/errors.hpp"
#include "mbar/functional_eq.hpp"
#include "mbar/gk_engine.hpp"
#include "mbar/graph_oracle.hpp"

namespace mbar::cli {

using Json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kMethods = {"quadratic",   "linear",   "closed_form", "functional_eq",
                                           "graph_oracle", "gk_dtilde", "gk_virasoro", "gk_wick"};

Provenance parse_provenance(const std::string& s) {
    for (auto p : {Provenance::Base, Provenance::Quadratic, Provenance::Linear, Provenance::GenusOperator})
        if (s == to_string(p)) return p;
    throw DomainError("unknown provenance '" + s + "' in cache");
}

std::string decimal(const Rat& r) {
    std::ostringstream os;
    os << std::setprecision(12) << r.get_d();
    return os.str();
}

Rat power(const Rat& x, int e) {
    if (e < 0) {
        if (x == 0) throw DomainError("t = 0 with a negative t exponent");
        return Rat(1) / power(x, -e);
    }
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Drops the explicit kappa factor of n kappa chi~_{0,n}.
KPoly divide_by_kappa(const KPoly& p) {
    const auto& cs = p.coeffs();
    if (!cs.empty() && cs[0] != 0) throw DomainError("series coefficient is not divisible by kappa");
    return KPoly(std::vector<Rat>(cs.begin() + (cs.empty() ? 0 : 1), cs.end()));
}

KPoly refined_by_method(ChiTable& table, int g, int n, const std::string& method, int budget) {
    require_stable(g, n);
    if (method == "quadratic") return table.chi_tilde_quadratic(g, n);
    if (method == "linear") return table.chi_tilde_linear(g, n);
    if (method == "closed_form") return chi_tilde_closed_form(g, n, table);
    if (method == "functional_eq") {
        if (g != 0) throw DomainError("functional_eq computes genus 0 only");
        const YSeries chi = solve_chi0(n - 1);
        return divide_by_kappa(chi[static_cast<std::size_t>(n - 1)]) * Rat(1, n);
    }
    if (method == "graph_oracle") return feynman_sum(g, n, OracleBudget{budget}).poly;
    if (method.rfind("gk_", 0) == 0) {
        if (n != 0 || g < 2) throw DomainError(method + " computes (g, 0) with g >= 2 only");
        const GkMethod m = method == "gk_virasoro" ? GkMethod::Virasoro
                           : method == "gk_wick"   ? GkMethod::Wick
                                                   : GkMethod::Dtilde;
        return chi_tilde_g0_via_gk(g, m);
    }
    throw DomainError("unknown method '" + method + "'");
}

Json kpoly_json(const KPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

struct Common {
    std::string cache;
    int budget = 3;
};

class CacheScope {
public:
    CacheScope(const std::string& path, ChiTable& table) : path_(path), table_(table) {
        if (!path_.empty() && std::filesystem::exists(path_)) load_cache(path_, table_);
    }
    void commit() const {
        if (!path_.empty()) save_cache(path_, table_);
    }

private:
    std::string path_;
    ChiTable& table_;
};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"tables", "cross_method", "oracle", "gk",
                                                   "closed_forms", "shor", "functional"};
    return names;
}

void load_cache(const std::string& path, ChiTable& table) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read cache " + path);
    Json doc;
    try {
        doc = Json::parse(in);
        for (const auto& e : doc.at("entries")) {
            std::vector<Rat> cs;
            for (const auto& c : e.at("kpoly")) cs.push_back(parse_rat(c.get<std::string>()));
            table.insert(e.at("g").get<int>(), e.at("n").get<int>(), KPoly(std::move(cs)),
                         parse_provenance(e.at("provenance").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError("malformed cache " + path + ": " + ex.what());
    }
}

void save_cache(const std::string& path, const ChiTable& table) {
    Json entries = Json::array();
    for (const auto& [key, val] : table.snapshot()) {
        entries.push_back({{"g", key.first}, {"n", key.second}, {"kpoly", kpoly_json(val.first)},
                           {"provenance", to_string(val.second)}});
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write cache " + path);
    out << Json{{"entries", entries}}.dump(1) << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact orbifold Euler characteristics of moduli spaces of stable curves", "moduli-euler"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    Common common;
    auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", common.cache, "JSON file used to load and store the chi table")
            ->envname("MODULI_EULER_CACHE");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", common.budget, "largest dimension 3g-3+n the graph oracle may enumerate")
            ->envname("MODULI_EULER_BUDGET")
            ->check(CLI::NonNegativeNumber);
    };

    // chi
    int g = 0, n = 0;
    bool refined = false, json = false, want_decimal = false;
    std::string kappa_text, t_text, method = "linear";
    auto* chi = app.add_subcommand("chi", "chi(Mbar_{g,n}) or the refined chi_{g,n}(t, kappa)");
    chi->add_option("--g", g, "genus")->required();
    chi->add_option("--n", n, "number of marked points")->required();
    chi->add_flag("--refined", refined, "print chi~_{g,n}(kappa) and the t exponent");
    chi->add_option("--kappa", kappa_text, "evaluate n! chi_{g,n}(t, kappa) at this kappa");
    chi->add_option("--t", t_text, "evaluate n! chi_{g,n}(t, kappa) at this t");
    chi->add_option("--method", method)->check(CLI::IsMember(kMethods))->envname("MODULI_EULER_METHOD");
    chi->add_flag("--json", json);
    chi->add_flag("--decimal", want_decimal, "append an approximate decimal value");
    add_cache(chi);
    add_budget(chi);

    // table
    int g_max = 2, n_max = 6;
    std::string format = "csv";
    auto* table_cmd = app.add_subcommand("table", "chi(Mbar_{g,n}) for all stable (g,n) within bounds");
    table_cmd->add_option("--g-max", g_max)->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_option("--method", method)->check(CLI::IsMember(kMethods))->envname("MODULI_EULER_METHOD");
    add_cache(table_cmd);
    add_budget(table_cmd);

    // gk
    int k = 1, series_order = -1;
    std::string gk_method = "dtilde";
    auto* gk_cmd = app.add_subcommand("gk", "the V-polynomial G_k");
    gk_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    gk_cmd->add_option("--method", gk_method)->check(CLI::IsMember({"dtilde", "virasoro", "wick"}));
    gk_cmd->add_option("--series", series_order, "also print G_k(z) up to z^{-2N}");
    gk_cmd->add_flag("--json", json);

    // oracle
    std::string oracle_format = "text";
    auto* oracle = app.add_subcommand("oracle", "enumerate stable graphs and evaluate the Feynman sum");
    oracle->add_option("--g", g)->required();
    oracle->add_option("--n", n)->required();
    oracle->add_option("--format", oracle_format)->check(CLI::IsMember({"text", "json", "dot"}));
    add_budget(oracle);

    // closed-form
    int order = 8, p_index = -1;
    bool blocks = false, audit = false;
    auto* cf = app.add_subcommand("closed-form", "coefficients a_{g,n}^k from the closed-form expansions");
    cf->add_option("--g", g)->required()->check(CLI::NonNegativeNumber);
    cf->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    cf->add_option("--p", p_index, "genus >= 2: print the single family A_{g,k}^p");
    cf->add_option("--order", order, "largest n")->envname("MODULI_EULER_ORDER")->check(CLI::NonNegativeNumber);
    cf->add_flag("--blocks", blocks, "print the s-space blocks instead of x coefficients");
    cf->add_flag("--audit", audit, "compare every printed block with the exact ODE solution");

    // verify
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite)->required();
    add_cache(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }

    ChiTable table;
    try {
        if (chi->parsed()) {
            CacheScope cache(common.cache, table);
            const KPoly poly = refined_by_method(table, g, n, method, common.budget);
            const int t_exp = 2 - 2 * g - n;
            const Rat kap = kappa_text.empty() ? Rat(1) : parse_rat(kappa_text);
            const Rat t = t_text.empty() ? Rat(1) : parse_rat(t_text);
            const Rat value = Rat(factorial(static_cast<unsigned>(n))) * poly.eval(kap) * power(t, t_exp);
            if (json) {
                Json rec{{"g", g}, {"n", n}, {"value", to_string(value)}, {"method", method}};
                if (refined) {
                    rec["kpoly"] = kpoly_json(poly);
                    rec["t_exp"] = t_exp;
                }
                if (want_decimal) rec["approx"] = decimal(value);
                out << rec.dump() << "\n";
            } else if (refined) {
                out << poly.to_string() << "\n" << "t_exp " << t_exp << "\n";
                if (!kappa_text.empty() || !t_text.empty()) out << to_string(value) << "\n";
            } else {
                out << to_string(value);
                if (want_decimal) out << "  (approx " << decimal(value) << ")";
                out << "\n";
            }
            cache.commit();
            return Ok;
        }
        if (table_cmd->parsed()) {
            CacheScope cache(common.cache, table);
            Json arr = Json::array();
            if (format == "csv") out << "g,n,value,method\n";
            for (int gg = 0; gg <= g_max; ++gg) {
                for (int nn = 0; nn <= n_max; ++nn) {
                    if (!is_stable(gg, nn)) continue;
                    const KPoly poly = refined_by_method(table, gg, nn, method, common.budget);
                    const Rat value = Rat(factorial(static_cast<unsigned>(nn))) * poly.eval(Rat(1));
                    if (format == "csv") {
                        out << gg << "," << nn << "," << to_string(value) << "," << method << "\n";
                    } else {
                        arr.push_back({{"g", gg}, {"n", nn}, {"value", to_string(value)}, {"method", method}});
                    }
                }
            }
            if (format == "json") out << arr.dump() << "\n";
            cache.commit();
            return Ok;
        }
        if (gk_cmd->parsed()) {
            const GkMethod m = gk_method == "virasoro" ? GkMethod::Virasoro
                               : gk_method == "wick"   ? GkMethod::Wick
                                                       : GkMethod::Dtilde;
            const VPoly p = mbar::gk(k, m);
            if (json) {
                Json rec{{"k", k}, {"method", "gk_" + gk_method}, {"terms", Json::parse(p.to_json())}};
                if (series_order >= 0) {
                    Json s = Json::array();
                    const auto zs = vpoly_to_zseries(p, series_order);
                    for (std::size_t j = 0; j <= zs.order(); ++j) s.push_back(to_string(zs[j]));
                    rec["z_series"] = s;
                }
                out << rec.dump() << "\n";
            } else {
                out << p.to_string() << "\n";
                if (series_order >= 0) {
                    const auto zs = vpoly_to_zseries(p, series_order);
                    for (std::size_t j = 0; j <= zs.order(); ++j) out << "z^-" << 2 * j << " " << to_string(zs[j]) << "\n";
                }
            }
            return Ok;
        }
        if (oracle->parsed()) {
            const OracleBudget budget{common.budget};
            const auto classes = enumerate_stable_graphs(g, n, budget);
            if (oracle_format == "json") {
                out << catalog_to_json(classes) << "\n";
            } else if (oracle_format == "dot") {
                for (std::size_t i = 0; i < classes.size(); ++i)
                    out << graph_to_dot(classes[i].graph, "G" + std::to_string(i)) << "\n";
            } else {
                const FeynmanSum fs = feynman_sum(g, n, budget);
                out << classes.size() << " classes\n";
                out << "aut";
                for (const auto& c : classes) out << " " << c.aut;
                out << "\n";
                out << "feynman_sum " << fs.poly.to_string() << "\n";
                out << "t_exp " << fs.t_exponent << "\n";
            }
            return Ok;
        }
        if (cf->parsed()) {
            if (audit) {
                std::vector<BlockMismatch> found = g == 0   ? audit_genus0_blocks(k)
                                                   : g == 1 ? audit_genus1_blocks(k)
                                                            : audit_gkp_blocks(g, k);
                for (const auto& b : found) out << b.family << " k=" << b.k << " exponent=" << b.exponent << "\n";
                out << found.size() << " mismatching blocks\n";
                return Ok;
            }
            ExpPolyInS form;
            if (g == 0) form = a_k_closed_form(k);
            else if (g == 1) form = c_k_closed_form(k) * make_rat(-1, 12) + d_k_closed_form(k) * make_rat(1, 2);
            else if (p_index >= 0) form = a_gkp_closed_form(g, k, p_index);
            if (g >= 2 && p_index < 0) {
                if (blocks) throw DomainError("--blocks at genus >= 2 needs --p");
                for (int nn = 0; nn <= order; ++nn) {
                    Rat v = 0;
                    for (int p = 0; p <= 3 * g - 3; ++p)
                        v += a_gkp_series(g, k, p, static_cast<std::size_t>(order))[static_cast<std::size_t>(nn)] *
                             table.coeff(g, 0, p);
                    out << "n=" << nn << " " << to_string(v) << "\n";
                }
                return Ok;
            }
            if (blocks) {
                for (const auto& [m, poly] : form.blocks()) out << "e^" << m << "(s+1): " << poly.to_string() << "\n";
                return Ok;
            }
            const auto xs = form.to_x_series(static_cast<std::size_t>(order));
            for (int nn = 0; nn <= order; ++nn) out << "n=" << nn << " " << to_string(xs[static_cast<std::size_t>(nn)]) << "\n";
            return Ok;
        }
        if (verify->parsed()) {
            if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
                err << "unknown suite '" << suite << "'; expected one of:";
                for (const auto& s : suite_names()) err << " " << s;
                err << "\n";
                return UsageError;
            }
            CacheScope cache(common.cache, table);
            const bool ok = run_suite(suite, table, out);
            cache.commit();
            return ok ? Ok : CheckFailed;
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return BudgetError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

}  // namespace mbar::cli

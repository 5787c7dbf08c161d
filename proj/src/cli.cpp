#include "codedens/cli.hpp"

#include "codedens/combinatorics.hpp"
#include "codedens/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace codedens {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

using Json = nlohmann::json;

struct Render {
    int digits = -1;  // -1: exact "p/q"
    std::string operator()(const BigRat& x) const { return digits < 0 ? to_string(x) : to_decimal(x, digits); }
};

Json document(const std::string& command, Json config, std::optional<std::uint64_t> seed) {
    Json doc;
    doc["tool"] = "codedens";
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["config"] = std::move(config);
    doc["seed"] = seed ? Json(*seed) : Json(nullptr);
    return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --metric and the space sizes shared by volume, bound, exact, estimate.
struct SpaceArgs {
    std::string metric;
    std::uint64_t q = 0;
    unsigned ell = 1;
    unsigned s = 1;
    std::size_t n = 0;
    std::size_t t = 1;

    void add(CLI::App* app) {
        app->add_option("--metric", metric, "hamming, rank or sumrank")->required();
        app->add_option("--q", q, "base field size (prime power)")->required();
        app->add_option("--ell", ell, "linearity degree")->capture_default_str();
        app->add_option("--s", s, "extension degree over F_{q^ell}")->capture_default_str();
        app->add_option("--n", n, "code length")->required();
        app->add_option("--t", t, "sum-rank blocks")->capture_default_str();
    }

    AmbientSpace space() const {
        const MetricKind k = parse_metric(metric);
        if (k != MetricKind::SumRank && t != 1) throw InvalidArgument("--t applies only to the sum-rank metric");
        AmbientSpace sp{q, ell, s, n, k, t};
        sp.validate();
        return sp;
    }

    Json config() const {
        return {{"metric", metric}, {"q", q}, {"ell", ell}, {"s", s}, {"n", n}, {"t", t}};
    }
};

// --S or --k plus --d.
struct FamilyArgs {
    std::string S;
    long k = 0;
    long d = 0;
    CLI::Option* s_opt = nullptr;
    CLI::Option* k_opt = nullptr;

    void add(CLI::App* app) {
        s_opt = app->add_option("--S", S, "nonlinear code cardinality");
        k_opt = app->add_option("--k", k, "F_{q^ell}-dimension of a linear code");
        s_opt->excludes(k_opt);
        app->add_option("--d", d, "minimum distance")->required();
    }

    CodeFamilySpec spec(const AmbientSpace& sp) const {
        if (s_opt->count() == 0 && k_opt->count() == 0) throw InvalidArgument("one of --S or --k is required");
        CodeFamilySpec out = s_opt->count() ? CodeFamilySpec::nonlinear(parse_integer(S), d)
                                            : CodeFamilySpec::linear_code(k, d);
        out.validate(sp);
        return out;
    }

    void config(Json& c) const {
        if (s_opt->count()) c["S"] = S;
        else c["k"] = k;
        c["d"] = d;
    }
};

// Scenario description for classify and probe.
struct ScenarioArgs {
    std::string family;
    std::string growing;
    std::string metric;
    std::uint64_t q = 2;
    unsigned ell = 1;
    unsigned s = 1;
    unsigned m = 0;
    std::size_t n = 0;
    std::size_t eta = 0;
    std::size_t t = 0;
    long d = 0;
    bool nonlinear = false;
    long k_slope = 0, k_offset = 1;
    std::string card_coef = "1";
    long card_slope = 0, card_offset = 1;
    std::map<std::string, CLI::Option*> opts;

    void add(CLI::App* app, const std::string& family_flag) {
        app->add_option(family_flag, family, "mds, mrd, msrd, gv or custom")->required();
        app->add_option("--growing", growing, "q, n, ell or s")->required();
        opts["metric"] = app->add_option("--metric", metric, "metric for gv and custom families");
        app->add_option("--q", q, "base field size; the starting value when q grows")->capture_default_str();
        app->add_option("--ell", ell, "linearity degree")->capture_default_str();
        opts["s"] = app->add_option("--s", s, "extension degree over F_{q^ell}");
        opts["m"] = app->add_option("--m", m, "extension degree over F_q (m = ell*s)");
        opts["n"] = app->add_option("--n", n, "code length");
        opts["eta"] = app->add_option("--eta", eta, "sum-rank block length");
        opts["t"] = app->add_option("--t", t, "sum-rank blocks");
        app->add_option("--d", d, "minimum distance")->required();
        app->add_flag("--nonlinear", nonlinear, "nonlinear codes instead of F_{q^ell}-linear ones");
        opts["k-slope"] = app->add_option("--k-slope", k_slope, "custom: k = slope*X + offset");
        opts["k-offset"] = app->add_option("--k-offset", k_offset);
        opts["card-coef"] = app->add_option("--card-coef", card_coef, "custom: S = coef*q^(slope*X + offset)");
        opts["card-slope"] = app->add_option("--card-slope", card_slope);
        opts["card-offset"] = app->add_option("--card-offset", card_offset);
    }

    bool given(const std::string& name) const { return opts.at(name)->count() > 0; }

    void forbid(const std::vector<std::string>& names, const std::string& why) const {
        for (const auto& nm : names) {
            if (given(nm)) throw InvalidArgument("--" + nm + " " + why);
        }
    }

    unsigned resolved_s() const {
        if (!given("m")) return s;
        if (m == 0 || m % ell != 0) throw InvalidArgument("--m must be a positive multiple of --ell");
        if (given("s") && s * ell != m) throw InvalidArgument("--m must equal ell*s");
        return m / ell;
    }

    Scenario scenario() const {
        const Family fam = family == "custom" ? Family::ExplicitDimension
                           : family == "gv"   ? Family::GilbertVarshamov
                                              : Family::Extremal;
        if (family != "mds" && family != "mrd" && family != "msrd" && family != "gv" && family != "custom") {
            throw InvalidArgument("unknown family '" + family + "' (expected mds, mrd, msrd, gv or custom)");
        }
        const Parameter g = parse_parameter(growing);
        const unsigned ss = resolved_s();
        MetricKind kind;
        if (family == "mds") kind = MetricKind::Hamming;
        else if (family == "mrd") kind = MetricKind::Rank;
        else if (family == "msrd") kind = MetricKind::SumRank;
        else {
            if (!given("metric")) throw InvalidArgument("--metric is required for the " + family + " family");
            kind = parse_metric(metric);
        }
        if (family != "gv" && family != "custom") forbid({"metric"}, "applies only to gv and custom families");
        if (family != "custom") {
            forbid({"k-slope", "k-offset", "card-coef", "card-slope", "card-offset"}, "applies only to the custom family");
        }

        AmbientSpace base;
        if (kind == MetricKind::SumRank) {
            forbid({"n"}, "is eta*t for sum-rank families; give --eta and --t");
            if (!given("eta") || !given("t")) throw InvalidArgument("sum-rank families need --eta and --t");
            base = AmbientSpace::sum_rank(q, ell, ss, eta * t, t);
        } else {
            forbid({"eta", "t"}, "applies only to sum-rank families");
            if (!given("n")) throw InvalidArgument("--n is required");
            base = kind == MetricKind::Hamming ? AmbientSpace::hamming(q, ell, ss, n) : AmbientSpace::rank(q, ell, ss, n);
        }
        Scenario sc;
        if (kind == MetricKind::SumRank) sc = msrd_scenario(g, q, ell, ss, eta, t, d, !nonlinear);
        else if (kind == MetricKind::Hamming) sc = mds_scenario(g, q, ell, ss, n, d, !nonlinear);
        else sc = mrd_scenario(g, q, ell, ss, n, d, !nonlinear);
        sc.base = base;
        sc.family = fam;
        if (family == "custom") {
            if (nonlinear) {
                forbid({"k-slope", "k-offset"}, "describes linear families; use --card-* with --nonlinear");
                sc.family = Family::ExplicitCardinality;
                sc.card_coef = parse_rational(card_coef);
                sc.card_slope = card_slope;
                sc.card_offset = card_offset;
            } else {
                forbid({"card-coef", "card-slope", "card-offset"}, "describes nonlinear families; add --nonlinear");
                sc.k_slope = k_slope;
                sc.k_offset = k_offset;
            }
        }
        return sc;
    }

    Json config(const std::string& family_key) const {
        Json c = {{family_key, family}, {"growing", growing}, {"q", q}, {"ell", ell}, {"d", d},
                  {"linear", !nonlinear}};
        for (const auto& [name, opt] : opts) {
            if (!opt->count()) continue;
            if (name == "card-coef") c[name] = card_coef;
            else if (name == "metric") c[name] = metric;
            else c[name] = std::stoll(opt->as<std::string>());
        }
        return c;
    }
};

Json cross_check_json(const CrossCheck& x, const Render& r) {
    Json j = {{"theorem", x.theorem}, {"verdict", to_string(x.verdict)}, {"agrees", x.agrees},
              {"derivation", x.derivation}};
    j["upper"] = x.upper ? Json(r(*x.upper)) : Json(nullptr);
    return j;
}

Json classification_json(const Classification& c, const Render& r) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["upper"] = c.upper ? Json(r(*c.upper)) : Json(nullptr);
    j["limit_constant"] = c.limit_constant ? Json(r(*c.limit_constant)) : Json(nullptr);
    Json offsets = Json::array();
    for (const auto& o : c.offsets) offsets.push_back(r(o));
    j["witness"] = {{"coefficient", r(c.coefficient)}, {"degree", c.degree}, {"slope", r(c.slope)},
                    {"offsets", offsets}, {"period", c.period}, {"probe_start", c.probe_start}};
    j["source"] = c.source;
    j["note"] = c.note;
    Json checks = Json::array();
    for (const auto& x : c.cross_checks) checks.push_back(cross_check_json(x, r));
    j["cross_checks"] = checks;
    return j;
}

class Output {
public:
    explicit Output(std::ostream& fallback) : out_(&fallback) {}
    void open(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw InvalidArgument("cannot open output file " + path);
        out_ = &file_;
    }
    std::ostream& operator*() { return *out_; }

private:
    std::ostream* out_;
    std::ofstream file_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err) {
    CLI::App app{"Exact density brackets, bounds and asymptotic verdicts for Hamming, rank and sum-rank codes",
                 "codedens"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);
    std::string output_path;
    int digits = -1;
    app.add_option("-o,--output", output_path, "write data to this file instead of standard output");
    app.add_option("--approx", digits, "render rationals as decimals with this many digits")
        ->check(CLI::Range(0, 200));

    auto* qb = app.add_subcommand("qbinom", "Gaussian binomial [A choose B]_Q");
    long qa = 0, qbb = 0;
    std::string qq;
    qb->add_option("A", qa)->required();
    qb->add_option("B", qbb)->required();
    qb->add_option("Q", qq)->required();

    auto* vol = app.add_subcommand("volume", "exact ball volume");
    SpaceArgs vol_space;
    vol_space.add(vol);
    long radius = 0;
    bool oracle = false;
    vol->add_option("--radius", radius)->required();
    vol->add_flag("--oracle", oracle, "cross-check against brute-force enumeration");

    auto* bnd = app.add_subcommand("bound", "Singleton, GV, maximal dimension or density bracket");
    SpaceArgs bnd_space;
    bnd_space.add(bnd);
    std::string kind;
    bnd->add_option("--kind", kind, "singleton, gv, density-bracket or kstar")->required();
    std::string bnd_S;
    long bnd_k = 0, bnd_d = 0;
    auto* bnd_S_opt = bnd->add_option("--S", bnd_S, "nonlinear code cardinality");
    auto* bnd_k_opt = bnd->add_option("--k", bnd_k, "F_{q^ell}-dimension");
    bnd_S_opt->excludes(bnd_k_opt);
    bnd->add_option("--d", bnd_d)->required();

    auto* cls = app.add_subcommand("classify", "asymptotic density verdict");
    ScenarioArgs cls_args;
    cls_args.add(cls, "--family");

    auto* reg = app.add_subcommand("region", "eta-versus-t region for F_q-linear MSRD codes, as CSV");
    long t_max = 10, eta_max = 4;
    reg->add_option("--t-max", t_max)->capture_default_str();
    reg->add_option("--eta-max", eta_max)->capture_default_str();

    auto* tb1 = app.add_subcommand("table1", "sum-rank example table, as CSV");

    auto* est = app.add_subcommand("estimate", "Monte Carlo density estimate, as JSON");
    SpaceArgs est_space;
    est_space.add(est);
    FamilyArgs est_fam;
    est_fam.add(est);
    std::uint64_t trials = 10000, seed = kDefaultSeed;
    unsigned streams = 1;
    std::string level_text = "99/100";
    est->add_option("--trials", trials)->capture_default_str();
    est->add_option("--seed", seed)->capture_default_str();
    est->add_option("--streams", streams, "worker threads; the result does not depend on it")->capture_default_str();
    est->add_option("--level", level_text, "confidence level")->capture_default_str();

    auto* exa = app.add_subcommand("exact", "exhaustive density");
    SpaceArgs exa_space;
    exa_space.add(exa);
    FamilyArgs exa_fam;
    exa_fam.add(exa);
    bool exa_json = false;
    std::string guard_text;
    exa->add_flag("--json", exa_json, "emit a JSON document");
    exa->add_option("--guard", guard_text, "enumeration cap (default: CODE_DENSITY_GUARD or 10^6)");

    auto* prb = app.add_subcommand("probe", "exact comparison ratio and bracket along a scenario, as CSV");
    ScenarioArgs prb_args;
    prb_args.add(prb, "--scenario");
    std::vector<std::uint64_t> probes;
    prb->add_option("--probes", probes, "values of the growing parameter")->required()->delimiter(',');

    auto* ver = app.add_subcommand("verify", "volume, reduction and bracket verification suites");
    std::string grid = "micro";
    ver->add_option("--grid", grid, "desk or micro")->capture_default_str();

    CLI::App* chosen = &app;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out_stream << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out_stream << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        for (auto* sub : app.get_subcommands()) chosen = sub;
        err << "error: " << e.what() << "\n\n" << chosen->help();
        return 2;
    }
    for (auto* sub : app.get_subcommands()) chosen = sub;

    const Render r{digits};
    Output out(out_stream);
    try {
        out.open(output_path);
        auto with_render = [&](Json c) {
            if (digits >= 0) c["approx"] = digits;
            return c;
        };

        if (chosen == qb) {
            *out << qbinom(qa, qbb, parse_integer(qq)).get_str() << "\n";
        } else if (chosen == vol) {
            const AmbientSpace sp = vol_space.space();
            const BigInt v = ball_volume(sp, radius);
            if (oracle) {
                const BigInt o = ball_volume_oracle(sp, radius);
                if (o != v) {
                    err << "oracle mismatch: formula " << v.get_str() << ", enumeration " << o.get_str() << "\n";
                    return 1;
                }
                err << "oracle agrees\n";
            }
            *out << v.get_str() << "\n";
        } else if (chosen == bnd) {
            const AmbientSpace sp = bnd_space.space();
            Json c = bnd_space.config();
            c["kind"] = kind;
            c["d"] = bnd_d;
            if (bnd_S_opt->count()) c["S"] = bnd_S;
            if (bnd_k_opt->count()) c["k"] = bnd_k;
            Json doc = document("bound", with_render(c), std::nullopt);
            if (kind == "singleton") {
                doc["result"] = {{"exponent", singleton_exponent(sp, bnd_d)}, {"value", singleton_max(sp, bnd_d).get_str()}};
            } else if (kind == "gv") {
                doc["result"] = {{"value", gv_cardinality(sp, bnd_d).get_str()}};
            } else if (kind == "kstar") {
                const auto ld = max_linear_dimension(sp, bnd_d);
                doc["result"] = {{"k_star", ld.k_star}, {"extremal_is_singleton", ld.extremal_is_singleton}};
            } else if (kind == "density-bracket") {
                auto bracket_json = [&](const DensityBracket& b) {
                    return Json{{"lower", r(b.lower)}, {"upper", r(b.upper)}, {"raw_lower", r(b.raw_lower)},
                                {"raw_upper", r(b.raw_upper)}};
                };
                if (bnd_S_opt->count()) {
                    const auto nb = nonlinear_bracket(sp, parse_integer(bnd_S), bnd_d);
                    doc["result"] = bracket_json(nb.bracket);
                    doc["result"]["beta0"] = r(nb.terms.beta0);
                    doc["result"]["beta1"] = r(nb.terms.beta1);
                    doc["result"]["theta"] = r(nb.terms.theta);
                } else if (bnd_k_opt->count()) {
                    const auto sb = sublinear_bracket(sp, bnd_k, bnd_d);
                    doc["result"] = bracket_json(sb.bracket);
                    doc["result"]["theta_bar"] = r(sb.terms.theta_bar);
                    doc["result"]["vertices"] = sb.terms.vertices.get_str();
                } else {
                    throw InvalidArgument("density-bracket needs --S or --k");
                }
            } else {
                throw InvalidArgument("unknown bound kind '" + kind + "' (expected singleton, gv, density-bracket or kstar)");
            }
            *out << dump(doc);
        } else if (chosen == cls) {
            const Scenario sc = cls_args.scenario();
            Json doc = document("classify", with_render(cls_args.config("family")), std::nullopt);
            doc["result"] = classification_json(classify(sc), r);
            *out << dump(doc);
        } else if (chosen == reg) {
            if (t_max < 1 || eta_max < 1) throw InvalidArgument("--t-max and --eta-max must be positive");
            *out << "t,eta,verdict\n";
            for (long t = 1; t <= t_max; ++t) {
                for (long e = 1; e <= eta_max; ++e) *out << t << "," << e << "," << to_string(region_corollary(t, e)) << "\n";
            }
        } else if (chosen == tb1) {
            *out << "eta,t,d,expected,observed,instances,reproduced\n";
            for (const auto& row : table1()) {
                std::set<std::string> seen;
                for (const auto& inst : row.instances) seen.insert(to_string(inst.second.verdict));
                std::string observed;
                for (const auto& v : seen) observed += (observed.empty() ? "" : ";") + v;
                *out << csv_field(row.eta) << "," << csv_field(row.t) << "," << row.d << "," << to_string(row.expected)
                     << "," << csv_field(observed) << "," << row.instances.size() << ","
                     << (row.reproduced() ? "yes" : "no") << "\n";
            }
        } else if (chosen == est) {
            const AmbientSpace sp = est_space.space();
            const CodeFamilySpec spec = est_fam.spec(sp);
            const BigRat level = parse_rational(level_text);
            const SampleReport rep = estimate_density(sp, spec, trials, seed, level, streams);
            // The stream count is left out so that reports from different
            // worker counts compare byte for byte.
            Json c = est_space.config();
            est_fam.config(c);
            c["trials"] = trials;
            c["level"] = to_string(level);
            Json doc = document("estimate", with_render(c), seed);
            doc["result"] = {{"trials", rep.trials},           {"successes", rep.successes},
                             {"point_estimate", r(rep.point_estimate)}, {"ci_lower", r(rep.ci_lower)},
                             {"ci_upper", r(rep.ci_upper)},     {"confidence_level", r(rep.confidence_level)}};
            *out << dump(doc);
        } else if (chosen == exa) {
            const AmbientSpace sp = exa_space.space();
            const CodeFamilySpec spec = exa_fam.spec(sp);
            const BigInt guard = guard_text.empty() ? default_limits().enumeration : parse_integer(guard_text);
            const BigRat dens = exact_density(sp, spec, guard);
            if (exa_json) {
                Json c = exa_space.config();
                exa_fam.config(c);
                c["guard"] = guard.get_str();
                Json doc = document("exact", with_render(c), std::nullopt);
                doc["result"] = {{"density", r(dens)}, {"codes", code_count(sp, spec).get_str()}};
                *out << dump(doc);
            } else {
                *out << r(dens) << "\n";
            }
        } else if (chosen == prb) {
            const Scenario sc = prb_args.scenario();
            *out << "probe,rho,lower,upper\n";
            for (const auto& row : convergence_experiment(sc, probes)) {
                *out << row.probe << "," << r(row.rho) << ",";
                if (row.bracket) *out << r(row.bracket->lower) << "," << r(row.bracket->upper);
                else *out << ",";
                *out << "\n";
            }
        } else if (chosen == ver) {
            const Grid g = parse_grid(grid);
            bool ok = true;
            for (const auto& suite : run_verification(g)) {
                *out << suite.name << ": " << suite.checked << " checks, " << suite.failures.size() << " failures\n";
                for (const auto& f : suite.failures) {
                    *out << "  FAIL";
                    for (const auto& [k, v] : f.details) *out << " " << k << "=" << v;
                    *out << "\n";
                }
                ok = ok && suite.pass();
            }
            *out << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n\n" << chosen->help();
        return 2;
    } catch (const NotImplemented& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << chosen->help();
        return 2;
    }
    return 0;
}

}  // namespace codedens

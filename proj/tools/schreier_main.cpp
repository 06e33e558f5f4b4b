#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "schreier/config.hpp"
#include "schreier/implicit.hpp"
#include "schreier/json_io.hpp"
#include "schreier/spreading.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

namespace {

// "1..40", "3,5,8..12"
FiniteSet parse_prefix(const std::string& text) {
    std::vector<std::uint32_t> v;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            v.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        } else {
            std::uint32_t lo = static_cast<std::uint32_t>(std::stoul(tok.substr(0, dots)));
            std::uint32_t hi = static_cast<std::uint32_t>(std::stoul(tok.substr(dots + 2)));
            for (std::uint32_t k = lo; k <= hi; ++k) v.push_back(k);
        }
    }
    return FiniteSet(std::move(v));
}

std::string slurp_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open " + arg.substr(1));
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    return arg;
}

SparseVector vector_arg(const std::string& arg) {
    return vector_from_json(json::parse(slurp_arg(arg)));
}

std::vector<SparseVector> vectors_arg(const std::string& arg) {
    json j = json::parse(slurp_arg(arg));
    if (!j.is_array()) throw ParseError("expected an array of vectors");
    std::vector<SparseVector> out;
    for (const auto& item : j) out.push_back(vector_from_json(item));
    return out;
}

// "S(1),inf" or "S(1),2"
NormContext parse_space(const std::string& text) {
    auto comma = text.rfind(',');
    if (comma == std::string::npos) return NormContext{parse_family(text), PExponent::infinity()};
    return NormContext{parse_family(text.substr(0, comma)),
                       PExponent::parse(text.substr(comma + 1))};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transfinite Schreier-family calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    FamilyEval ev;
    std::string format = "json";
    std::string config_path;
    unsigned cap_flag = 0;
    std::uint64_t seed_flag = 0;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* cap_opt = app.add_option("--cap", cap_flag, "enumeration cap override");
    auto* seed_opt = app.add_option("--seed", seed_flag, "random seed override");

    auto* ord = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
    std::string ord_op;
    std::vector<std::string> ord_args;
    ord->add_option("op", ord_op, "add|mul|cmp|sub|lambda|fund|pow")->required();
    ord->add_option("args", ord_args, "ordinal arguments")->expected(1, 2);

    auto* fam = app.add_subcommand("family", "regular family queries");
    std::string fam_op, fam_expr, fam_arg;
    fam->add_option("op", fam_op, "cb|contains|max|segment|decompose|enumerate|regular|nice")
        ->required();
    fam->add_option("expr", fam_expr, "family expression, e.g. A(2)[S(1)]")->required();
    fam->add_option("arg", fam_arg, "set {2,3}, prefix 1..10, or bound n");

    auto* norm = app.add_subcommand("norm", "Schreier / successive-block norms");
    std::string norm_family = "S(1)", norm_p = "inf", norm_vec;
    norm->add_option("--family", norm_family, "family expression");
    norm->add_option("--p", norm_p, "inf or a rational > 1");
    norm->add_option("--vec", norm_vec, "vector JSON or @file")->required();

    auto* avg = app.add_subcommand("avg", "repeated-averages measures");
    std::string avg_xi = "1", avg_block, avg_prefix;
    unsigned avg_n = 1;
    avg->add_option("--xi", avg_xi, "hierarchy level ordinal");
    avg->add_option("--block", avg_block, "block spec, e.g. RA(1)*RA(0) (overrides --xi)");
    avg->add_option("--prefix", avg_prefix, "prefix, e.g. 1..40")->required();
    avg->add_option("--n", avg_n, "measure index (1-based)");

    auto* spread = app.add_subcommand("spread", "spreading-model constants");
    std::string spread_family = "S(1)", spread_space = "S(1),inf", spread_mode = "ell1";
    std::string spread_vectors;
    unsigned spread_nmax = 8, spread_sign_cap = 10;
    bool spread_basis = false;
    spread->add_option("--family", spread_family, "index family F");
    spread->add_option("--space", spread_space, "ambient context, e.g. \"S(1),inf\"");
    spread->add_flag("--basis", spread_basis, "use the canonical basis e_1..e_nmax");
    spread->add_option("--vectors", spread_vectors, "JSON array of vectors or @file");
    spread->add_option("--nmax", spread_nmax, "last sequence index considered");
    spread->add_option("--mode", spread_mode, "ell1 or c0")->check(CLI::IsMember({"ell1", "c0"}));
    spread->add_option("--sign-cap", spread_sign_cap, "max |F| for sign enumeration");

    auto* znorm_cmd = app.add_subcommand("znorm", "iterated implicit norm");
    std::string z_gamma = "1", z_base = "S(0)", z_theta, z_vec, z_tol;
    unsigned z_kcap = 64, z_component = 0;
    znorm_cmd->add_option("--gamma", z_gamma, "admissibility level (>= 1)");
    znorm_cmd->add_option("--base", z_base, "base family");
    znorm_cmd->add_option("--theta", z_theta, "weight schedule, e.g. geometric:1/2");
    znorm_cmd->add_option("--vec", z_vec, "vector JSON or @file")->required();
    znorm_cmd->add_option("--tol", z_tol, "enclosure tolerance, e.g. 2^-40");
    znorm_cmd->add_option("--kcap", z_kcap, "iteration cap");
    znorm_cmd->add_option("--component", z_component, "report the n-th component limit");

    auto* mixed = app.add_subcommand("mixed", "mixed Schreier norm sup_n 2^-n |x|_{l_n}");
    std::string mixed_lambda = "w", mixed_vec;
    mixed->add_option("--lambda", mixed_lambda, "limit ordinal");
    mixed->add_option("--vec", mixed_vec, "vector JSON or @file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "lemma verification suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite,
                           "deep-facts|union-lemma|block-axioms|norm-estimates|limit-seq|all");

    auto* profile = app.add_subcommand("profile", "per-vector norm profiles");
    std::string prof_betas = "0,1,2", prof_vectors;
    unsigned prof_basis = 0;
    profile->add_option("--betas", prof_betas, "comma-separated ordinals");
    profile->add_option("--vectors", prof_vectors, "JSON array of vectors or @file");
    profile->add_option("--basis", prof_basis, "use basis vectors e_1..e_N");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty())
            cfg.load_file(config_path);
        else if (std::filesystem::exists("schreier.toml"))
            cfg.load_file("schreier.toml");
        cfg.apply_env();
        if (*cap_opt) cfg.enum_cap = cap_flag;
        if (*seed_opt) cfg.seed = seed_flag;
        ev.set_cap(cfg.enum_cap);

        if (*ord) {
            auto need = [&](std::size_t k) {
                if (ord_args.size() != k)
                    throw ParseError("ord " + ord_op + " takes " + std::to_string(k) +
                                     " argument(s)");
            };
            auto O = [&](const std::string& s) { return parse_ordinal(s, cfg.ordinal_cap); };
            if (ord_op == "add") {
                need(2);
                std::cout << format_ordinal(ord_add(O(ord_args[0]), O(ord_args[1]))) << "\n";
            } else if (ord_op == "mul") {
                need(2);
                std::cout << format_ordinal(ord_mul(O(ord_args[0]), O(ord_args[1]))) << "\n";
            } else if (ord_op == "cmp") {
                need(2);
                int c = ord_cmp(O(ord_args[0]), O(ord_args[1]));
                std::cout << (c < 0 ? "less" : c > 0 ? "greater" : "equal") << "\n";
            } else if (ord_op == "sub") {
                need(2);
                std::cout << format_ordinal(left_subtract(O(ord_args[0]), O(ord_args[1])))
                          << "\n";
            } else if (ord_op == "lambda") {
                need(1);
                std::cout << format_ordinal(lambda_of(O(ord_args[0]))) << "\n";
            } else if (ord_op == "fund") {
                need(2);
                std::cout << format_ordinal(fundamental(O(ord_args[0]), std::stoull(ord_args[1])))
                          << "\n";
            } else if (ord_op == "pow") {
                need(1);
                std::cout << format_ordinal(omega_pow(O(ord_args[0]))) << "\n";
            } else {
                throw ParseError("unknown ord op: " + ord_op);
            }
            return 0;
        }

        if (*fam) {
            FamilyPtr f = parse_family(fam_expr);
            auto parse_set = [&](const std::string& s) {
                std::string inner = s;
                if (!inner.empty() && inner.front() == '{') inner = inner.substr(1);
                if (!inner.empty() && inner.back() == '}') inner.pop_back();
                return parse_prefix(inner);
            };
            if (fam_op == "cb") {
                std::cout << format_ordinal(cb_index(f)) << "\n";
            } else if (fam_op == "contains") {
                emit(json{{"member", ev.contains(f, parse_set(fam_arg))}});
            } else if (fam_op == "max") {
                emit(json{{"maximal", ev.is_max(f, parse_set(fam_arg))}});
            } else if (fam_op == "segment") {
                emit(json{{"segment", set_to_json(ev.initial_segment(f, parse_set(fam_arg)))}});
            } else if (fam_op == "decompose") {
                json blocks = json::array();
                for (const auto& b : ev.decompose(f, parse_set(fam_arg)))
                    blocks.push_back(set_to_json(b));
                emit(json{{"blocks", blocks}});
            } else if (fam_op == "enumerate") {
                json members = json::array();
                for (const auto& e : ev.enumerate(f, static_cast<unsigned>(std::stoul(fam_arg))))
                    members.push_back(set_to_json(e));
                emit(json{{"members", members}});
            } else if (fam_op == "regular") {
                auto rep = ev.check_regular_truncation(
                    f, fam_arg.empty() ? 8u : static_cast<unsigned>(std::stoul(fam_arg)));
                emit(json{{"ok", rep.ok}, {"detail", rep.detail}});
            } else if (fam_op == "nice") {
                auto rep = ev.is_nice(
                    f, fam_arg.empty() ? 8u : static_cast<unsigned>(std::stoul(fam_arg)));
                emit(json{{"ok", rep.ok}, {"detail", rep.detail}});
            } else {
                throw ParseError("unknown family op: " + fam_op);
            }
            return 0;
        }

        if (*norm) {
            NormValue v = baernstein_norm(ev, parse_family(norm_family), PExponent::parse(norm_p),
                                          vector_arg(norm_vec));
            emit(norm_value_to_json(v));
            return 0;
        }

        if (*avg) {
            FiniteSet prefix = parse_prefix(avg_prefix);
            ProbMeasure mu = avg_block.empty()
                                 ? repeated_average(ev, parse_ordinal(avg_xi), prefix, avg_n)
                                 : block_measure(ev, parse_block(avg_block), prefix, avg_n);
            emit(measure_to_json(mu));
            return 0;
        }

        if (*spread) {
            SequenceData s;
            s.context = parse_space(spread_space);
            if (spread_basis)
                for (std::uint32_t i = 1; i <= spread_nmax; ++i)
                    s.vectors.push_back(SparseVector::basis(i));
            else if (!spread_vectors.empty())
                s.vectors = vectors_arg(spread_vectors);
            else
                throw ParseError("spread needs --basis or --vectors");
            FamilyPtr f = parse_family(spread_family);
            if (spread_mode == "ell1") {
                emit(spreading_report_to_json(ell1_constant(ev, f, s, spread_nmax, cfg.lp_gen_cap)));
            } else {
                auto [lo, hi] = c0_constants(ev, f, s, spread_nmax, spread_sign_cap);
                emit(json{{"lower", spreading_report_to_json(lo)},
                          {"upper", spreading_report_to_json(hi)}});
            }
            return 0;
        }

        if (*znorm_cmd) {
            ThetaSchedule theta =
                ThetaSchedule::parse(z_theta.empty() ? cfg.theta : z_theta);
            Rat tol = parse_rational(z_tol.empty() ? cfg.tol : z_tol);
            SparseVector x = vector_arg(z_vec);
            Ordinal gamma = parse_ordinal(z_gamma);
            FamilyPtr base = parse_family(z_base);
            if (z_component > 0) {
                emit(norm_value_to_json(
                    z_norm_component(ev, gamma, base, theta, x, tol, z_kcap, z_component)));
                return 0;
            }
            auto [v, trace] = z_norm(ev, gamma, base, theta, x, tol, z_kcap);
            json steps = json::array();
            for (const auto& st : trace.steps)
                steps.push_back(
                    json{{"lower", rat_to_json(st.lower)}, {"upper", rat_to_json(st.upper)}});
            const char* term = trace.termination == IterationTrace::Termination::FixedPoint
                                   ? "fixed-point"
                               : trace.termination == IterationTrace::Termination::Tolerance
                                   ? "tolerance"
                                   : "cap";
            json out = norm_value_to_json(v);
            out["trace"] = json{{"steps", steps},
                                {"termination", term},
                                {"iterations", trace.iterations},
                                {"theta_head", trace.theta_head}};
            emit(out);
            return 0;
        }

        if (*mixed) {
            emit(norm_value_to_json(
                mixed_schreier_norm(ev, parse_ordinal(mixed_lambda), vector_arg(mixed_vec))));
            return 0;
        }

        if (*verify_cmd) {
            auto reports = run_suite(ev, suite, cfg.enum_cap, cfg.seed);
            bool any_fail = false;
            if (format == "csv") {
                std::cout << "id,verdict,instances,detail\n";
                for (const auto& r : reports) {
                    std::cout << r.id << "," << CheckReport::verdict_name(r.verdict) << ","
                              << r.instances << ",\"" << r.detail << "\"\n";
                    any_fail = any_fail || r.verdict == CheckReport::Verdict::Fail;
                }
            } else {
                json arr = json::array();
                for (const auto& r : reports) {
                    arr.push_back(check_report_to_json(r));
                    any_fail = any_fail || r.verdict == CheckReport::Verdict::Fail;
                }
                emit(arr);
            }
            return any_fail ? 3 : 0;
        }

        if (*profile) {
            std::vector<Ordinal> betas;
            for (std::size_t pos = 0; pos < prof_betas.size();) {
                std::size_t comma = prof_betas.find(',', pos);
                betas.push_back(parse_ordinal(
                    prof_betas.substr(pos, comma == std::string::npos ? comma : comma - pos)));
                pos = comma == std::string::npos ? prof_betas.size() : comma + 1;
            }
            std::vector<SparseVector> vectors;
            if (prof_basis > 0)
                for (std::uint32_t i = 1; i <= prof_basis; ++i)
                    vectors.push_back(SparseVector::basis(i));
            else if (!prof_vectors.empty())
                vectors = vectors_arg(prof_vectors);
            if (format == "csv") {
                std::cout << "vector,beta,value,approx\n";
                for (std::size_t i = 0; i < vectors.size(); ++i)
                    for (const auto& [beta, v] : norm_profile(ev, vectors[i], betas))
                        std::cout << i + 1 << "," << format_ordinal(beta) << ","
                                  << rat_to_string(*v.exact) << "," << rat_to_double(*v.exact)
                                  << "\n";
            } else {
                json rows = json::array();
                for (std::size_t i = 0; i < vectors.size(); ++i)
                    for (const auto& [beta, v] : norm_profile(ev, vectors[i], betas))
                        rows.push_back(json{{"vector", i + 1},
                                            {"beta", format_ordinal(beta)},
                                            {"value", rat_to_json(*v.exact)},
                                            {"approx", rat_to_double(*v.exact)}});
                emit(rows);
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <omp.h>

#include "CLI11.hpp"

#include "cyclequiv/json_io.hpp"

using namespace cyclequiv;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format = "text";
    bool timing = true;
    int threads = 0;
    long seed = 1;
};

void apply_threads(const GlobalOpts& g) {
    int threads = g.threads;
    if (threads == 0) {
        if (const char* env = std::getenv("CYCLEQUIV_THREADS")) threads = std::atoi(env);
    }
    if (threads > 0) omp_set_num_threads(threads);
}

json base_config(const GlobalOpts& g, const std::string& command) {
    return json{{"command", command},
                {"format", g.format},
                {"threads", g.threads},
                {"seed", g.seed}};
}

void emit(const GlobalOpts& g, const json& report, const std::string& text) {
    if (g.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

std::string render_suite_text(const json& report) {
    std::string out;
    out += "suite: " + report.at("suite").get<std::string>();
    if (report.at("exploratory").get<bool>()) out += " (exploratory: order not certified)";
    out += "\n";
    for (const auto& check : report.at("checks")) {
        out += check.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ";
        out += check.at("name").get<std::string>();
        if (check.contains("details")) out += "  " + check.at("details").get<std::string>();
        out += "\n";
    }
    out += "passed " + std::to_string(report.at("passed").get<long>()) + ", failed " +
           std::to_string(report.at("failed").get<long>());
    if (!report.at("elapsed_ms").is_null())
        out += " (" + std::to_string(report.at("elapsed_ms").get<double>()) + " ms)";
    out += "\n";
    return out;
}

CyclicCode load_code_spec(const std::string& path) {
    return jsonio::cyclic_code_from_json(jsonio::load_json_file(path));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation equivalence of semisimple cyclic codes via multiplier solving sets,\n"
                 "with brute-force group-theoretic verification suites."};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("!--no-timing", global.timing,
                 "Blank wall-clock fields for byte-identical reports");
    app.add_option("--threads", global.threads,
                   "Worker thread cap (0 = library default; env CYCLEQUIV_THREADS)");
    app.add_option("--seed", global.seed, "Seed for randomized suites");

    int n = 0;
    long q = 0;
    long p = 0;
    int d = 0;
    long enum_cap = kDefaultEnumerationCap;
    long long scan_cap = oracle::kDefaultScanCap;

    auto* cosets_cmd = app.add_subcommand("cosets", "q-cyclotomic cosets mod n");
    cosets_cmd->add_option("--n", n, "code length")->required();
    cosets_cmd->add_option("--q", q, "field order (prime power)")->required();

    auto* factor_cmd = app.add_subcommand("factor", "irreducible factors of x^n - 1 over F_q");
    factor_cmd->add_option("--n", n)->required();
    factor_cmd->add_option("--q", q)->required();

    auto* codes_cmd = app.add_subcommand("codes", "enumerate all cyclic codes of length n over F_q");
    codes_cmd->add_option("--n", n)->required();
    codes_cmd->add_option("--q", q)->required();
    codes_cmd->add_option("--cap", enum_cap, "max number of codes");

    std::string cosets_json, generator_json, spec_path;
    auto* idem_cmd = app.add_subcommand("idempotent", "generating idempotent of a cyclic code");
    idem_cmd->add_option("--n", n);
    idem_cmd->add_option("--q", q);
    idem_cmd->add_option("--cosets", cosets_json, "zero cosets as JSON, e.g. [[1,2,4]]");
    idem_cmd->add_option("--generator", generator_json, "generator coefficients as JSON");
    idem_cmd->add_option("--file", spec_path, "code spec JSON file");

    std::string left_path, right_path;
    bool with_oracle = false, escalate = false;
    auto* equiv_cmd = app.add_subcommand("equiv", "decide permutation equivalence of two codes");
    equiv_cmd->add_option("left", left_path, "left code spec JSON")->required();
    equiv_cmd->add_option("right", right_path, "right code spec JSON")->required();
    equiv_cmd->add_flag("--oracle", with_oracle, "cross-check against the brute-force oracle");
    equiv_cmd->add_flag("--escalate", escalate, "fall back to the oracle when inconclusive");
    equiv_cmd->add_option("--cap", scan_cap, "oracle cap on n!");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "ci-cyclic | ci-groupcode | two-closure | projector | fusion")
        ->required()
        ->check(CLI::IsMember({"ci-cyclic", "ci-groupcode", "two-closure", "projector", "fusion"}));
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--q", q);
    verify_cmd->add_option("--p", p, "group prime (ci-groupcode)");
    verify_cmd->add_option("--d", d, "group rank (ci-groupcode)");
    verify_cmd->add_option("--cap", scan_cap, "cap on n! scans");
    verify_cmd->add_option("--enum-cap", enum_cap, "cap on enumerated codes");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground-truth queries");
    std::string oracle_op;
    oracle_cmd->add_option("op", oracle_op, "equiv | paut | two-closure")
        ->required()
        ->check(CLI::IsMember({"equiv", "paut", "two-closure"}));
    oracle_cmd->add_option("left", left_path, "code spec (equiv/paut)");
    oracle_cmd->add_option("right", right_path, "code spec (equiv)");
    oracle_cmd->add_option("--n", n, "degree (two-closure of the shift group)");
    oracle_cmd->add_option("--cap", scan_cap);

    for (CLI::App* sub : app.get_subcommands(static_cast<std::function<bool(CLI::App*)>>(nullptr)))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    apply_threads(global);

    try {
        if (cosets_cmd->parsed()) {
            auto cosets = cyclotomic_cosets(n, q);
            json report{{"schema", jsonio::kSchemaVersion},
                        {"config", base_config(global, "cosets")},
                        {"n", n},
                        {"q", q},
                        {"cosets", cosets}};
            std::string text;
            for (const auto& c : cosets) {
                text += "{";
                for (size_t i = 0; i < c.size(); ++i) text += (i ? "," : "") + std::to_string(c[i]);
                text += "}\n";
            }
            emit(global, report, text);
        } else if (factor_cmd->parsed()) {
            Field field = Field::from_order(q);
            auto factors = factor_xn_minus_1(n, field);
            json jfactors = json::array();
            std::string text;
            for (const Poly& f : factors) {
                jfactors.push_back(jsonio::coeffs_to_json(field, f.coeffs()));
                text += "deg " + std::to_string(f.degree()) + ": [";
                for (size_t i = 0; i < f.coeffs().size(); ++i)
                    text += (i ? "," : "") + std::to_string(f.coeffs()[i]);
                text += "]\n";
            }
            json report{{"schema", jsonio::kSchemaVersion},
                        {"config", base_config(global, "factor")},
                        {"n", n},
                        {"field", jsonio::field_to_json(field)},
                        {"factors", jfactors}};
            emit(global, report, text);
        } else if (codes_cmd->parsed()) {
            Field field = Field::from_order(q);
            CyclicContext ctx = CyclicContext::build(n, field);
            auto codes = enumerate_cyclic_codes(ctx, enum_cap);
            json jcodes = json::array();
            std::string text;
            for (size_t i = 0; i < codes.size(); ++i) {
                jcodes.push_back(jsonio::cyclic_code_to_json(codes[i]));
                text += "code " + std::to_string(i) + ": dim " + std::to_string(codes[i].dim) + ", zeros ";
                for (const auto& c : codes[i].zero_cosets) {
                    text += "{";
                    for (size_t j = 0; j < c.size(); ++j) text += (j ? "," : "") + std::to_string(c[j]);
                    text += "}";
                }
                text += "\n";
            }
            json report{{"schema", jsonio::kSchemaVersion},
                        {"config", base_config(global, "codes")},
                        {"count", codes.size()},
                        {"codes", jcodes}};
            emit(global, report, text);
        } else if (idem_cmd->parsed()) {
            std::optional<CyclicCode> code;
            if (!spec_path.empty()) {
                code = load_code_spec(spec_path);
            } else {
                if (n == 0 || q == 0)
                    throw Error(ErrorCode::InvalidInput, "idempotent needs --file or --n/--q");
                Field field = Field::from_order(q);
                CyclicContext ctx = CyclicContext::build(n, field);
                if (!cosets_json.empty()) {
                    code = code_from_cosets(ctx, json::parse(cosets_json)
                                                     .get<std::vector<std::vector<int>>>());
                } else if (!generator_json.empty()) {
                    Poly g(field, jsonio::coeffs_from_json(field, json::parse(generator_json)));
                    code = code_from_generator(ctx, g);
                } else {
                    throw Error(ErrorCode::InvalidInput, "idempotent needs --cosets or --generator");
                }
            }
            json jcode = jsonio::cyclic_code_to_json(*code);
            json report{{"schema", jsonio::kSchemaVersion},
                        {"config", base_config(global, "idempotent")},
                        {"code", jcode}};
            std::string text = "idempotent: " + jcode.at("idempotent").dump() + "\ngenerator: " +
                               jcode.at("generator").dump() + "\ndim: " + std::to_string(code->dim) +
                               "\n";
            emit(global, report, text);
        } else if (equiv_cmd->parsed()) {
            CyclicCode left = load_code_spec(left_path);
            CyclicCode right = load_code_spec(right_path);
            EquivOptions opts;
            opts.oracle_escalation = escalate;
            opts.oracle_cap = scan_cap;
            EquivalenceVerdict verdict = test_equivalence(left, right, opts);
            json report = jsonio::verdict_to_json(verdict, global.timing);
            report["config"] = base_config(global, "equiv");
            report["config"]["left"] = left_path;
            report["config"]["right"] = right_path;
            report["config"]["oracle"] = with_oracle;
            report["config"]["escalate"] = escalate;
            report["config"]["cap"] = scan_cap;

            bool disagreement = false;
            if (with_oracle) {
                if (!oracle::factorial_at_most(left.n, scan_cap)) {
                    report["oracle"] = nullptr;
                    report["oracle_agrees"] = nullptr;
                } else {
                    auto search = oracle::equivalence_bruteforce(left.code, right.code, scan_cap);
                    report["oracle"] = jsonio::search_report_to_json(search, global.timing);
                    if (verdict.status == EquivStatus::Inconclusive) {
                        report["oracle_agrees"] = nullptr;
                    } else {
                        bool agree = (verdict.status == EquivStatus::EquivalentVia) ==
                                     search.witness.has_value();
                        report["oracle_agrees"] = agree;
                        disagreement = !agree;
                    }
                }
            }
            std::string text = std::string("status: ") + to_string(verdict.status) + "\nmethod: " +
                               to_string(verdict.method) + "\ncandidates_checked: " +
                               std::to_string(verdict.candidates_checked) + "\nci_certified: " +
                               (verdict.ci_certified ? "true" : "false") + "\n";
            if (verdict.witness_multiplier)
                text += "witness: multiplier " + std::to_string(*verdict.witness_multiplier) + "\n";
            else if (verdict.witness)
                text += "witness: " + jsonio::permutation_to_json(*verdict.witness).dump() + "\n";
            if (report.contains("oracle_agrees") && !report["oracle_agrees"].is_null())
                text += std::string("oracle_agrees: ") +
                        (report["oracle_agrees"].get<bool>() ? "true" : "false") + "\n";
            emit(global, report, text);
            if (disagreement) return 3;
        } else if (verify_cmd->parsed()) {
            suites::SuiteReport result;
            if (suite == "ci-cyclic") {
                if (n == 0 || q == 0) throw Error(ErrorCode::InvalidInput, "need --n and --q");
                result = suites::ci_cyclic(n, Field::from_order(q), scan_cap, enum_cap);
            } else if (suite == "ci-groupcode") {
                if (p == 0 || d == 0 || q == 0)
                    throw Error(ErrorCode::InvalidInput, "need --p, --d and --q");
                result = suites::ci_groupcode(p, d, Field::from_order(q), scan_cap);
            } else if (suite == "two-closure") {
                if (n == 0 || q == 0) throw Error(ErrorCode::InvalidInput, "need --n and --q");
                result = suites::two_closure_codes(n, Field::from_order(q), enum_cap);
            } else if (suite == "projector") {
                if (n == 0 || q == 0) throw Error(ErrorCode::InvalidInput, "need --n and --q");
                result = suites::projector(n, Field::from_order(q), enum_cap);
            } else {
                if (n == 0 || q == 0) throw Error(ErrorCode::InvalidInput, "need --n and --q");
                result = suites::fusion(n, Field::from_order(q), scan_cap, enum_cap);
            }
            json report = jsonio::suite_report_to_json(result, global.timing);
            report["config"] = base_config(global, "verify");
            report["config"]["suite"] = suite;
            report["config"]["n"] = n;
            report["config"]["q"] = q;
            report["config"]["p"] = p;
            report["config"]["d"] = d;
            report["config"]["cap"] = scan_cap;
            report["config"]["enum_cap"] = enum_cap;
            emit(global, report, render_suite_text(report));
            if (!result.pass() && !result.exploratory) return 1;
        } else if (oracle_cmd->parsed()) {
            if (oracle_op == "equiv") {
                if (left_path.empty() || right_path.empty())
                    throw Error(ErrorCode::InvalidInput, "oracle equiv needs two code specs");
                CyclicCode left = load_code_spec(left_path);
                CyclicCode right = load_code_spec(right_path);
                if (left.n > 8)
                    std::cerr << "note: scanning " << left.n << "! permutations\n";
                auto search = oracle::equivalence_bruteforce(left.code, right.code, scan_cap);
                json report = jsonio::search_report_to_json(search, global.timing);
                report["config"] = base_config(global, "oracle-equiv");
                std::string text = search.witness
                                       ? "witness: " + jsonio::permutation_to_json(*search.witness).dump()
                                       : std::string("no witness");
                emit(global, report, text + "\nchecked: " + std::to_string(search.checked) + "\n");
            } else if (oracle_op == "paut") {
                if (left_path.empty())
                    throw Error(ErrorCode::InvalidInput, "oracle paut needs a code spec");
                CyclicCode code = load_code_spec(left_path);
                if (code.n > 8)
                    std::cerr << "note: scanning " << code.n << "! permutations\n";
                auto group = oracle::paut_bruteforce(code.code, scan_cap);
                json report{{"schema", jsonio::kSchemaVersion},
                            {"config", base_config(global, "oracle-paut")},
                            {"order", group.order()}};
                emit(global, report, "order: " + std::to_string(group.order()) + "\n");
            } else {
                if (n == 0) throw Error(ErrorCode::InvalidInput, "oracle two-closure needs --n");
                auto closure = oracle::two_closure(oracle::PermGroup::cyclic_shift(n));
                json report{{"schema", jsonio::kSchemaVersion},
                            {"config", base_config(global, "oracle-two-closure")},
                            {"order", closure.order()}};
                emit(global, report, "order: " + std::to_string(closure.order()) + "\n");
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: InvalidInput: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

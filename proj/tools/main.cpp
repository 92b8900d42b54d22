// likejudge: pools likelihood judgments over logically related issues into
// crisp collective judgment sets, and checks aggregator axioms.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "likejudge/io.hpp"
#include "likejudge/properties.hpp"

using namespace likejudge;
using Json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
    std::string format = "table";
    std::uint64_t seed = 42;
    bool resolute = false;
    bool json() const { return format == "json"; }
};

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string literal_set_text(const CrispJudgmentSet& set, const Frame& frame) {
    std::string out = "{";
    bool first = true;
    for (SignedIssue s : set.literals()) {
        if (!first) out += ", ";
        first = false;
        out += frame.literal_text(s);
    }
    return out + "}";
}

Json signs_json(const CrispJudgmentSet& set) {
    if (!set.complete()) return nullptr;
    Json signs = Json::array();
    for (int i = 0; i < set.issue_count(); ++i) {
        signs.push_back(set.contains({i, false}) ? 1 : 0);
    }
    return signs;
}

Json literals_json(const CrispJudgmentSet& set, const Frame& frame) {
    Json out = Json::array();
    for (SignedIssue s : set.literals()) out.push_back(frame.literal_text(s));
    return out;
}

Json judgment_set_json(const LikelihoodJudgmentSet& set, const Frame& frame) {
    Json out = Json::array();
    for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        const LikelihoodEntry& e = set.at(s);
        Json j;
        j["issue"] = pretty_print(frame.agenda()[s.issue], frame.atoms());
        j["neg"] = s.negated;
        j["rel"] = relation_token(e.rel);
        j["a"] = json_real(e.bound);
        out.push_back(std::move(j));
    }
    return out;
}

Json profile_json(const Profile& profile, const Frame& frame) {
    Json sources = Json::array();
    for (const LikelihoodJudgmentSet& src : profile.sources) {
        Json s;
        s["name"] = src.provenance();
        s["judgments"] = judgment_set_json(src, frame);
        sources.push_back(std::move(s));
    }
    Json doc;
    doc["sources"] = std::move(sources);
    return doc;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---- validate ----------------------------------------------------------

int cmd_validate(const GlobalOptions& global, const std::string& frame_path,
                 const std::string& profile_path) {
    Frame frame = load_frame(frame_path);
    Profile profile = load_profile(profile_path, frame);
    frame.set_source_count(profile.size());

    std::vector<RationalityReport> reports;
    bool all_rational = true;
    for (const LikelihoodJudgmentSet& src : profile.sources) {
        reports.push_back(check_rationality(src, frame));
        all_rational = all_rational && reports.back().rational();
    }

    if (global.json()) {
        Json sources = Json::array();
        for (std::size_t k = 0; k < reports.size(); ++k) {
            const RationalityReport& r = reports[k];
            Json offending = Json::array();
            for (const ImpliedBound& ib : r.offending) {
                Json o;
                o["issue"] = pretty_print(frame.agenda()[ib.issue.issue],
                                          frame.atoms());
                o["neg"] = ib.issue.negated;
                o["stated"] = json_real(ib.stated);
                o["implied"] = json_real(ib.implied);
                offending.push_back(std::move(o));
            }
            Json s;
            s["name"] = profile.sources[k].provenance();
            s["complete"] = r.complete;
            s["consistent"] = r.consistent;
            s["final"] = r.final;
            s["rational"] = r.rational();
            s["offending"] = std::move(offending);
            sources.push_back(std::move(s));
        }
        Json doc;
        doc["command"] = "validate";
        doc["sources"] = std::move(sources);
        doc["rational"] = all_rational;
        emit(doc);
    } else {
        std::printf("%-20s %-9s %-11s %-6s %s\n", "source", "complete",
                    "consistent", "final", "rational");
        for (std::size_t k = 0; k < reports.size(); ++k) {
            const RationalityReport& r = reports[k];
            std::printf("%-20s %-9s %-11s %-6s %s\n",
                        profile.sources[k].provenance().c_str(),
                        r.complete ? "yes" : "no",
                        r.consistent ? "yes" : "no", r.final ? "yes" : "no",
                        r.rational() ? "yes" : "no");
            for (const ImpliedBound& ib : r.offending) {
                std::printf("    implied bound on %s: %s (stated %s)\n",
                            frame.literal_text(ib.issue).c_str(),
                            fixed4(ib.implied).c_str(),
                            fixed4(ib.stated).c_str());
            }
        }
        std::printf("profile rational: %s\n", all_rational ? "yes" : "no");
    }
    return all_rational ? 0 : 1;
}

// ---- enumerate ---------------------------------------------------------

int cmd_enumerate(const GlobalOptions& global, const std::string& frame_path,
                  const std::string& what) {
    Frame frame = load_frame(frame_path);
    if (what != "rational" && what != "implicants") {
        throw CLI::ValidationError("what", "expected 'rational' or 'implicants'");
    }

    if (what == "rational") {
        std::vector<CrispJudgmentSet> sets = rational_sets(frame);
        if (global.json()) {
            Json arr = Json::array();
            for (const CrispJudgmentSet& s : sets) {
                Json j;
                j["signs"] = signs_json(s);
                j["literals"] = literals_json(s, frame);
                arr.push_back(std::move(j));
            }
            Json doc;
            doc["command"] = "enumerate";
            doc["what"] = "rational";
            doc["sets"] = std::move(arr);
            emit(doc);
        } else {
            std::printf("rational judgment sets (%zu)\n", sets.size());
            for (std::size_t i = 0; i < sets.size(); ++i) {
                std::string row;
                for (int k = 0; k < frame.issue_count(); ++k) {
                    row += sets[i].contains({k, false}) ? "1 " : "0 ";
                }
                std::printf("%3zu | %s| %s\n", i + 1, row.c_str(),
                            literal_set_text(sets[i], frame).c_str());
            }
        }
        return 0;
    }

    std::vector<Implicant> primes = prime_implicants(frame);
    if (global.json()) {
        Json arr = Json::array();
        for (const Implicant& I : primes) {
            Json lits = Json::array();
            for (SignedIssue s : I) lits.push_back(frame.literal_text(s));
            Json j;
            j["literals"] = std::move(lits);
            j["closure"] = literals_json(closure(I, frame), frame);
            arr.push_back(std::move(j));
        }
        Json doc;
        doc["command"] = "enumerate";
        doc["what"] = "implicants";
        doc["implicants"] = std::move(arr);
        emit(doc);
    } else {
        std::printf("prime implicants (%zu)\n", primes.size());
        for (std::size_t i = 0; i < primes.size(); ++i) {
            std::string text = "{";
            for (std::size_t k = 0; k < primes[i].size(); ++k) {
                if (k) text += ", ";
                text += frame.literal_text(primes[i][k]);
            }
            text += "}";
            std::printf("%3zu | size %zu | %s -> %s\n", i + 1,
                        primes[i].size(), text.c_str(),
                        literal_set_text(closure(primes[i], frame), frame)
                            .c_str());
        }
    }
    return 0;
}

// ---- aggregate ---------------------------------------------------------

struct AggregateOptions {
    std::string rule;
    int quota = 0;
    double uniform_c = 0.6;
    std::string crisp_vector_path;
};

int cmd_aggregate(const GlobalOptions& global, const std::string& frame_path,
                  const std::string& profile_path,
                  const AggregateOptions& options) {
    Frame frame = load_frame(frame_path);
    Profile profile = load_profile(profile_path, frame);
    frame.set_source_count(profile.size());

    RuleSpec rule;
    try {
        rule = parse_rule_name(options.rule);
    } catch (const DomainError& e) {
        throw CLI::ValidationError("--rule", e.what());
    }
    rule.quota = options.quota;
    rule.uniform_c = options.uniform_c;
    if (!options.crisp_vector_path.empty()) {
        rule.crisp_vector = load_crisp_vector(options.crisp_vector_path, frame);
    }
    if (rule.kind == RuleSpec::Kind::Quota &&
        (options.quota < 1 || options.quota > profile.size())) {
        throw CLI::ValidationError(
            "--quota", "the quota rule needs --quota in [1, n]");
    }

    AggregationOutcome outcome = apply_rule(frame, profile, rule);
    std::vector<CrispJudgmentSet> winners = outcome.winners;
    if (global.resolute) winners = {resolute_winner(outcome)};

    if (global.json()) {
        Json doc;
        doc["command"] = "aggregate";
        doc["rule"] = rule_display_name(rule);
        doc["resolute"] = global.resolute;
        Json cands = Json::array();
        for (const CandidateScore& c : outcome.diagnostics) {
            Json j;
            j["signs"] = signs_json(c.candidate);
            j["value"] = json_real(c.value);
            cands.push_back(std::move(j));
        }
        doc["lower_is_better"] = outcome.lower_is_better;
        doc["candidates"] = std::move(cands);
        Json ws = Json::array();
        for (std::size_t i = 0; i < winners.size(); ++i) {
            Json w;
            w["signs"] = signs_json(winners[i]);
            w["literals"] = literals_json(winners[i], frame);
            bool rational = winners[i].complete() &&
                            !winners[i].conflicted() &&
                            frame.consistent_with_gamma(winners[i]);
            w["rational"] = rational;
            ws.push_back(std::move(w));
        }
        doc["winners"] = std::move(ws);
        doc["intermediate"] = outcome.intermediate
                                  ? judgment_set_json(*outcome.intermediate,
                                                      frame)
                                  : Json(nullptr);
        if (!outcome.implicant_scores.empty()) {
            Json arr = Json::array();
            for (const ImplicantScore& is : outcome.implicant_scores) {
                Json j;
                Json lits = Json::array();
                for (SignedIssue s : is.implicant) {
                    lits.push_back(frame.literal_text(s));
                }
                j["literals"] = std::move(lits);
                j["value"] = json_real(is.value);
                arr.push_back(std::move(j));
            }
            doc["implicants"] = std::move(arr);
        } else {
            doc["implicants"] = nullptr;
        }
        if (!outcome.addition_order.empty()) {
            Json order = Json::array();
            for (SignedIssue s : outcome.addition_order) {
                order.push_back(frame.literal_text(s));
            }
            doc["addition_order"] = std::move(order);
        } else {
            doc["addition_order"] = nullptr;
        }
        emit(doc);
        return 0;
    }

    std::printf("rule: %s\n", rule_display_name(rule).c_str());
    if (!outcome.diagnostics.empty()) {
        std::string header;
        for (const Formula& f : frame.agenda()) {
            header += pretty_print(f, frame.atoms()) + "  ";
        }
        std::printf("candidates (%s):\n  %s| %s\n",
                    outcome.lower_is_better ? "distance" : "score",
                    header.c_str(),
                    outcome.lower_is_better ? "distance" : "score");
        for (const CandidateScore& c : outcome.diagnostics) {
            std::string row;
            for (int k = 0; k < frame.issue_count(); ++k) {
                std::string cell =
                    c.candidate.contains({k, false}) ? "1" : "0";
                row += cell +
                       std::string(pretty_print(frame.agenda()[k],
                                                frame.atoms())
                                           .size() +
                                       1,
                                   ' ');
            }
            std::printf("  %s| %s\n", row.c_str(), fixed4(c.value).c_str());
        }
    }
    if (outcome.intermediate) {
        std::printf("collective likelihood set:\n");
        for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
            SignedIssue s = SignedIssue::from_slot(slot);
            const LikelihoodEntry& e = outcome.intermediate->at(s);
            if (e.rel == Rel::Geq && e.bound <= 0.0) continue;  // abstentions
            std::printf("  l(%s) %s %s\n", frame.literal_text(s).c_str(),
                        e.rel == Rel::Eq ? "==" : ">=",
                        fixed4(e.bound).c_str());
        }
    }
    if (!outcome.implicant_scores.empty()) {
        std::printf("prime implicant scores:\n");
        for (const ImplicantScore& is : outcome.implicant_scores) {
            std::string text = "{";
            for (std::size_t k = 0; k < is.implicant.size(); ++k) {
                if (k) text += ", ";
                text += frame.literal_text(is.implicant[k]);
            }
            text += "}";
            std::printf("  %-40s %s\n", text.c_str(),
                        fixed4(is.value).c_str());
        }
    }
    if (!outcome.addition_order.empty()) {
        std::printf("addition order:");
        for (SignedIssue s : outcome.addition_order) {
            std::printf(" %s", frame.literal_text(s).c_str());
        }
        std::printf("\n");
    }
    std::printf("winners:\n");
    for (const CrispJudgmentSet& w : winners) {
        bool rational = w.complete() && !w.conflicted() &&
                        frame.consistent_with_gamma(w);
        std::printf("  %s%s\n", literal_set_text(w, frame).c_str(),
                    rational ? "" : "   [not a rational judgment set]");
    }
    return 0;
}

// ---- lift --------------------------------------------------------------

int cmd_lift(const GlobalOptions&, const std::string& frame_path,
             const std::string& profile_path) {
    Frame frame = load_frame(frame_path);
    Profile profile = load_profile(profile_path, frame);
    CrispProfile crisp;
    for (const LikelihoodJudgmentSet& src : profile.sources) {
        crisp.push_back(to_crisp(src));
    }
    Profile lifted = lift_profile(crisp);
    for (std::size_t k = 0; k < lifted.sources.size(); ++k) {
        lifted.sources[k] = LikelihoodJudgmentSet(
            lifted.sources[k].entries(), profile.sources[k].provenance());
    }
    std::cout << render_profile_document(lifted, frame);
    return 0;
}

// ---- check -------------------------------------------------------------

struct CheckOptions {
    std::string property;
    std::string rule = "median";
    std::uint64_t samples = 10000;
    int quota = 0;
    double c = 0.6;
    std::string style = "equalities";
    std::string witness_path = "likejudge-witness.json";
};

JudgmentStyle parse_style(const std::string& name) {
    if (name == "equalities") return JudgmentStyle::Equalities;
    if (name == "lower-bounds") return JudgmentStyle::LowerBounds;
    if (name == "lifted-crisp") return JudgmentStyle::LiftedCrisp;
    throw CLI::ValidationError("--style", "unknown generator style " + name);
}

std::string verdict_token(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnSample: return "holds-on-sample";
        case Verdict::CounterexampleFound: return "counterexample-found";
        case Verdict::StructurallySatisfied: return "structurally-satisfied";
    }
    return "?";
}

int cmd_check(const GlobalOptions& global, const std::string& frame_path,
              const CheckOptions& options) {
    Frame frame = load_frame(frame_path);
    if (frame.source_count() < 1) {
        throw SchemaError(frame_path +
                          ": the check command needs \"n\" in the frame "
                          "document (source count)");
    }
    GeneratorConfig cfg;
    cfg.seed = global.seed;
    cfg.samples = options.samples;
    cfg.style = parse_style(options.style);

    RuleSpec rule;
    try {
        rule = parse_rule_name(options.rule);
    } catch (const DomainError& e) {
        throw CLI::ValidationError("--rule", e.what());
    }
    rule.quota = options.quota > 0 ? options.quota
                                   : frame.source_count() / 2 + 1;
    rule.uniform_c = options.c;

    PropertyReport report;
    if (options.property == "zpp") {
        report = check_zpp(rule, frame, cfg);
    } else if (options.property == "unanimity") {
        report = check_c_unanimity(rule, frame, cfg, options.c);
    } else if (options.property == "convexity") {
        report = check_convexity(frame, cfg, rule.quota);
    } else if (options.property == "systematicity") {
        report = check_systematicity(rule, frame, cfg);
    } else if (options.property == "non-dictatorship") {
        report = check_non_dictatorship(rule, frame, cfg);
    } else if (options.property.rfind("generalization:", 0) == 0) {
        std::string which = options.property.substr(15);
        GenTheorem theorem;
        if (which == "thm1") theorem = GenTheorem::Thm1;
        else if (which == "prop1") theorem = GenTheorem::Prop1;
        else if (which == "prop2") theorem = GenTheorem::Prop2;
        else if (which == "prop4") theorem = GenTheorem::Prop4;
        else throw CLI::ValidationError("property", "unknown theorem " + which);
        report = check_generalization(theorem, frame, cfg);
    } else {
        throw CLI::ValidationError("property",
                                   "unknown property " + options.property);
    }

    Json cex(nullptr);
    if (report.counterexample) {
        const Counterexample& c = *report.counterexample;
        cex = Json::object();
        cex["sample_index"] = c.sample_index;
        cex["detail"] = c.detail;
        Json profiles = Json::array();
        for (const Profile& p : c.profiles) profiles.push_back(profile_json(p, frame));
        cex["profiles"] = std::move(profiles);
        Json issues = Json::array();
        for (SignedIssue s : c.issues) issues.push_back(frame.literal_text(s));
        cex["issues"] = std::move(issues);
        Json outcomes = Json::array();
        for (const CrispJudgmentSet& o : c.outcomes) {
            outcomes.push_back(literals_json(o, frame));
        }
        cex["outcomes"] = std::move(outcomes);

        Json witness;
        witness["property"] = report.property;
        witness["rule"] = report.rule;
        witness["seed"] = report.seed;
        witness["counterexample"] = cex;
        std::ofstream out(options.witness_path);
        out << witness.dump(2) << "\n";
    }

    if (global.json()) {
        Json doc;
        doc["command"] = "check";
        doc["property"] = report.property;
        doc["rule"] = report.rule;
        doc["verdict"] = verdict_token(report.verdict);
        doc["samples_tried"] = report.samples_tried;
        doc["seed"] = report.seed;
        doc["note"] = report.note;
        doc["counterexample"] = cex;
        if (report.counterexample) doc["witness"] = options.witness_path;
        emit(doc);
    } else {
        std::printf("property: %s\nrule: %s\nverdict: %s\nsamples: %llu\nseed: %llu\n",
                    report.property.c_str(), report.rule.c_str(),
                    verdict_token(report.verdict).c_str(),
                    static_cast<unsigned long long>(report.samples_tried),
                    static_cast<unsigned long long>(report.seed));
        if (!report.note.empty()) std::printf("note: %s\n", report.note.c_str());
        if (report.counterexample) {
            std::printf("counterexample at sample %llu: %s\n",
                        static_cast<unsigned long long>(
                            report.counterexample->sample_index),
                        report.counterexample->detail.c_str());
            std::printf("witness written to %s\n", options.witness_path.c_str());
        }
    }
    return report.violated() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "likejudge: aggregate likelihood judgments on logically related "
        "issues into crisp collective judgment sets"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "sampling seed")
        ->capture_default_str();
    app.add_flag("--resolute", global.resolute,
                 "report only the lexicographically first winner");

    std::string frame_path, profile_path, what = "rational";
    AggregateOptions agg;
    CheckOptions check;

    CLI::App* validate =
        app.add_subcommand("validate", "per-source rationality report");
    validate->add_option("frame", frame_path, "frame document")->required();
    validate->add_option("profile", profile_path, "profile document")
        ->required();

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list rational judgment sets or prime implicants");
    enumerate->add_option("frame", frame_path, "frame document")->required();
    enumerate->add_option("what", what, "rational | implicants")
        ->capture_default_str();

    CLI::App* aggregate =
        app.add_subcommand("aggregate", "run an aggregation rule");
    aggregate->add_option("frame", frame_path, "frame document")->required();
    aggregate->add_option("profile", profile_path, "profile document")
        ->required();
    aggregate->add_option("--rule", agg.rule, "rule name")->required();
    aggregate->add_option("--quota", agg.quota, "quota for the quota rule");
    aggregate->add_option("--uniform-c", agg.uniform_c,
                          "uniform crispifying coefficient / pi-maj threshold")
        ->capture_default_str();
    aggregate->add_option("--crisp-vector", agg.crisp_vector_path,
                          "crisp vector document");

    CLI::App* lift_cmd =
        app.add_subcommand("lift", "lift a crisp profile document");
    lift_cmd->add_option("frame", frame_path, "frame document")->required();
    lift_cmd->add_option("profile", profile_path, "crisp profile document")
        ->required();

    CLI::App* check_cmd =
        app.add_subcommand("check", "run an axiom checker");
    check_cmd->add_option("property", check.property,
                          "zpp | unanimity | convexity | systematicity | "
                          "non-dictatorship | generalization:{thm1,prop1,"
                          "prop2,prop4}")
        ->required();
    check_cmd->add_option("frame", frame_path, "frame document")->required();
    check_cmd->add_option("--rule", check.rule, "rule under test")
        ->capture_default_str();
    check_cmd->add_option("--samples", check.samples, "sample budget")
        ->capture_default_str();
    check_cmd->add_option("--quota", check.quota,
                          "quota (defaults to majority)");
    check_cmd->add_option("--c", check.c, "unanimity / crispify threshold")
        ->capture_default_str();
    check_cmd->add_option("--style", check.style,
                          "equalities | lower-bounds | lifted-crisp")
        ->capture_default_str();
    check_cmd->add_option("--witness-out", check.witness_path,
                          "counterexample replay file")
        ->capture_default_str();

    // global flags may appear after the subcommand name
    for (CLI::App* sub : {validate, enumerate, aggregate, lift_cmd, check_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(global, frame_path, profile_path);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(global, frame_path, what);
        }
        if (aggregate->parsed()) {
            return cmd_aggregate(global, frame_path, profile_path, agg);
        }
        if (lift_cmd->parsed()) {
            return cmd_lift(global, frame_path, profile_path);
        }
        if (check_cmd->parsed()) {
            return cmd_check(global, frame_path, check);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include "likejudge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "likejudge/numeric.hpp"

namespace likejudge {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const std::string& context) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(context + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* name, const std::string& context) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw SchemaError(context + ": missing field '" + name + "'");
    }
    return *it;
}

std::string string_field(const Json& j, const char* name,
                         const std::string& context) {
    const Json& v = field(j, name, context);
    if (!v.is_string()) {
        throw SchemaError(context + ": field '" + name + "' must be a string");
    }
    return v.get<std::string>();
}

double number_field(const Json& j, const char* name,
                    const std::string& context) {
    const Json& v = field(j, name, context);
    if (!v.is_number()) {
        throw SchemaError(context + ": field '" + name + "' must be a number");
    }
    return v.get<double>();
}

Formula parse_formula_field(const std::string& text, const AtomTable& atoms,
                            const std::string& context) {
    try {
        return parse_formula(text, atoms);
    } catch (const ParseError& e) {
        throw SchemaError(context + ": in formula \"" + text + "\" at offset " +
                          std::to_string(e.position()) + ": " + e.what());
    }
}

Relation parse_relation(const std::string& token, bool allow_leq,
                        const std::string& context) {
    if (token == ">=") return Relation::Geq;
    if (token == "==") return Relation::Eq;
    if (token == "<=" && allow_leq) return Relation::Leq;
    throw SchemaError(context + ": malformed relation token \"" + token + "\"");
}

int agenda_index_of(const Formula& f, const Frame& frame,
                    const std::string& text, const std::string& context) {
    for (int i = 0; i < frame.issue_count(); ++i) {
        if (frame.agenda()[i] == f) return i;
    }
    throw SchemaError(context + ": formula \"" + text +
                      "\" is not an agenda issue");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path + ": cannot read file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Frame parse_frame_document(const std::string& text,
                           const std::string& context) {
    Json doc = parse_json(text, context);
    if (!doc.is_object()) throw SchemaError(context + ": expected an object");

    const Json& atoms_json = field(doc, "atoms", context);
    if (!atoms_json.is_array()) {
        throw SchemaError(context + ": 'atoms' must be an array");
    }
    std::vector<std::string> names;
    for (const Json& a : atoms_json) {
        if (!a.is_string()) {
            throw SchemaError(context + ": atom names must be strings");
        }
        names.push_back(a.get<std::string>());
    }
    AtomTable atoms;
    try {
        atoms = AtomTable(std::move(names));
    } catch (const DomainError& e) {
        throw SchemaError(context + ": " + e.what());
    }

    const Json& agenda_json = field(doc, "agenda", context);
    if (!agenda_json.is_array()) {
        throw SchemaError(context + ": 'agenda' must be an array");
    }
    std::vector<Formula> agenda;
    for (const Json& f : agenda_json) {
        if (!f.is_string()) {
            throw SchemaError(context + ": agenda entries must be strings");
        }
        agenda.push_back(
            parse_formula_field(f.get<std::string>(), atoms, context));
    }

    std::vector<Formula> gamma;
    if (doc.contains("gamma")) {
        const Json& gamma_json = doc["gamma"];
        if (!gamma_json.is_array()) {
            throw SchemaError(context + ": 'gamma' must be an array");
        }
        for (const Json& f : gamma_json) {
            if (!f.is_string()) {
                throw SchemaError(context + ": gamma entries must be strings");
            }
            gamma.push_back(
                parse_formula_field(f.get<std::string>(), atoms, context));
        }
    }

    std::vector<IssueLinearConstraint> gamma_hat;
    if (doc.contains("gamma_hat")) {
        const Json& gh = doc["gamma_hat"];
        if (!gh.is_array()) {
            throw SchemaError(context + ": 'gamma_hat' must be an array");
        }
        for (const Json& c : gh) {
            IssueLinearConstraint constraint;
            const Json& terms = field(c, "terms", context);
            if (!terms.is_array() || terms.empty()) {
                throw SchemaError(context +
                                  ": gamma_hat terms must be a nonempty array");
            }
            for (const Json& t : terms) {
                double coef = number_field(t, "coef", context);
                std::string formula_text = string_field(t, "issue", context);
                constraint.terms.emplace_back(
                    coef, parse_formula_field(formula_text, atoms, context));
            }
            constraint.relation = parse_relation(
                string_field(c, "rel", context), /*allow_leq=*/true, context);
            constraint.bound = number_field(c, "bound", context);
            gamma_hat.push_back(std::move(constraint));
        }
    }

    int n = 0;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) {
            throw SchemaError(context + ": 'n' must be an integer");
        }
        n = doc["n"].get<int>();
    }

    try {
        return Frame(std::move(atoms), std::move(agenda), std::move(gamma),
                     std::move(gamma_hat), n);
    } catch (const Error& e) {
        throw SchemaError(context + ": " + e.what());
    }
}

Profile parse_profile_document(const std::string& text, const Frame& frame,
                               const std::string& context) {
    Json doc = parse_json(text, context);
    const Json& sources = field(doc, "sources", context);
    if (!sources.is_array() || sources.empty()) {
        throw SchemaError(context + ": 'sources' must be a nonempty array");
    }
    Profile profile;
    int index = 0;
    for (const Json& src : sources) {
        ++index;
        std::string name = src.contains("name")
                               ? string_field(src, "name", context)
                               : "source " + std::to_string(index);
        std::string sctx = context + ": source \"" + name + "\"";
        std::vector<LikelihoodJudgment> stated;
        if (src.contains("judgments")) {
            const Json& judgments = src["judgments"];
            if (!judgments.is_array()) {
                throw SchemaError(sctx + ": 'judgments' must be an array");
            }
            for (const Json& j : judgments) {
                std::string formula_text = string_field(j, "issue", sctx);
                Formula f =
                    parse_formula_field(formula_text, frame.atoms(), sctx);
                bool neg = false;
                if (j.contains("neg")) {
                    if (!j["neg"].is_boolean()) {
                        throw SchemaError(sctx + ": 'neg' must be a boolean");
                    }
                    neg = j["neg"].get<bool>();
                }
                Relation rel =
                    parse_relation(string_field(j, "rel", sctx),
                                   /*allow_leq=*/false, sctx);
                double a = number_field(j, "a", sctx);
                if (!(a >= 0.0 && a <= 1.0)) {
                    throw SchemaError(sctx + ": bound " + std::to_string(a) +
                                      " outside [0,1]");
                }
                LikelihoodJudgment judgment;
                judgment.issue = {
                    agenda_index_of(f, frame, formula_text, sctx), neg};
                judgment.rel = rel == Relation::Eq ? Rel::Eq : Rel::Geq;
                judgment.bound = a;
                stated.push_back(judgment);
            }
        }
        try {
            profile.sources.push_back(
                normalize(stated, frame.issue_count(), name));
        } catch (const Error& e) {
            throw SchemaError(sctx + ": " + e.what());
        }
    }
    return profile;
}

CrispVector parse_crisp_vector_document(const std::string& text,
                                        const Frame& frame,
                                        const std::string& context) {
    Json doc = parse_json(text, context);
    double def = number_field(doc, "default", context);
    std::vector<double> values(2 * frame.issue_count(), def);
    if (doc.contains("overrides")) {
        const Json& overrides = doc["overrides"];
        if (!overrides.is_array()) {
            throw SchemaError(context + ": 'overrides' must be an array");
        }
        for (const Json& o : overrides) {
            std::string formula_text = string_field(o, "issue", context);
            Formula f =
                parse_formula_field(formula_text, frame.atoms(), context);
            bool neg = o.contains("neg") && o["neg"].get<bool>();
            double c = number_field(o, "c", context);
            SignedIssue s{agenda_index_of(f, frame, formula_text, context),
                          neg};
            values[s.slot()] = c;
        }
    }
    try {
        return CrispVector(std::move(values));
    } catch (const DomainError& e) {
        throw SchemaError(context + ": " + e.what());
    }
}

Frame load_frame(const std::string& path) {
    return parse_frame_document(read_file(path), path);
}

Profile load_profile(const std::string& path, const Frame& frame) {
    return parse_profile_document(read_file(path), frame, path);
}

CrispVector load_crisp_vector(const std::string& path, const Frame& frame) {
    return parse_crisp_vector_document(read_file(path), frame, path);
}

std::string render_profile_document(const Profile& profile,
                                    const Frame& frame) {
    Json doc;
    Json sources = Json::array();
    for (const LikelihoodJudgmentSet& src : profile.sources) {
        Json judgments = Json::array();
        for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
            SignedIssue s = SignedIssue::from_slot(slot);
            const LikelihoodEntry& e = src.at(s);
            Json j;
            j["issue"] = pretty_print(frame.agenda()[s.issue], frame.atoms());
            j["neg"] = s.negated;
            j["rel"] = relation_token(e.rel);
            j["a"] = json_real(e.bound);
            judgments.push_back(std::move(j));
        }
        Json entry;
        entry["name"] = src.provenance();
        entry["judgments"] = std::move(judgments);
        sources.push_back(std::move(entry));
    }
    doc["sources"] = std::move(sources);
    return doc.dump(2) + "\n";
}

double json_real(double value) { return canonical_real(value); }

std::string relation_token(Rel rel) {
    return rel == Rel::Eq ? "==" : ">=";
}

}  // namespace likejudge

#include "likejudge/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "likejudge/numeric.hpp"
#include "likejudge/simplex.hpp"

namespace likejudge {

namespace {

constexpr std::uint64_t kProfileSalt = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kAuxSalt = 0xbf58476d1ce4e5b9ull;
constexpr double kOne = 1.0 - 1e-9;  // "bound equals 1" reading

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t salt) {
    return std::mt19937_64(splitmix64(seed ^ salt) ^ splitmix64(index));
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

// A full distribution over worlds, optionally conditioned on a literal.
std::vector<double> sample_distribution(const Frame& frame,
                                        std::mt19937_64& rng,
                                        const SignedIssue* plant) {
    std::vector<double> p(frame.world_count(), 0.0);
    double total = 0.0;
    for (std::uint32_t w = 0; w < frame.world_count(); ++w) {
        if (plant && !frame.literal_true_at(*plant, w)) continue;
        double weight = -std::log(1.0 - next_unit(rng));
        p[w] = weight;
        total += weight;
    }
    for (double& v : p) v /= total;
    return p;
}

LikelihoodJudgmentSet equalities_from_distribution(
    const Frame& frame, const std::vector<double>& p) {
    const int m = frame.issue_count();
    std::vector<LikelihoodEntry> entries(2 * m);
    for (int i = 0; i < m; ++i) {
        double a = 0.0;
        for (std::uint32_t w = 0; w < frame.world_count(); ++w) {
            if (frame.issue_true_at(i, w)) a += p[w];
        }
        a = canonical_real(std::min(1.0, std::max(0.0, a)));
        entries[SignedIssue{i, false}.slot()] = {Rel::Eq, a};
        entries[SignedIssue{i, true}.slot()] = {Rel::Eq, canonical_real(1.0 - a)};
    }
    return LikelihoodJudgmentSet(std::move(entries), "");
}

bool satisfies_gamma_hat(const Frame& frame, const std::vector<double>& p) {
    for (const LinearConstraint& c : frame.gamma_hat_worldspace()) {
        double lhs = 0.0;
        for (std::uint32_t w = 0; w < frame.world_count(); ++w) {
            lhs += c.coefficients[w] * p[w];
        }
        switch (c.relation) {
            case Relation::Geq:
                if (lhs < c.bound - kFeasEps) return false;
                break;
            case Relation::Leq:
                if (lhs > c.bound + kFeasEps) return false;
                break;
            case Relation::Eq:
                if (std::abs(lhs - c.bound) > kFeasEps) return false;
                break;
        }
    }
    return true;
}

LikelihoodJudgmentSet sample_equalities(const Frame& frame,
                                        std::mt19937_64& rng,
                                        const SignedIssue* plant) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> p = sample_distribution(frame, rng, plant);
        if (!satisfies_gamma_hat(frame, p)) continue;
        return equalities_from_distribution(frame, p);
    }
    throw GenerationError("profile generation failed after bounded retries");
}

FeasibilityProblem lp_of_set(const Frame& frame,
                             const LikelihoodJudgmentSet& set) {
    FeasibilityProblem problem;
    problem.world_count = frame.world_count();
    for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        const LikelihoodEntry& e = set.at(s);
        if (e.rel == Rel::Geq && e.bound <= 0.0) continue;
        LinearConstraint c;
        c.coefficients = frame.literal_indicator(s);
        c.relation = e.rel == Rel::Eq ? Relation::Eq : Relation::Geq;
        c.bound = e.bound;
        problem.constraints.push_back(std::move(c));
    }
    for (const LinearConstraint& c : frame.gamma_hat_worldspace()) {
        problem.constraints.push_back(c);
    }
    return problem;
}

// Tightening every >= bound to its implied minimum leaves the feasible
// region unchanged, so one pass restores finality.
LikelihoodJudgmentSet repair_finality(const Frame& frame,
                                      const LikelihoodJudgmentSet& set) {
    FeasibilityProblem problem = lp_of_set(frame, set);
    std::vector<LikelihoodEntry> entries = set.entries();
    for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
        SignedIssue s = SignedIssue::from_slot(slot);
        if (entries[slot].rel != Rel::Geq) continue;
        double implied =
            minimize(problem, frame.literal_indicator(s));
        implied = canonical_real(std::min(1.0, std::max(0.0, implied)));
        if (implied > entries[slot].bound) entries[slot].bound = implied;
    }
    return LikelihoodJudgmentSet(std::move(entries), set.provenance());
}

LikelihoodJudgmentSet sample_lower_bounds(const Frame& frame,
                                          std::mt19937_64& rng,
                                          const SignedIssue* plant) {
    LikelihoodJudgmentSet eq = sample_equalities(frame, rng, plant);
    std::vector<LikelihoodEntry> entries = eq.entries();
    for (LikelihoodEntry& e : entries) {
        e.rel = Rel::Geq;
        e.bound = canonical_real(e.bound * next_unit(rng));
    }
    if (plant) entries[plant->slot()] = {Rel::Geq, 1.0};
    return repair_finality(
        frame, LikelihoodJudgmentSet(std::move(entries), eq.provenance()));
}

CrispJudgmentSet sample_rational_set(const std::vector<CrispJudgmentSet>& all,
                                     std::mt19937_64& rng) {
    return all[next_below(rng, all.size())];
}

Profile sample_profile(const Frame& frame, JudgmentStyle style,
                       std::mt19937_64& rng, const SignedIssue* plant) {
    const int n = frame.source_count();
    if (n < 1) {
        throw DomainError("frame needs a source count to generate profiles");
    }
    Profile profile;
    profile.sources.reserve(n);
    if (style == JudgmentStyle::LiftedCrisp) {
        std::vector<CrispJudgmentSet> all = rational_sets(frame);
        for (int k = 0; k < n; ++k) {
            profile.sources.push_back(lift(sample_rational_set(all, rng)));
        }
        return profile;
    }
    for (int k = 0; k < n; ++k) {
        profile.sources.push_back(style == JudgmentStyle::Equalities
                                      ? sample_equalities(frame, rng, plant)
                                      : sample_lower_bounds(frame, rng, plant));
    }
    return profile;
}

PropertyReport base_report(std::string property, const RuleSpec* rule,
                           const GeneratorConfig& cfg) {
    PropertyReport report;
    report.property = std::move(property);
    if (rule) report.rule = rule_display_name(*rule);
    report.seed = cfg.seed;
    return report;
}

bool structurally_zpp(const RuleSpec& rule) {
    using Kind = RuleSpec::Kind;
    switch (rule.kind) {
        case Kind::Quota:
        case Kind::Majority:
        case Kind::Unanimity:
        case Kind::SeqAvg:
            return true;
        default:
            return false;
    }
}

}  // namespace

Profile generate_profile(const Frame& frame, const GeneratorConfig& cfg,
                         std::uint64_t sample_index) {
    std::mt19937_64 rng = sample_rng(cfg.seed, sample_index, kProfileSalt);
    return sample_profile(frame, cfg.style, rng, nullptr);
}

PropertyReport check_zpp(const RuleSpec& rule, const Frame& frame,
                         const GeneratorConfig& cfg) {
    PropertyReport report = base_report("zpp", &rule, cfg);
    const int slots = 2 * frame.issue_count();
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        std::mt19937_64 rng = sample_rng(cfg.seed, i, kProfileSalt);
        std::mt19937_64 aux = sample_rng(cfg.seed, i, kAuxSalt);
        SignedIssue planted;
        const SignedIssue* plant = nullptr;
        if (next_unit(aux) < 0.5) {
            planted = SignedIssue::from_slot(
                static_cast<int>(next_below(aux, slots)));
            plant = &planted;
        }
        Profile profile = sample_profile(frame, cfg.style, rng, plant);
        ++report.samples_tried;

        std::vector<SignedIssue> certain;
        for (int slot = 0; slot < slots; ++slot) {
            SignedIssue s = SignedIssue::from_slot(slot);
            bool all_one = true;
            for (const LikelihoodJudgmentSet& src : profile.sources) {
                if (src.bound(s) < kOne) {
                    all_one = false;
                    break;
                }
            }
            if (all_one) certain.push_back(s);
        }
        if (certain.empty()) continue;
        if (!frame.consistent_with_gamma(certain)) continue;

        AggregationOutcome outcome = apply_rule(frame, profile, rule);
        for (const CrispJudgmentSet& winner : outcome.winners) {
            for (SignedIssue s : certain) {
                if (!winner.contains(s)) {
                    report.verdict = Verdict::CounterexampleFound;
                    report.counterexample = Counterexample{
                        {profile},
                        {s},
                        {winner},
                        i,
                        "unanimously certain judgment missing from a winner"};
                    return report;
                }
            }
        }
    }
    report.verdict = structurally_zpp(rule) ? Verdict::StructurallySatisfied
                                            : Verdict::HoldsOnSample;
    return report;
}

PropertyReport check_c_unanimity(const RuleSpec& rule, const Frame& frame,
                                 const GeneratorConfig& cfg, double c) {
    PropertyReport report = base_report("unanimity", &rule, cfg);
    const int slots = 2 * frame.issue_count();
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        std::mt19937_64 rng = sample_rng(cfg.seed, i, kProfileSalt);
        std::mt19937_64 aux = sample_rng(cfg.seed, i, kAuxSalt);
        SignedIssue planted;
        const SignedIssue* plant = nullptr;
        if (next_unit(aux) < 0.5) {
            planted = SignedIssue::from_slot(
                static_cast<int>(next_below(aux, slots)));
            plant = &planted;
        }
        Profile profile = sample_profile(frame, cfg.style, rng, plant);
        ++report.samples_tried;

        AggregationOutcome outcome = apply_rule(frame, profile, rule);
        for (int slot = 0; slot < slots; ++slot) {
            SignedIssue s = SignedIssue::from_slot(slot);
            bool unanimous = true;
            for (const LikelihoodJudgmentSet& src : profile.sources) {
                if (src.bound(s) < c) {
                    unanimous = false;
                    break;
                }
            }
            if (!unanimous) continue;
            for (const CrispJudgmentSet& winner : outcome.winners) {
                if (!winner.contains(s)) {
                    report.verdict = Verdict::CounterexampleFound;
                    report.counterexample = Counterexample{
                        {profile},
                        {s},
                        {winner},
                        i,
                        "judgment at likelihood >= c everywhere missing from "
                        "a winner"};
                    return report;
                }
            }
        }
    }
    report.verdict = Verdict::HoldsOnSample;
    return report;
}

PropertyReport check_convexity(const Frame& frame, const GeneratorConfig& cfg,
                               int quota) {
    RuleSpec quota_rule_spec;
    quota_rule_spec.kind = RuleSpec::Kind::Quota;
    quota_rule_spec.quota = quota;
    PropertyReport report = base_report("convexity", &quota_rule_spec, cfg);
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        std::mt19937_64 rng = sample_rng(cfg.seed, i, kProfileSalt);
        Profile profile = sample_profile(frame, cfg.style, rng, nullptr);
        ++report.samples_tried;
        LikelihoodJudgmentSet collective = quota_likelihood(profile, quota);
        for (int slot = 0; slot < 2 * frame.issue_count(); ++slot) {
            SignedIssue s = SignedIssue::from_slot(slot);
            double lo = 1.0, hi = 0.0;
            for (const LikelihoodJudgmentSet& src : profile.sources) {
                lo = std::min(lo, src.bound(s));
                hi = std::max(hi, src.bound(s));
            }
            double a = collective.bound(s);
            if (a < lo || a > hi) {
                report.verdict = Verdict::CounterexampleFound;
                report.counterexample = Counterexample{
                    {profile}, {s}, {}, i,
                    "quota bound leaves the individually stated range"};
                return report;
            }
        }
    }
    report.verdict = Verdict::StructurallySatisfied;
    return report;
}

PropertyReport check_systematicity(const RuleSpec& rule, const Frame& frame,
                                   const GeneratorConfig& cfg) {
    PropertyReport report = base_report("systematicity", &rule, cfg);
    if (!frame.gamma_hat().empty()) {
        report.note =
            "falsifier restricted to frames without probabilistic "
            "constraints; nothing checked";
        report.verdict = Verdict::HoldsOnSample;
        return report;
    }
    const int slots = 2 * frame.issue_count();
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        std::mt19937_64 rng_a = sample_rng(cfg.seed, 2 * i, kProfileSalt);
        std::mt19937_64 rng_b = sample_rng(cfg.seed, 2 * i + 1, kProfileSalt);
        std::mt19937_64 aux = sample_rng(cfg.seed, i, kAuxSalt);
        ++report.samples_tried;

        Profile donor = sample_profile(frame, cfg.style, rng_a, nullptr);
        Profile base = sample_profile(frame, cfg.style, rng_b, nullptr);
        SignedIssue phi =
            SignedIssue::from_slot(static_cast<int>(next_below(aux, slots)));
        SignedIssue psi = phi;
        while (psi == phi) {
            psi = SignedIssue::from_slot(
                static_cast<int>(next_below(aux, slots)));
        }

        // Transplant phi's projection onto psi, repairing the complement and
        // finality so the result stays a candidate rational profile.
        Profile transplanted = base;
        bool valid = true;
        for (int k = 0; k < transplanted.size() && valid; ++k) {
            std::vector<LikelihoodEntry> entries =
                transplanted.sources[k].entries();
            LikelihoodEntry moved = donor.sources[k].at(phi);
            entries[psi.slot()] = moved;
            if (moved.rel == Rel::Eq) {
                entries[psi.complement().slot()] = {
                    Rel::Eq, canonical_real(1.0 - moved.bound)};
            } else {
                LikelihoodEntry& comp = entries[psi.complement().slot()];
                comp.rel = Rel::Geq;
                comp.bound = canonical_real(
                    std::min(comp.bound, 1.0 - moved.bound));
            }
            LikelihoodJudgmentSet candidate(std::move(entries), "");
            if (!feasible(lp_of_set(frame, candidate))) {
                valid = false;
                break;
            }
            if (moved.rel == Rel::Geq) {
                candidate = repair_finality(frame, candidate);
                // repair must not disturb the transplanted projection
                if (candidate.bound(psi) != moved.bound) {
                    valid = false;
                    break;
                }
            }
            transplanted.sources[k] = std::move(candidate);
        }
        if (!valid) continue;

        CrispJudgmentSet w1 = resolute_winner(apply_rule(frame, donor, rule));
        CrispJudgmentSet w2 =
            resolute_winner(apply_rule(frame, transplanted, rule));
        if (w1.contains(phi) != w2.contains(psi)) {
            report.verdict = Verdict::CounterexampleFound;
            report.counterexample = Counterexample{
                {donor, transplanted},
                {phi, psi},
                {w1, w2},
                i,
                "equal projections treated differently"};
            return report;
        }
    }
    report.verdict = Verdict::HoldsOnSample;
    return report;
}

PropertyReport check_non_dictatorship(const RuleSpec& rule, const Frame& frame,
                                      const GeneratorConfig& cfg) {
    PropertyReport report = base_report("non-dictatorship", &rule, cfg);
    const int n = frame.source_count();
    if (n < 1) throw DomainError("frame needs a source count");
    for (int k = 0; k < n; ++k) {
        bool witness = false;
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
            std::mt19937_64 rng = sample_rng(
                cfg.seed, i * static_cast<std::uint64_t>(n) + k, kProfileSalt);
            Profile profile = sample_profile(frame, cfg.style, rng, nullptr);
            ++report.samples_tried;
            Profile solo;
            solo.sources.assign(n, profile.sources[k]);
            CrispJudgmentSet w = resolute_winner(apply_rule(frame, profile, rule));
            CrispJudgmentSet wk = resolute_winner(apply_rule(frame, solo, rule));
            if (!(w == wk)) {
                witness = true;
                break;
            }
        }
        if (!witness) {
            report.verdict = Verdict::CounterexampleFound;
            report.counterexample = Counterexample{
                {},
                {},
                {},
                0,
                "source " + std::to_string(k + 1) +
                    " decides every sampled profile (dictator)"};
            return report;
        }
    }
    report.verdict = Verdict::HoldsOnSample;
    return report;
}

namespace {

CrispVector random_crisp_vector(int issue_count, std::mt19937_64& rng) {
    std::vector<double> values(2 * issue_count);
    for (int i = 0; i < issue_count; ++i) {
        double u = 0.0, v = 0.0;
        do {
            u = next_unit(rng);
            v = next_unit(rng);
        } while (!(u + v > 1.0));
        values[SignedIssue{i, false}.slot()] = u;
        values[SignedIssue{i, true}.slot()] = v;
    }
    return CrispVector(std::move(values));
}

}  // namespace

PropertyReport check_generalization(GenTheorem theorem, const Frame& frame,
                                    const GeneratorConfig& cfg) {
    PropertyReport report;
    report.property = "generalization:" + theorem_display_name(theorem);
    report.seed = cfg.seed;
    const int n = frame.source_count();
    if (n < 1) throw DomainError("frame needs a source count");
    std::vector<CrispJudgmentSet> all = rational_sets(frame);

    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        std::mt19937_64 rng = sample_rng(cfg.seed, i, kProfileSalt);
        std::mt19937_64 aux = sample_rng(cfg.seed, i, kAuxSalt);
        ++report.samples_tried;

        CrispProfile crisp;
        crisp.reserve(n);
        for (int k = 0; k < n; ++k) {
            crisp.push_back(sample_rational_set(all, rng));
        }
        Profile lifted = lift_profile(crisp);

        bool mismatch = false;
        std::vector<CrispJudgmentSet> lhs, rhs;
        std::string detail;
        switch (theorem) {
            case GenTheorem::Thm1: {
                CrispVector c = random_crisp_vector(frame.issue_count(), aux);
                CrispJudgmentSet direct =
                    majoritarian_set(crisp, frame.issue_count());
                AggregationOutcome quota =
                    quota_rule(frame, lifted, n / 2 + 1, c);
                mismatch = !(direct == quota.winners.front());
                lhs = {direct};
                rhs = {quota.winners.front()};
                detail = "m(P) vs majority quota on the lifted profile";
                break;
            }
            case GenTheorem::Prop1: {
                CrispVector c = random_crisp_vector(frame.issue_count(), aux);
                int q = 1 + static_cast<int>(next_below(aux, n));
                AggregationOutcome composed = quota_rule(frame, lifted, q, c);
                CrispProfile crispified;
                crispified.reserve(n);
                for (const LikelihoodJudgmentSet& src : lifted.sources) {
                    crispified.push_back(crispify(src, c));
                }
                CrispJudgmentSet direct =
                    crisp_quota(crispified, q, frame.issue_count());
                mismatch = !(composed.winners.front() == direct);
                lhs = {composed.winners.front()};
                rhs = {direct};
                detail = "crisp(f_q) vs U_q of the crispified profile, q=" +
                         std::to_string(q);
                break;
            }
            case GenTheorem::Prop2: {
                lhs = crisp_median(frame, crisp).winners;
                rhs = median_likelihood(frame, lifted).winners;
                mismatch = !(lhs == rhs);
                detail = "crisp median vs median likelihood winners";
                break;
            }
            case GenTheorem::Prop4: {
                lhs = crisp_kemeny(frame, crisp).winners;
                rhs = distance_rule(frame, lifted, Metric::Euclidean, Mode::Sum)
                          .winners;
                mismatch = !(lhs == rhs);
                detail = "Kemeny vs Euclidean-sum winners";
                break;
            }
        }
        if (mismatch) {
            report.verdict = Verdict::CounterexampleFound;
            Counterexample cex;
            cex.profiles = {lifted};
            cex.outcomes = lhs;
            cex.outcomes.insert(cex.outcomes.end(), rhs.begin(), rhs.end());
            cex.sample_index = i;
            cex.detail = detail;
            report.counterexample = std::move(cex);
            return report;
        }
    }
    report.verdict = Verdict::HoldsOnSample;
    return report;
}

bool reverify_systematicity(const RuleSpec& rule, const Frame& frame,
                            const Counterexample& cex) {
    if (cex.profiles.size() != 2 || cex.issues.size() != 2) return false;
    CrispJudgmentSet w1 =
        resolute_winner(apply_rule(frame, cex.profiles[0], rule));
    CrispJudgmentSet w2 =
        resolute_winner(apply_rule(frame, cex.profiles[1], rule));
    return w1.contains(cex.issues[0]) != w2.contains(cex.issues[1]);
}

std::string rule_display_name(const RuleSpec& rule) {
    using Kind = RuleSpec::Kind;
    switch (rule.kind) {
        case Kind::Quota: return "quota";
        case Kind::Majority: return "majority";
        case Kind::Unanimity: return "unanimity";
        case Kind::Median: return "median";
        case Kind::CrispMedian: return "crisp-median";
        case Kind::SeqAvg: return "seq-avg";
        case Kind::Distance:
            if (rule.metric == Metric::Euclidean) {
                return rule.mode == Mode::Sum ? "dist-e-sum" : "dist-e-max";
            }
            return rule.mode == Mode::Sum ? "dist-l1-sum" : "dist-l1-max";
        case Kind::Kemeny: return "kemeny";
        case Kind::PrimeImplicant:
            switch (rule.scoring) {
                case PiScoring::SumAvg: return "pi-sum";
                case PiScoring::MinAvg: return "pi-min";
                case PiScoring::MajorityCount: return "pi-maj";
            }
            return "pi";
        case Kind::Dictator: return "dictator";
    }
    return "?";
}

std::string theorem_display_name(GenTheorem theorem) {
    switch (theorem) {
        case GenTheorem::Thm1: return "thm1";
        case GenTheorem::Prop1: return "prop1";
        case GenTheorem::Prop2: return "prop2";
        case GenTheorem::Prop4: return "prop4";
    }
    return "?";
}

}  // namespace likejudge

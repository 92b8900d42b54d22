#ifndef LIKEJUDGE_PROPERTIES_HPP
#define LIKEJUDGE_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "likejudge/aggregate.hpp"

namespace likejudge {

enum class JudgmentStyle { Equalities, LowerBounds, LiftedCrisp };

struct GeneratorConfig {
    std::uint64_t seed = 42;
    JudgmentStyle style = JudgmentStyle::Equalities;
    std::uint64_t samples = 10000;
};

// Rational by construction: Equalities samples a full distribution per source
// and states point likelihoods; LowerBounds weakens those to >= bounds and
// re-tightens them to their LP-implied minima (finality repair); LiftedCrisp
// lifts uniform draws from the frame's rational sets.
Profile generate_profile(const Frame& frame, const GeneratorConfig& cfg,
                         std::uint64_t sample_index = 0);

enum class Verdict { HoldsOnSample, CounterexampleFound, StructurallySatisfied };

struct Counterexample {
    std::vector<Profile> profiles;
    std::vector<SignedIssue> issues;
    std::vector<CrispJudgmentSet> outcomes;
    std::uint64_t sample_index = 0;
    std::string detail;
};

struct PropertyReport {
    std::string property;
    std::string rule;
    Verdict verdict = Verdict::HoldsOnSample;
    std::optional<Counterexample> counterexample;
    std::uint64_t samples_tried = 0;
    std::uint64_t seed = 0;
    std::string note;

    bool violated() const { return verdict == Verdict::CounterexampleFound; }
};

// Zero preservation: issues unanimously at likelihood 1 must enter every
// winner whenever they are jointly Gamma-consistent. The sampler plants a
// unanimously-certain literal in half the profiles so Z is exercised.
PropertyReport check_zpp(const RuleSpec& rule, const Frame& frame,
                         const GeneratorConfig& cfg);

// c-unanimity: support at least c from every source forces membership.
PropertyReport check_c_unanimity(const RuleSpec& rule, const Frame& frame,
                                 const GeneratorConfig& cfg, double c);

// Convexity of the quota intermediate f-hat_q: each collective bound lies
// between the per-issue minimum and maximum stated bounds.
PropertyReport check_convexity(const Frame& frame, const GeneratorConfig& cfg,
                               int quota);

// Falsification search for systematicity (equal projections must be
// treated alike): transplants one issue's projection onto another issue
// of a second profile, repairs rationality, and compares memberships
// under the resolute rule.
// Restricted to frames without probabilistic constraints.
PropertyReport check_systematicity(const RuleSpec& rule, const Frame& frame,
                                   const GeneratorConfig& cfg);

// Searches, for every source k, for a profile the rule treats differently
// from the all-k profile; a source without such a witness is reported as a
// dictator.
PropertyReport check_non_dictatorship(const RuleSpec& rule, const Frame& frame,
                                      const GeneratorConfig& cfg);

enum class GenTheorem { Thm1, Prop1, Prop2, Prop4 };

// Evaluates both sides of a generalization statement on seeded lifted crisp
// profiles; any discrepancy is reported as a counterexample.
PropertyReport check_generalization(GenTheorem theorem, const Frame& frame,
                                    const GeneratorConfig& cfg);

// Re-runs the rule on a stored systematicity counterexample and confirms the
// membership mismatch is still there.
bool reverify_systematicity(const RuleSpec& rule, const Frame& frame,
                            const Counterexample& cex);

std::string rule_display_name(const RuleSpec& rule);
std::string theorem_display_name(GenTheorem theorem);

}  // namespace likejudge

#endif

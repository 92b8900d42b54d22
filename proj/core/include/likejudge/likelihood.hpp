#ifndef LIKEJUDGE_LIKELIHOOD_HPP
#define LIKEJUDGE_LIKELIHOOD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "likejudge/judgments.hpp"

namespace likejudge {

class Frame;

enum class Rel : std::uint8_t { Geq, Eq };

// l(phi) >=* a for one element of signed agenda.
struct LikelihoodJudgment {
    SignedIssue issue;
    Rel rel = Rel::Geq;
    double bound = 0.0;
};

struct LikelihoodEntry {
    Rel rel = Rel::Geq;
    double bound = 0.0;  // in [0,1]
};

// One likelihood judgment per element of signed agenda (abstentions are explicit
// (>=, 0) entries). Construct through normalize() or lift().
class LikelihoodJudgmentSet {
public:
    LikelihoodJudgmentSet() = default;
    LikelihoodJudgmentSet(std::vector<LikelihoodEntry> entries,
                          std::string provenance)
        : entries_(std::move(entries)), provenance_(std::move(provenance)) {}

    int issue_count() const { return static_cast<int>(entries_.size()) / 2; }
    const LikelihoodEntry& at(SignedIssue issue) const {
        return entries_.at(issue.slot());
    }
    double bound(SignedIssue issue) const { return at(issue).bound; }
    Rel rel(SignedIssue issue) const { return at(issue).rel; }
    const std::vector<LikelihoodEntry>& entries() const { return entries_; }
    const std::string& provenance() const { return provenance_; }

    friend bool operator==(const LikelihoodJudgmentSet& a,
                           const LikelihoodJudgmentSet& b) {
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            if (a.entries_[i].rel != b.entries_[i].rel ||
                a.entries_[i].bound != b.entries_[i].bound) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<LikelihoodEntry> entries_;  // signed-agenda order, size 2m
    std::string provenance_;
};

struct Profile {
    std::vector<LikelihoodJudgmentSet> sources;
    int size() const { return static_cast<int>(sources.size()); }
};

using CrispProfile = std::vector<CrispJudgmentSet>;

struct ImpliedBound {
    SignedIssue issue;
    double stated = 0.0;
    double implied = 0.0;
};

struct RationalityReport {
    bool complete = false;
    bool consistent = false;
    bool final = false;
    std::vector<ImpliedBound> offending;
    bool rational() const { return complete && consistent && final; }
};

// Completes a stated judgment list into a full set: missing entries become
// (>=, 0); a stated equality on phi fixes ~phi at (=, 1-a). Rejects duplicate
// statements, statements clashing with the equality completion, and pairs
// with bound(phi) + bound(~phi) > 1.
LikelihoodJudgmentSet normalize(const std::vector<LikelihoodJudgment>& stated,
                                int issue_count,
                                std::string provenance = "");

// Consistency is feasibility of the induced LP over worlds (judgments plus
// the frame's probabilistic constraints); finality compares each >= bound
// with its LP-implied minimum.
RationalityReport check_rationality(const LikelihoodJudgmentSet& set,
                                    const Frame& frame);

// J -> J*: members at (=,1), complements at (=,0). Requires a complete set.
LikelihoodJudgmentSet lift(const CrispJudgmentSet& set);
Profile lift_profile(const CrispProfile& profile);

// Inverse of lift for 0/1 equality sets; DomainError when the set is not the
// image of a complete crisp set.
CrispJudgmentSet to_crisp(const LikelihoodJudgmentSet& set);

}  // namespace likejudge

#endif

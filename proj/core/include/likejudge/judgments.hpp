#ifndef LIKEJUDGE_JUDGMENTS_HPP
#define LIKEJUDGE_JUDGMENTS_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "likejudge/errors.hpp"

namespace likejudge {

// A signed agenda element: an issue or its negation.
struct SignedIssue {
    int issue = 0;
    bool negated = false;

    SignedIssue complement() const { return {issue, !negated}; }
    // Position in the canonical signed-agenda order (issue 0, its negation, issue 1, ...).
    int slot() const { return 2 * issue + (negated ? 1 : 0); }
    static SignedIssue from_slot(int slot) { return {slot / 2, slot % 2 == 1}; }

    friend bool operator==(const SignedIssue&, const SignedIssue&) = default;
    // Issue order, positive literal before negative.
    friend auto operator<=>(const SignedIssue& a, const SignedIssue& b) {
        return a.slot() <=> b.slot();
    }
};

// A set of crisp judgments over the agenda. Rationality-relevant flows keep
// at most one sign per issue; quota-style outputs are unrestricted and may
// carry both signs on an issue (tracked, never silently dropped).
class CrispJudgmentSet {
public:
    enum class Sign : std::uint8_t { Unset, Accept, Reject, Both };

    CrispJudgmentSet() = default;
    explicit CrispJudgmentSet(int issue_count)
        : signs_(issue_count, Sign::Unset) {}

    int issue_count() const { return static_cast<int>(signs_.size()); }

    void add(SignedIssue literal);
    bool contains(SignedIssue literal) const;
    Sign sign(int issue) const { return signs_.at(issue); }

    // Exactly one sign per issue.
    bool complete() const;
    // Some issue carries both signs.
    bool conflicted() const;
    int decided_count() const;

    // Members in canonical order (issue ascending, positive before negative).
    std::vector<SignedIssue> literals() const;

    // Sort key for complete sets: accept < reject, issue 0 most significant.
    // Conflicted/partial sets order after complete ones, by raw signs.
    std::uint64_t lex_key() const;

    friend bool operator==(const CrispJudgmentSet&, const CrispJudgmentSet&) =
        default;

private:
    std::vector<Sign> signs_;
};

// Number of issues on which two complete sets differ.
int hamming_distance(const CrispJudgmentSet& a, const CrispJudgmentSet& b);

}  // namespace likejudge

#endif

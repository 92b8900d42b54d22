#include "likejudge/judgments.hpp"

namespace likejudge {

void CrispJudgmentSet::add(SignedIssue literal) {
    Sign& s = signs_.at(literal.issue);
    Sign mine = literal.negated ? Sign::Reject : Sign::Accept;
    if (s == Sign::Unset) {
        s = mine;
    } else if (s != mine && s != Sign::Both) {
        s = Sign::Both;
    }
}

bool CrispJudgmentSet::contains(SignedIssue literal) const {
    Sign s = signs_.at(literal.issue);
    if (s == Sign::Both) return true;
    return s == (literal.negated ? Sign::Reject : Sign::Accept);
}

bool CrispJudgmentSet::complete() const {
    for (Sign s : signs_) {
        if (s != Sign::Accept && s != Sign::Reject) return false;
    }
    return true;
}

bool CrispJudgmentSet::conflicted() const {
    for (Sign s : signs_) {
        if (s == Sign::Both) return true;
    }
    return false;
}

int CrispJudgmentSet::decided_count() const {
    int n = 0;
    for (Sign s : signs_) {
        if (s == Sign::Accept || s == Sign::Reject) ++n;
    }
    return n;
}

std::vector<SignedIssue> CrispJudgmentSet::literals() const {
    std::vector<SignedIssue> out;
    for (int i = 0; i < issue_count(); ++i) {
        if (signs_[i] == Sign::Accept || signs_[i] == Sign::Both) {
            out.push_back({i, false});
        }
        if (signs_[i] == Sign::Reject || signs_[i] == Sign::Both) {
            out.push_back({i, true});
        }
    }
    return out;
}

std::uint64_t CrispJudgmentSet::lex_key() const {
    std::uint64_t key = 0;
    for (Sign s : signs_) {
        key = key * 4 + static_cast<std::uint64_t>(
                            s == Sign::Accept ? 0
                            : s == Sign::Reject ? 1
                            : s == Sign::Unset  ? 2
                                                : 3);
    }
    return key;
}

int hamming_distance(const CrispJudgmentSet& a, const CrispJudgmentSet& b) {
    if (a.issue_count() != b.issue_count()) {
        throw DomainError("hamming distance over mismatched agendas");
    }
    int d = 0;
    for (int i = 0; i < a.issue_count(); ++i) {
        if (a.sign(i) != b.sign(i)) ++d;
    }
    return d;
}

}  // namespace likejudge

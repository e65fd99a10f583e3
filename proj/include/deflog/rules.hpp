#ifndef DEFLOG_RULES_HPP
#define DEFLOG_RULES_HPP

#include <utility>

#include "deflog/sentence.hpp"

namespace deflog {

/// A default rule `prerequisite : justification / consequent`.
struct DefaultRule {
    Sentence prerequisite;
    Sentence justification;
    Sentence consequent;
};

/// A logic-program rule `head <- positive_body, not weakly_negated`.
struct LpRule {
    Sentence head;
    Sentence positive_body;
    Sentence weakly_negated;
};

/// Translates a default into two conditionals: `p -> r` and
/// `N -> ~(p -> r)`, where N is the caller-supplied contrary of the
/// justification.
std::pair<Sentence, Sentence> default_to_sentences(SentenceStore& store, const DefaultRule& d,
                                                   Sentence contrary_of_justification);

/// The default contrary convention for atomic justifications: atom `x`
/// maps to a fresh atom `neg_x`, and `neg_x` maps back to `x`. There is no
/// built-in classical negation, so compound justifications are rejected.
Sentence default_contrary(SentenceStore& store, Sentence justification);

/// Translates a program rule into `q -> p` and `r -> ~(q -> p)`.
std::pair<Sentence, Sentence> lp_rule_to_sentences(SentenceStore& store, const LpRule& r);

} // namespace deflog

#endif

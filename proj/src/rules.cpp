#include "deflog/rules.hpp"

#include <string>

#include "deflog/errors.hpp"

namespace deflog {

std::pair<Sentence, Sentence> default_to_sentences(SentenceStore& store, const DefaultRule& d,
                                                   Sentence contrary_of_justification) {
    Sentence applied = store.cond(d.prerequisite, d.consequent);
    Sentence blocked = store.cond(contrary_of_justification, store.dneg(applied));
    return {applied, blocked};
}

Sentence default_contrary(SentenceStore& store, Sentence justification) {
    if (!justification.is_atom())
        throw PreconditionError("the contrary convention covers atomic justifications only");
    std::string name(justification.atom_name());
    if (name.rfind("neg_", 0) == 0) return store.atom(name.substr(4));
    return store.atom("neg_" + name);
}

std::pair<Sentence, Sentence> lp_rule_to_sentences(SentenceStore& store, const LpRule& r) {
    Sentence applied = store.cond(r.positive_body, r.head);
    Sentence blocked = store.cond(r.weakly_negated, store.dneg(applied));
    return {applied, blocked};
}

} // namespace deflog

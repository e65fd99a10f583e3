#ifndef DEFLOG_SEMANTICS_HPP
#define DEFLOG_SEMANTICS_HPP

#include <optional>
#include <vector>

#include "deflog/options.hpp"
#include "deflog/sentence_set.hpp"

namespace deflog {

/// The support closure of a base set: the least superset closed under
/// modus ponens for the support conditional.
struct SupportSet {
    SentenceSet base;
    SentenceSet closure;
};

/// A dialectical interpretation of a theory, carried by its specifying set
/// J together with the full supported and attacked sets. Sentences in
/// neither set are simply not interpreted.
struct Extension {
    SentenceSet specifier; // J = justified ∩ Δ
    SentenceSet justified; // Supp(J)
    SentenceSet defeated;  // Att(J)
};

SupportSet supp(const SentenceSet& t);

/// True iff phi is in t or follows from t by repeated modus ponens.
bool supports(const SentenceSet& t, Sentence phi);

/// True iff t supports the dialectical negation of phi.
bool attacks(const SentenceSet& t, Sentence phi);

/// True iff no sentence is both supported and attacked by t.
bool is_conflict_free(const SentenceSet& t);

/// Checks whether (j, delta \ j) dialectically interprets delta: j must be
/// conflict-free and attack every sentence of delta \ j. Returns the
/// extension specified by j, or nullopt. Throws PreconditionError when j is
/// not a subset of delta.
std::optional<Extension> check_interpretation(const Theory& delta, const SentenceSet& j);

/// All extensions of a finite theory, found by exhaustive backtracking over
/// the J/D assignment of each sentence, sorted by the canonical order of
/// their specifying sets. Throws TheoryTooLargeError past the size cap.
std::vector<Extension> extensions(const Theory& delta, const EngineLimits& limits = {});

} // namespace deflog

#endif

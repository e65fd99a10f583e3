#ifndef DEFLOG_DUNG_HPP
#define DEFLOG_DUNG_HPP

#include <string>
#include <utility>
#include <vector>

#include "deflog/justification.hpp"
#include "deflog/sentence_set.hpp"

namespace deflog {

/// An abstract argumentation framework: named arguments plus a binary
/// attack relation over them.
struct ArgumentationFramework {
    std::vector<std::string> arguments;
    std::vector<std::pair<std::string, std::string>> attacks;
};

/// Parses either APX (`arg(a).` / `att(a,b).`, `%` comments) or a plain
/// list where a one-token line declares an argument and a two-token line
/// declares an attack (its endpoints are declared implicitly). Argument
/// names must be valid atom identifiers.
ArgumentationFramework parse_af(std::string_view text);

/// The theory {A | A an argument} ∪ {A -> ~B | (A,B) an attack}. Throws
/// ParseError when an attack references an undeclared argument.
Theory af_to_theory(SentenceStore& store, const ArgumentationFramework& af);

/// True iff every sentence is an atom or atom -> ~atom.
bool is_dung_theory(const Theory& delta);

/// Stable extensions computed directly on the framework, independent of
/// the theory translation: conflict-free argument sets attacking every
/// outside argument. Sorted; each extension's members are sorted.
std::vector<std::vector<std::string>> stable_extensions(const ArgumentationFramework& af);

/// c is admissible when it attacks every Δ-argument attacking it. Throws
/// PreconditionError unless c is a Δ-argument.
bool is_admissible(const Theory& delta, const Argument& c, const EngineLimits& limits = {});

/// Compares is_admissible with is_dialectically_justifying over every
/// Δ-argument of a Dung theory. Throws PreconditionError on non-Dung
/// theories. Returns false as soon as the two notions disagree.
bool admissible_equals_justifying_check(const Theory& delta, const EngineLimits& limits = {});

/// When the check fails, the smallest disagreeing argument, for reporting.
struct AdmissibleJustifyingMismatch {
    SentenceSet argument;
    bool admissible = false;
    bool justifying = false;
};
std::optional<AdmissibleJustifyingMismatch>
find_admissible_justifying_mismatch(const Theory& delta, const EngineLimits& limits = {});

} // namespace deflog

#endif

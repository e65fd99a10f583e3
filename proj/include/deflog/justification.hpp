#ifndef DEFLOG_JUSTIFICATION_HPP
#define DEFLOG_JUSTIFICATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "deflog/options.hpp"
#include "deflog/semantics.hpp"
#include "deflog/sentence_set.hpp"
#include "deflog/theory_index.hpp"

namespace deflog {

/// An argument: a conflict-free set of premises. Its conclusions are the
/// sentences its premises support.
struct Argument {
    SentenceSet premises;
};

struct JustificationVerdict {
    Sentence subject;
    bool justifiable = false;
    bool defeasible = false;
    std::optional<Argument> witness_for;     // justifies subject
    std::optional<Argument> witness_against; // justifies ~subject
};

bool is_delta_argument(const Theory& delta, const SentenceSet& c);

/// c attacks c2 iff c supports the dialectical negation of one of c2's
/// premises. The attack is judged from c's own closure alone.
bool argument_attacks(const Argument& c, const Argument& c2);

bool compatible(const Argument& c, const Argument& c2);
bool compatible_all(std::span<const Argument> args);

/// Memoized justification solver for one theory. All queries share a
/// per-subset cache of closures, so a run of related questions (a verdict,
/// a context scan, the theorem oracles) costs far less than solving each
/// from scratch. Queries mutate only the cache; results are value types.
class JustificationEngine {
public:
    explicit JustificationEngine(Theory delta, EngineLimits limits = {});

    const Theory& theory() const { return delta_; }
    std::size_t size() const { return delta_.size(); }

    /// Throws PreconditionError unless c is a conflict-free subset of the
    /// theory.
    std::uint32_t argument_mask(const SentenceSet& c);
    SentenceSet set_of(std::uint32_t mask) const;

    bool conflict_free(std::uint32_t mask);
    /// A Δ-argument is dialectically justifying when it attacks every
    /// Δ-argument incompatible with it. Checked against the minimal
    /// incompatible arguments only; attacking those attacks all.
    bool is_justifying(std::uint32_t mask);
    /// Admissible: attacks every Δ-argument that attacks it.
    bool is_admissible(std::uint32_t mask);

    bool justifiable_in_context(std::uint32_t ctx, Sentence phi);
    bool defeasible_in_context(std::uint32_t ctx, Sentence phi);
    /// A valid context: every theory sentence is justifiable or defeasible
    /// in it, never both.
    bool is_valid_context(std::uint32_t ctx);

    /// Existence oracle: some Δ-argument is a valid context.
    bool has_extension();
    /// Multiplicity oracle: the maximum number of pairwise incompatible
    /// valid contexts (a maximum clique over the incompatibility graph).
    std::size_t count_extensions();

    JustificationVerdict verdict(Sentence phi);

private:
    struct Entry {
        Bits closure;
        bool conflict_free = false;
        std::uint32_t supported_delta = 0; // Δ positions in the closure
        std::uint32_t attacked_delta = 0;  // Δ positions whose ~ is in the closure
        int justifying = -1;               // -1 unknown, else 0/1
    };

    Entry& entry(std::uint32_t mask);
    bool attacks_premises(std::uint32_t attacker, std::uint32_t target_mask);
    bool incompatible(std::uint32_t a, std::uint32_t b);
    template <typename F>
    bool scan_justifying_supersets(std::uint32_t ctx, F&& visit);
    std::vector<std::uint32_t> valid_contexts();

    Theory delta_;
    EngineLimits limits_;
    TheoryIndex index_;
    std::vector<std::uint32_t> delta_pos_; // ascending = canonical order
    std::uint32_t full_mask_;
    std::unordered_map<std::uint32_t, Entry> memo_;
};

bool is_dialectically_justifying(const Theory& delta, const Argument& c,
                                 const EngineLimits& limits = {});

/// justifiable: some dialectically justifying Δ-argument supports phi;
/// defeasible: some supports ~phi. Witnesses are the first hits of a
/// smallest-first canonical enumeration, hence set-minimal among witnesses.
JustificationVerdict justification_verdict(const Theory& delta, Sentence phi,
                                           const EngineLimits& limits = {});

bool justifiable_in_context(const Theory& delta, const Argument& c, Sentence phi,
                            const EngineLimits& limits = {});
bool defeasible_in_context(const Theory& delta, const Argument& c, Sentence phi,
                           const EngineLimits& limits = {});
bool is_valid_context(const Theory& delta, const Argument& c,
                      const EngineLimits& limits = {});

/// True iff some Δ-argument is a valid context; agrees with extensions()
/// being non-empty.
bool has_extension_oracle(const Theory& delta, const EngineLimits& limits = {});

/// The maximum cardinality of a set of pairwise incompatible valid
/// contexts; agrees with the number of extensions.
std::size_t count_extensions_oracle(const Theory& delta, const EngineLimits& limits = {});

} // namespace deflog

#endif

#ifndef DEFLOG_THEORY_INDEX_HPP
#define DEFLOG_THEORY_INDEX_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "deflog/bits.hpp"
#include "deflog/sentence_set.hpp"

namespace deflog {

class ClosureTrail;

/// Position-indexed view of the subsentence closure of a base set (the
/// "universe"). Since modus ponens only ever produces subterms, every
/// support closure of a subset of the base lives inside the universe,
/// which lets closures be represented as bitsets over it.
///
/// Positions are assigned in canonical sentence order.
class TheoryIndex {
public:
    explicit TheoryIndex(const SentenceSet& base);

    std::size_t universe_size() const { return universe_.size(); }
    Sentence at(std::size_t pos) const { return universe_[pos]; }
    /// -1 when the sentence does not occur in the universe.
    int pos_of(Sentence s) const;

    Kind kind_at(std::size_t pos) const { return kinds_[pos]; }
    /// Position of ~s for the sentence at pos, or -1 when ~s is not in the
    /// universe (in which case no subset of the base can attack s).
    int neg_pos(std::size_t pos) const { return neg_pos_[pos]; }
    int body_pos(std::size_t pos) const { return body_pos_[pos]; }
    int antecedent_pos(std::size_t pos) const { return ant_pos_[pos]; }
    int consequent_pos(std::size_t pos) const { return cons_pos_[pos]; }

    const std::vector<std::uint32_t>& conds_with_antecedent(std::size_t pos) const {
        return by_antecedent_[pos];
    }

    /// Support closure of the given seed positions plus conflict-freeness.
    struct ClosureResult {
        Bits members;
        bool conflict_free;
    };
    ClosureResult close(std::span<const std::uint32_t> seeds) const;
    ClosureResult close(const SentenceSet& seeds) const;

private:
    std::vector<Sentence> universe_;
    std::unordered_map<Sentence, std::uint32_t> position_;
    std::vector<Kind> kinds_;
    std::vector<int> neg_pos_, body_pos_, ant_pos_, cons_pos_;
    std::vector<std::vector<std::uint32_t>> by_antecedent_;

    friend class ClosureTrail;
};

/// Incremental support closure with undo, for backtracking searches.
/// add() applies modus ponens transitively and maintains a conflict count;
/// rollback() restores any earlier state exactly.
class ClosureTrail {
public:
    explicit ClosureTrail(const TheoryIndex& index);

    std::size_t mark() const { return trail_.size(); }
    void add(std::uint32_t pos);
    void rollback(std::size_t mark);

    bool has(std::uint32_t pos) const { return members_.test(pos); }
    bool conflict_free() const { return conflicts_ == 0; }
    const Bits& members() const { return members_; }

private:
    const TheoryIndex& index_;
    Bits members_;
    std::vector<std::uint32_t> trail_;
    int conflicts_ = 0;
};

} // namespace deflog

#endif

#ifndef DEFLOG_SENTENCE_SET_HPP
#define DEFLOG_SENTENCE_SET_HPP

#include <initializer_list>
#include <vector>

#include "deflog/sentence.hpp"

namespace deflog {

/// A finite, duplicate-free set of sentences kept in canonical order, so
/// iteration and printing are deterministic. Immutable value semantics
/// apart from insert/erase.
class SentenceSet {
public:
    SentenceSet() = default;
    SentenceSet(std::initializer_list<Sentence> items);
    explicit SentenceSet(std::vector<Sentence> items);

    bool insert(Sentence s);
    bool erase(Sentence s);
    bool contains(Sentence s) const;
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    const std::vector<Sentence>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    Sentence operator[](std::size_t i) const { return items_[i]; }

    bool subset_of(const SentenceSet& other) const;

    friend bool operator==(const SentenceSet& a, const SentenceSet& b) {
        return a.items_ == b.items_;
    }
    friend bool operator!=(const SentenceSet& a, const SentenceSet& b) {
        return !(a == b);
    }

    /// Lexicographic comparison of the canonical element sequences.
    static int compare(const SentenceSet& a, const SentenceSet& b);
    friend bool operator<(const SentenceSet& a, const SentenceSet& b) {
        return compare(a, b) < 0;
    }

    friend SentenceSet set_union(const SentenceSet& a, const SentenceSet& b);
    friend SentenceSet set_difference(const SentenceSet& a, const SentenceSet& b);
    friend SentenceSet set_intersection(const SentenceSet& a, const SentenceSet& b);

private:
    std::vector<Sentence> items_; // sorted by Sentence::compare, unique
};

/// A theory is a finite set of sentences. It may be empty and it may be
/// conflict-ridden; conflict-freeness is a property, not an invariant.
using Theory = SentenceSet;

/// Every sentence occurring as a subterm of a member of t, including the
/// members themselves. Finite, and a superset of t.
SentenceSet subsentence_closure(const SentenceSet& t);

} // namespace deflog

#endif

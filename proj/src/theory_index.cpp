#include "deflog/theory_index.hpp"

namespace deflog {

TheoryIndex::TheoryIndex(const SentenceSet& base) {
    SentenceSet closed = subsentence_closure(base);
    universe_.assign(closed.begin(), closed.end()); // canonical order
    std::size_t n = universe_.size();
    position_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        position_.emplace(universe_[i], static_cast<std::uint32_t>(i));

    kinds_.resize(n);
    neg_pos_.assign(n, -1);
    body_pos_.assign(n, -1);
    ant_pos_.assign(n, -1);
    cons_pos_.assign(n, -1);
    by_antecedent_.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        Sentence s = universe_[i];
        kinds_[i] = s.kind();
        switch (s.kind()) {
        case Kind::Atom:
            break;
        case Kind::DNeg: {
            int b = pos_of(s.body());
            body_pos_[i] = b;
            neg_pos_[b] = static_cast<int>(i);
            break;
        }
        case Kind::Cond: {
            int a = pos_of(s.antecedent());
            int c = pos_of(s.consequent());
            ant_pos_[i] = a;
            cons_pos_[i] = c;
            by_antecedent_[a].push_back(static_cast<std::uint32_t>(i));
            break;
        }
        }
    }
}

int TheoryIndex::pos_of(Sentence s) const {
    auto it = position_.find(s);
    return it == position_.end() ? -1 : static_cast<int>(it->second);
}

TheoryIndex::ClosureResult TheoryIndex::close(std::span<const std::uint32_t> seeds) const {
    ClosureTrail trail(*this);
    for (std::uint32_t p : seeds) trail.add(p);
    return {trail.members(), trail.conflict_free()};
}

TheoryIndex::ClosureResult TheoryIndex::close(const SentenceSet& seeds) const {
    ClosureTrail trail(*this);
    for (Sentence s : seeds) trail.add(static_cast<std::uint32_t>(pos_of(s)));
    return {trail.members(), trail.conflict_free()};
}

ClosureTrail::ClosureTrail(const TheoryIndex& index)
    : index_(index), members_(index.universe_size()) {}

void ClosureTrail::add(std::uint32_t pos) {
    if (members_.test(pos)) return;
    members_.set(pos);
    trail_.push_back(pos);

    if (index_.kinds_[pos] == Kind::DNeg && members_.test(index_.body_pos_[pos]))
        ++conflicts_;
    int np = index_.neg_pos_[pos];
    if (np >= 0 && members_.test(np)) ++conflicts_;

    if (index_.kinds_[pos] == Kind::Cond && members_.test(index_.ant_pos_[pos]))
        add(index_.cons_pos_[pos]);
    for (std::uint32_t c : index_.by_antecedent_[pos])
        if (members_.test(c)) add(index_.cons_pos_[c]);
}

void ClosureTrail::rollback(std::size_t mark) {
    // Popping in reverse recreates, for each popped position, exactly the
    // membership state present right after its add(), so the conflict
    // conditions evaluate the same way and the count stays consistent.
    while (trail_.size() > mark) {
        std::uint32_t pos = trail_.back();
        trail_.pop_back();
        if (index_.kinds_[pos] == Kind::DNeg && members_.test(index_.body_pos_[pos]))
            --conflicts_;
        int np = index_.neg_pos_[pos];
        if (np >= 0 && members_.test(np)) --conflicts_;
        members_.reset(pos);
    }
}

} // namespace deflog

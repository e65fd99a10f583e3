#include "deflog/semantics.hpp"

#include <algorithm>

#include "deflog/errors.hpp"
#include "deflog/theory_index.hpp"

namespace deflog {

namespace {

SentenceSet members_to_set(const TheoryIndex& index, const Bits& members) {
    std::vector<Sentence> out;
    members.for_each_set([&](std::size_t pos) { out.push_back(index.at(pos)); });
    return SentenceSet(std::move(out));
}

SentenceSet defeated_from_closure(const TheoryIndex& index, const Bits& members) {
    // Att(J) = bodies of the dialectical negations in Supp(J).
    std::vector<Sentence> out;
    members.for_each_set([&](std::size_t pos) {
        if (index.kind_at(pos) == Kind::DNeg) out.push_back(index.at(pos).body());
    });
    return SentenceSet(std::move(out));
}

Extension make_extension(const TheoryIndex& index, const SentenceSet& j, const Bits& closure) {
    Extension e;
    e.specifier = j;
    e.justified = members_to_set(index, closure);
    e.defeated = defeated_from_closure(index, closure);
    return e;
}

} // namespace

SupportSet supp(const SentenceSet& t) {
    TheoryIndex index(t);
    auto r = index.close(t);
    return {t, members_to_set(index, r.members)};
}

bool supports(const SentenceSet& t, Sentence phi) {
    TheoryIndex index(t);
    int pos = index.pos_of(phi);
    if (pos < 0) return false; // closure stays inside the universe
    return index.close(t).members.test(pos);
}

bool attacks(const SentenceSet& t, Sentence phi) {
    TheoryIndex index(t);
    int pos = index.pos_of(phi);
    if (pos < 0) return false;
    int neg = index.neg_pos(pos);
    if (neg < 0) return false;
    return index.close(t).members.test(neg);
}

bool is_conflict_free(const SentenceSet& t) {
    TheoryIndex index(t);
    return index.close(t).conflict_free;
}

std::optional<Extension> check_interpretation(const Theory& delta, const SentenceSet& j) {
    if (!j.subset_of(delta))
        throw PreconditionError("specifying set must be a subset of the theory");
    TheoryIndex index(delta);
    auto r = index.close(j);
    if (!r.conflict_free) return std::nullopt;
    for (Sentence d : set_difference(delta, j)) {
        int pos = index.pos_of(d);
        int neg = index.neg_pos(pos);
        if (neg < 0 || !r.members.test(neg)) return std::nullopt;
    }
    return make_extension(index, j, r.members);
}

namespace {

// Depth-first assignment of each theory sentence to J or D, with pruning:
// a branch dies as soon as J stops being conflict-free, a sentence whose
// dialectical negation is not even a subsentence of the theory can never
// go to D, and a sentence already supported by J cannot go to D either
// (it would force a conflict at the leaf).
class ExtensionSearch {
public:
    ExtensionSearch(const TheoryIndex& index, std::vector<std::uint32_t> delta_pos)
        : index_(index), delta_pos_(std::move(delta_pos)), trail_(index) {}

    std::vector<Extension> run() {
        results_.clear();
        in_j_.assign(delta_pos_.size(), false);
        descend(0);
        std::sort(results_.begin(), results_.end(), [](const Extension& a, const Extension& b) {
            return SentenceSet::compare(a.specifier, b.specifier) < 0;
        });
        return std::move(results_);
    }

private:
    void descend(std::size_t i) {
        if (i == delta_pos_.size()) {
            if (!trail_.conflict_free()) return;
            for (std::size_t k = 0; k < delta_pos_.size(); ++k) {
                if (in_j_[k]) continue;
                int neg = index_.neg_pos(delta_pos_[k]);
                if (neg < 0 || !trail_.has(neg)) return;
            }
            std::vector<Sentence> j;
            for (std::size_t k = 0; k < delta_pos_.size(); ++k)
                if (in_j_[k]) j.push_back(index_.at(delta_pos_[k]));
            results_.push_back(make_extension(index_, SentenceSet(std::move(j)), trail_.members()));
            return;
        }

        std::uint32_t pos = delta_pos_[i];

        std::size_t mark = trail_.mark();
        trail_.add(pos);
        if (trail_.conflict_free()) {
            in_j_[i] = true;
            descend(i + 1);
            in_j_[i] = false;
        }
        trail_.rollback(mark);

        if (index_.neg_pos(pos) >= 0 && !trail_.has(pos)) descend(i + 1);
    }

    const TheoryIndex& index_;
    std::vector<std::uint32_t> delta_pos_;
    ClosureTrail trail_;
    std::vector<bool> in_j_;
    std::vector<Extension> results_;
};

} // namespace

std::vector<Extension> extensions(const Theory& delta, const EngineLimits& limits) {
    if (delta.size() > limits.max_theory_size)
        throw TheoryTooLargeError(delta.size(), limits.max_theory_size);
    TheoryIndex index(delta);
    std::vector<std::uint32_t> delta_pos;
    delta_pos.reserve(delta.size());
    for (Sentence s : delta) delta_pos.push_back(static_cast<std::uint32_t>(index.pos_of(s)));
    return ExtensionSearch(index, std::move(delta_pos)).run();
}

} // namespace deflog

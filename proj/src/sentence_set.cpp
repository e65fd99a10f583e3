#include "deflog/sentence_set.hpp"

#include <algorithm>

namespace deflog {

namespace {
bool canonical_less(Sentence a, Sentence b) { return Sentence::compare(a, b) < 0; }
} // namespace

SentenceSet::SentenceSet(std::initializer_list<Sentence> items)
    : SentenceSet(std::vector<Sentence>(items)) {}

SentenceSet::SentenceSet(std::vector<Sentence> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), canonical_less);
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool SentenceSet::insert(Sentence s) {
    auto it = std::lower_bound(items_.begin(), items_.end(), s, canonical_less);
    if (it != items_.end() && *it == s) return false;
    items_.insert(it, s);
    return true;
}

bool SentenceSet::erase(Sentence s) {
    auto it = std::lower_bound(items_.begin(), items_.end(), s, canonical_less);
    if (it == items_.end() || *it != s) return false;
    items_.erase(it);
    return true;
}

bool SentenceSet::contains(Sentence s) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), s, canonical_less);
    return it != items_.end() && *it == s;
}

bool SentenceSet::subset_of(const SentenceSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end(), canonical_less);
}

int SentenceSet::compare(const SentenceSet& a, const SentenceSet& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = Sentence::compare(a.items_[i], b.items_[i]);
        if (c != 0) return c;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

SentenceSet set_union(const SentenceSet& a, const SentenceSet& b) {
    std::vector<Sentence> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                   std::back_inserter(out), canonical_less);
    SentenceSet r;
    r.items_ = std::move(out);
    return r;
}

SentenceSet set_difference(const SentenceSet& a, const SentenceSet& b) {
    std::vector<Sentence> out;
    std::set_difference(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                        std::back_inserter(out), canonical_less);
    SentenceSet r;
    r.items_ = std::move(out);
    return r;
}

SentenceSet set_intersection(const SentenceSet& a, const SentenceSet& b) {
    std::vector<Sentence> out;
    std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                          std::back_inserter(out), canonical_less);
    SentenceSet r;
    r.items_ = std::move(out);
    return r;
}

SentenceSet subsentence_closure(const SentenceSet& t) {
    SentenceSet out;
    std::vector<Sentence> work(t.begin(), t.end());
    while (!work.empty()) {
        Sentence s = work.back();
        work.pop_back();
        if (!out.insert(s)) continue;
        switch (s.kind()) {
        case Kind::Atom:
            break;
        case Kind::DNeg:
            work.push_back(s.body());
            break;
        case Kind::Cond:
            work.push_back(s.antecedent());
            work.push_back(s.consequent());
            break;
        }
    }
    return out;
}

} // namespace deflog

#include "deflog/sentence.hpp"

namespace deflog {

int Sentence::compare(Sentence a, Sentence b) {
    if (a.node_ == b.node_) return 0;
    auto rank = [](Kind k) { return static_cast<int>(k); };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    switch (a.kind()) {
    case Kind::Atom:
        return a.atom_name().compare(b.atom_name()) < 0 ? -1 : 1;
    case Kind::DNeg:
        return compare(a.body(), b.body());
    case Kind::Cond: {
        int c = compare(a.antecedent(), b.antecedent());
        if (c != 0) return c;
        return compare(a.consequent(), b.consequent());
    }
    }
    return 0;
}

const detail::Node* SentenceStore::make(Kind kind, std::string name,
                                        const detail::Node* l, const detail::Node* r) {
    detail::Node node;
    node.kind = kind;
    node.id = static_cast<std::uint32_t>(nodes_.size());
    node.name = std::move(name);
    node.left = l;
    node.right = r;
    node.term_size = 1 + (l ? l->term_size : 0) + (r ? r->term_size : 0);
    nodes_.push_back(std::move(node));
    return &nodes_.back();
}

Sentence SentenceStore::atom(std::string_view name) {
    std::string key(name);
    auto it = atoms_.find(key);
    if (it != atoms_.end()) return Sentence(it->second);
    const detail::Node* n = make(Kind::Atom, key, nullptr, nullptr);
    atoms_.emplace(std::move(key), n);
    return Sentence(n);
}

Sentence SentenceStore::dneg(Sentence body) {
    std::uint64_t key = (std::uint64_t(1) << 62) | body.id();
    auto it = composites_.find(key);
    if (it != composites_.end()) return Sentence(it->second);
    const detail::Node* n = make(Kind::DNeg, {}, body.node_, nullptr);
    composites_.emplace(key, n);
    return Sentence(n);
}

Sentence SentenceStore::cond(Sentence antecedent, Sentence consequent) {
    std::uint64_t key = (std::uint64_t(2) << 62) |
                        (std::uint64_t(antecedent.id()) << 31) | consequent.id();
    auto it = composites_.find(key);
    if (it != composites_.end()) return Sentence(it->second);
    const detail::Node* n = make(Kind::Cond, {}, antecedent.node_, consequent.node_);
    composites_.emplace(key, n);
    return Sentence(n);
}

Sentence attack_sugar(SentenceStore& store, Sentence phi, Sentence psi) {
    return store.cond(phi, store.dneg(psi));
}

} // namespace deflog

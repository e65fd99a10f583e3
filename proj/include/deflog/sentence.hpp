#ifndef DEFLOG_SENTENCE_HPP
#define DEFLOG_SENTENCE_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace deflog {

enum class Kind : std::uint8_t { Atom, DNeg, Cond };

class SentenceStore;

namespace detail {
struct Node {
    Kind kind;
    std::uint32_t id;        // interning sequence, unique within a store
    std::uint32_t term_size; // number of nodes in the term tree
    std::string name;        // atoms only
    const Node* left = nullptr;  // DNeg body / Cond antecedent
    const Node* right = nullptr; // Cond consequent
};
} // namespace detail

/// An immutable, hash-consed sentence handle. Equality is structural and
/// O(1); two handles from the same store are equal iff they denote the
/// same term. Copyable, trivially cheap, safe to share across threads.
class Sentence {
public:
    Sentence() : node_(nullptr) {}

    Kind kind() const { return node_->kind; }
    bool is_atom() const { return node_->kind == Kind::Atom; }
    bool is_dneg() const { return node_->kind == Kind::DNeg; }
    bool is_cond() const { return node_->kind == Kind::Cond; }

    std::string_view atom_name() const { return node_->name; }
    Sentence body() const { return Sentence(node_->left); }       // DNeg
    Sentence antecedent() const { return Sentence(node_->left); } // Cond
    Sentence consequent() const { return Sentence(node_->right); }

    std::size_t term_size() const { return node_->term_size; }
    std::uint32_t id() const { return node_->id; }
    bool valid() const { return node_ != nullptr; }

    friend bool operator==(Sentence a, Sentence b) { return a.node_ == b.node_; }
    friend bool operator!=(Sentence a, Sentence b) { return a.node_ != b.node_; }

    /// Total canonical order: atoms (by name) < dialectical negations
    /// (by body) < conditionals (by antecedent, then consequent).
    static int compare(Sentence a, Sentence b);

    friend bool operator<(Sentence a, Sentence b) { return compare(a, b) < 0; }

private:
    explicit Sentence(const detail::Node* node) : node_(node) {}
    const detail::Node* node_;
    friend class SentenceStore;
    friend struct std::hash<Sentence>;
};

/// Interning arena for sentences. Construction of new sentences mutates the
/// store and must be externally synchronized; the sentences themselves are
/// immutable once created.
class SentenceStore {
public:
    SentenceStore() = default;
    SentenceStore(const SentenceStore&) = delete;
    SentenceStore& operator=(const SentenceStore&) = delete;

    Sentence atom(std::string_view name);
    Sentence dneg(Sentence body);
    Sentence cond(Sentence antecedent, Sentence consequent);

    std::size_t size() const { return nodes_.size(); }

private:
    const detail::Node* make(Kind kind, std::string name, const detail::Node* l,
                             const detail::Node* r);

    std::deque<detail::Node> nodes_;
    std::unordered_map<std::string, const detail::Node*> atoms_;
    std::unordered_map<std::uint64_t, const detail::Node*> composites_;
};

/// The derived attack form: attack_sugar(phi, psi) = phi -> ~psi.
Sentence attack_sugar(SentenceStore& store, Sentence phi, Sentence psi);

} // namespace deflog

template <>
struct std::hash<deflog::Sentence> {
    std::size_t operator()(deflog::Sentence s) const {
        return std::hash<const void*>()(s.node_);
    }
};

#endif

#include "deflog/justification.hpp"

#include <algorithm>
#include <bit>

#include "deflog/errors.hpp"

namespace deflog {

bool is_delta_argument(const Theory& delta, const SentenceSet& c) {
    return c.subset_of(delta) && is_conflict_free(c);
}

bool argument_attacks(const Argument& c, const Argument& c2) {
    TheoryIndex index(c.premises);
    auto closure = index.close(c.premises);
    for (Sentence phi : c2.premises) {
        int pos = index.pos_of(phi);
        if (pos < 0) continue;
        int neg = index.neg_pos(pos);
        if (neg >= 0 && closure.members.test(neg)) return true;
    }
    return false;
}

bool compatible(const Argument& c, const Argument& c2) {
    return is_conflict_free(set_union(c.premises, c2.premises));
}

bool compatible_all(std::span<const Argument> args) {
    SentenceSet all;
    for (const Argument& a : args) all = set_union(all, a.premises);
    return is_conflict_free(all);
}

namespace {

// Calls fn(mask) for every size-k subset of the given positions, in
// lexicographic order of the index sequences; returns false to stop.
template <typename F>
bool for_each_combination(std::uint32_t n, std::uint32_t k, F&& fn) {
    if (k > n) return true;
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (std::uint32_t i : idx) mask |= (1u << i);
        if (!fn(mask)) return false;
        // advance to the next combination
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

JustificationEngine::JustificationEngine(Theory delta, EngineLimits limits)
    : delta_(std::move(delta)), limits_(limits), index_(delta_) {
    if (delta_.size() > limits_.max_theory_size)
        throw TheoryTooLargeError(delta_.size(), limits_.max_theory_size);
    if (delta_.size() > 31)
        throw TheoryTooLargeError(delta_.size(), 31);
    delta_pos_.reserve(delta_.size());
    for (Sentence s : delta_)
        delta_pos_.push_back(static_cast<std::uint32_t>(index_.pos_of(s)));
    full_mask_ = delta_.empty() ? 0u : (delta_.size() == 31 ? 0x7fffffffu
                                                            : (1u << delta_.size()) - 1);
}

std::uint32_t JustificationEngine::argument_mask(const SentenceSet& c) {
    if (!c.subset_of(delta_))
        throw PreconditionError("argument must be a subset of the theory");
    std::uint32_t mask = 0;
    for (Sentence s : c) {
        auto it = std::lower_bound(delta_.begin(), delta_.end(), s,
                                   [](Sentence a, Sentence b) { return a < b; });
        mask |= 1u << static_cast<std::uint32_t>(it - delta_.begin());
    }
    if (!conflict_free(mask))
        throw PreconditionError("argument must be conflict-free");
    return mask;
}

SentenceSet JustificationEngine::set_of(std::uint32_t mask) const {
    std::vector<Sentence> out;
    while (mask) {
        unsigned i = std::countr_zero(mask);
        out.push_back(delta_[i]);
        mask &= mask - 1;
    }
    return SentenceSet(std::move(out));
}

JustificationEngine::Entry& JustificationEngine::entry(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    std::vector<std::uint32_t> seeds;
    std::uint32_t m = mask;
    while (m) {
        seeds.push_back(delta_pos_[std::countr_zero(m)]);
        m &= m - 1;
    }
    auto r = index_.close(seeds);
    Entry e;
    e.conflict_free = r.conflict_free;
    e.supported_delta = 0;
    e.attacked_delta = 0;
    for (std::size_t i = 0; i < delta_pos_.size(); ++i) {
        if (r.members.test(delta_pos_[i])) e.supported_delta |= 1u << i;
        int neg = index_.neg_pos(delta_pos_[i]);
        if (neg >= 0 && r.members.test(neg)) e.attacked_delta |= 1u << i;
    }
    e.closure = std::move(r.members);
    return memo_.emplace(mask, std::move(e)).first->second;
}

bool JustificationEngine::conflict_free(std::uint32_t mask) {
    return entry(mask).conflict_free;
}

bool JustificationEngine::attacks_premises(std::uint32_t attacker, std::uint32_t target_mask) {
    return (entry(attacker).attacked_delta & target_mask) != 0;
}

bool JustificationEngine::incompatible(std::uint32_t a, std::uint32_t b) {
    return !conflict_free(a | b);
}

bool JustificationEngine::is_justifying(std::uint32_t mask) {
    Entry& e = entry(mask);
    if (e.justifying >= 0) return e.justifying != 0;

    // Every Δ-argument incompatible with c contains a minimal incompatible
    // one, and a minimal one is disjoint from c; attacking a premise of the
    // minimal argument attacks every superset. So it suffices to check the
    // minimal incompatible arguments, enumerated smallest-first over the
    // complement of c.
    bool result = true;
    std::uint32_t comp = full_mask_ & ~mask;
    std::uint32_t comp_bits = static_cast<std::uint32_t>(std::popcount(comp));
    std::vector<std::uint32_t> comp_idx;
    comp_idx.reserve(comp_bits);
    std::uint32_t m = comp;
    while (m) {
        comp_idx.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t k = 1; k <= comp_bits && result; ++k) {
        for_each_combination(comp_bits, k, [&](std::uint32_t small) {
            std::uint32_t s = 0;
            std::uint32_t t = small;
            while (t) {
                s |= 1u << comp_idx[std::countr_zero(t)];
                t &= t - 1;
            }
            for (std::uint32_t got : minimal)
                if ((s & got) == got) return true; // superset of a minimal one
            if (!conflict_free(s)) return true;    // not an argument
            if (conflict_free(mask | s)) return true; // compatible
            minimal.push_back(s);
            if (!attacks_premises(mask, s)) {
                result = false;
                return false;
            }
            return true;
        });
    }

    entry(mask).justifying = result ? 1 : 0;
    return result;
}

bool JustificationEngine::is_admissible(std::uint32_t mask) {
    // Attackers contain minimal attackers; attack against a target set is
    // monotone in the target, so checking minimal attackers suffices. They
    // are enumerated directly here: every conflict-free subset that attacks
    // a premise of c.
    for (std::uint32_t c2 = 0; c2 <= full_mask_; ++c2) {
        if (!conflict_free(c2)) continue;
        if (!attacks_premises(c2, mask)) continue;
        if (!attacks_premises(mask, c2)) return false;
    }
    return true;
}

template <typename F>
bool JustificationEngine::scan_justifying_supersets(std::uint32_t ctx, F&& visit) {
    std::uint32_t comp = full_mask_ & ~ctx;
    std::uint32_t s = comp;
    while (true) {
        std::uint32_t d = ctx | s;
        if (conflict_free(d) && is_justifying(d)) {
            if (!visit(d)) return false;
        }
        if (s == 0) break;
        s = (s - 1) & comp;
    }
    return true;
}

bool JustificationEngine::justifiable_in_context(std::uint32_t ctx, Sentence phi) {
    int pos = index_.pos_of(phi);
    if (pos < 0) return false;
    bool found = false;
    scan_justifying_supersets(ctx, [&](std::uint32_t d) {
        if (entry(d).closure.test(pos)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool JustificationEngine::defeasible_in_context(std::uint32_t ctx, Sentence phi) {
    int pos = index_.pos_of(phi);
    if (pos < 0) return false;
    int neg = index_.neg_pos(pos);
    if (neg < 0) return false;
    bool found = false;
    scan_justifying_supersets(ctx, [&](std::uint32_t d) {
        if (entry(d).closure.test(neg)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool JustificationEngine::is_valid_context(std::uint32_t ctx) {
    std::uint32_t justifiable = 0, defeasible = 0;
    bool ambiguous = false;
    scan_justifying_supersets(ctx, [&](std::uint32_t d) {
        justifiable |= entry(d).supported_delta;
        defeasible |= entry(d).attacked_delta;
        if (justifiable & defeasible) {
            ambiguous = true;
            return false;
        }
        return true;
    });
    if (ambiguous) return false;
    return (justifiable ^ defeasible) == full_mask_;
}

bool JustificationEngine::has_extension() {
    for (std::uint32_t c = 0; c <= full_mask_; ++c) {
        if (!conflict_free(c)) continue;
        if (is_valid_context(c)) return true;
        if (full_mask_ == 0) break;
    }
    return false;
}

std::vector<std::uint32_t> JustificationEngine::valid_contexts() {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c <= full_mask_; ++c) {
        if (conflict_free(c) && is_valid_context(c)) out.push_back(c);
        if (full_mask_ == 0) break;
    }
    return out;
}

namespace {

// Branch-and-bound maximum clique over an adjacency bitset matrix.
class MaxClique {
public:
    explicit MaxClique(std::vector<Bits> adj) : adj_(std::move(adj)) {}

    std::size_t run() {
        std::size_t n = adj_.size();
        if (n == 0) return 0;
        Bits all(n);
        for (std::size_t i = 0; i < n; ++i) all.set(i);
        best_ = 0;
        expand(0, all);
        return best_;
    }

private:
    void expand(std::size_t depth, Bits candidates) {
        std::size_t remaining = candidates.count();
        if (remaining == 0) {
            best_ = std::max(best_, depth);
            return;
        }
        if (depth + remaining <= best_) return;
        std::vector<std::size_t> order;
        candidates.for_each_set([&](std::size_t v) { order.push_back(v); });
        for (std::size_t v : order) {
            if (depth + candidates.count() <= best_) return;
            if (!candidates.test(v)) continue;
            candidates.reset(v);
            Bits next = candidates;
            next &= adj_[v];
            expand(depth + 1, next);
        }
    }

    std::vector<Bits> adj_;
    std::size_t best_ = 0;
};

} // namespace

std::size_t JustificationEngine::count_extensions() {
    std::vector<std::uint32_t> contexts = valid_contexts();
    std::size_t n = contexts.size();
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (incompatible(contexts[i], contexts[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return MaxClique(std::move(adj)).run();
}

JustificationVerdict JustificationEngine::verdict(Sentence phi) {
    JustificationVerdict v;
    v.subject = phi;
    int pos = index_.pos_of(phi);
    int neg = pos >= 0 ? index_.neg_pos(pos) : -1;
    std::uint32_t n = static_cast<std::uint32_t>(delta_.size());

    auto search = [&](int target) -> std::optional<std::uint32_t> {
        if (target < 0) return std::nullopt;
        std::optional<std::uint32_t> hit;
        for (std::uint32_t k = 0; k <= n && !hit; ++k) {
            for_each_combination(n, k, [&](std::uint32_t mask) {
                if (!conflict_free(mask)) return true;
                if (!entry(mask).closure.test(target)) return true;
                if (!is_justifying(mask)) return true;
                hit = mask;
                return false;
            });
        }
        return hit;
    };

    if (auto w = search(pos)) {
        v.justifiable = true;
        v.witness_for = Argument{set_of(*w)};
    }
    if (auto w = search(neg)) {
        v.defeasible = true;
        v.witness_against = Argument{set_of(*w)};
    }
    return v;
}

bool is_dialectically_justifying(const Theory& delta, const Argument& c,
                                 const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.is_justifying(engine.argument_mask(c.premises));
}

JustificationVerdict justification_verdict(const Theory& delta, Sentence phi,
                                           const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.verdict(phi);
}

bool justifiable_in_context(const Theory& delta, const Argument& c, Sentence phi,
                            const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.justifiable_in_context(engine.argument_mask(c.premises), phi);
}

bool defeasible_in_context(const Theory& delta, const Argument& c, Sentence phi,
                           const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.defeasible_in_context(engine.argument_mask(c.premises), phi);
}

bool is_valid_context(const Theory& delta, const Argument& c, const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.is_valid_context(engine.argument_mask(c.premises));
}

bool has_extension_oracle(const Theory& delta, const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.has_extension();
}

std::size_t count_extensions_oracle(const Theory& delta, const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.count_extensions();
}

} // namespace deflog

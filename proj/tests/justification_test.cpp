#include "doctest.h"

#include <random>

#include "deflog/errors.hpp"
#include "deflog/justification.hpp"
#include "deflog/parser.hpp"
#include "deflog/semantics.hpp"
#include "naive_oracles.hpp"

using namespace deflog;

namespace {

Theory T(SentenceStore& store, const char* text) { return parse_theory(store, text); }
Sentence S(SentenceStore& store, const char* text) { return parse_sentence(store, text); }
Argument A(SentenceStore& store, const char* text) { return {parse_theory(store, text)}; }

} // namespace

TEST_CASE("delta-arguments are conflict-free subsets") {
    SentenceStore store;
    Theory delta = T(store, "p\n~p");
    CHECK_FALSE(is_delta_argument(delta, T(store, "p\n~p")));
    CHECK(is_delta_argument(delta, T(store, "~p")));
    CHECK_FALSE(is_delta_argument(T(store, "p"), T(store, "p\nq")));
    CHECK(is_delta_argument(delta, Theory{}));
}

TEST_CASE("argument attack targets a premise of the other argument") {
    SentenceStore store;
    CHECK(argument_attacks(A(store, "b\nb -> ~s"), A(store, "s")));
    CHECK(argument_attacks(A(store, "b\nb -> ~s"), A(store, "s\nt\nq")));
    CHECK_FALSE(argument_attacks(A(store, ""), A(store, "p\nq\np -> q")));
    CHECK(argument_attacks(A(store, "r\nr -> ~q"), A(store, "q\nq -> ~p")));
    // supporting the negation of a conclusion that is not a premise is no attack
    CHECK_FALSE(argument_attacks(A(store, "b\nb -> ~s"), A(store, "a\na -> s")));
}

TEST_CASE("compatibility is conflict-freeness of the union") {
    SentenceStore store;
    CHECK_FALSE(compatible(A(store, "p"), A(store, "q\nq -> ~p")));
    CHECK(compatible(A(store, "p"), A(store, "p")));
    CHECK(compatible(A(store, "a"), A(store, "b\nb -> ~s")));
}

TEST_CASE("compatible_all matches pairwise union closure") {
    SentenceStore store;
    std::vector<Argument> ok = {A(store, "a"), A(store, "b"), A(store, "b -> ~s")};
    CHECK(compatible_all(ok));
    std::vector<Argument> clash = {A(store, "s"), A(store, "b"), A(store, "b -> ~s")};
    CHECK_FALSE(compatible_all(clash));
}

TEST_CASE("dialectical justification on the reinstatement theory") {
    SentenceStore store;
    Theory delta = T(store, "p\nq\nr\nq -> ~p\nr -> ~q");
    CHECK(is_dialectically_justifying(delta, A(store, "p\nr\nr -> ~q")));
    CHECK_FALSE(is_dialectically_justifying(delta, A(store, "p")));
    CHECK(is_dialectically_justifying(delta, A(store, "r\nr -> ~q")));
    CHECK_THROWS_AS(is_dialectically_justifying(delta, A(store, "z")), PreconditionError);
    CHECK_THROWS_AS(
        (void)is_dialectically_justifying(T(store, "p\n~p"), Argument{T(store, "p\n~p")}),
        PreconditionError);
}

TEST_CASE("the empty argument justifies vacuously") {
    SentenceStore store;
    Theory delta = T(store, "p1\np1 -> q\np2\np2 -> (q -> ~q)");
    CHECK(is_dialectically_justifying(delta, A(store, "")));
}

TEST_CASE("justification verdicts with minimal witnesses") {
    SentenceStore store;

    Theory self_attack = T(store, "p\np -> ~p");
    auto v1 = justification_verdict(self_attack, S(store, "p"));
    CHECK_FALSE(v1.justifiable);
    CHECK_FALSE(v1.defeasible);
    CHECK_FALSE(v1.witness_for.has_value());

    Theory mutual = T(store, "p\nq\np -> ~q\nq -> ~p");
    auto v2 = justification_verdict(mutual, S(store, "p"));
    CHECK(v2.justifiable);
    CHECK(v2.defeasible);
    REQUIRE(v2.witness_for.has_value());
    REQUIRE(v2.witness_against.has_value());
    CHECK(v2.witness_for->premises == T(store, "p\np -> ~q"));
    CHECK(v2.witness_against->premises == T(store, "q\nq -> ~p"));

    Theory chain = T(store, "p\nq\nr\nq -> ~p\nr -> ~q");
    auto v3 = justification_verdict(chain, S(store, "q"));
    CHECK_FALSE(v3.justifiable);
    CHECK(v3.defeasible);
    REQUIRE(v3.witness_against.has_value());
    CHECK(v3.witness_against->premises == T(store, "r\nr -> ~q"));

    auto v4 = justification_verdict(chain, S(store, "p"));
    CHECK(v4.justifiable);
    REQUIRE(v4.witness_for.has_value());
    CHECK(v4.witness_for->premises == T(store, "p\nr\nr -> ~q"));
}

TEST_CASE("justification in a context") {
    SentenceStore store;
    Theory mutual = T(store, "p\nq\np -> ~q\nq -> ~p");
    CHECK_FALSE(justifiable_in_context(mutual, A(store, "p"), S(store, "q")));
    CHECK(defeasible_in_context(mutual, A(store, "p"), S(store, "q")));
    CHECK(justifiable_in_context(T(store, "p"), A(store, ""), S(store, "p")));
    CHECK_FALSE(justifiable_in_context(T(store, "p\np -> ~p"), A(store, ""), S(store, "p")));
}

TEST_CASE("valid contexts fix every ambiguity") {
    SentenceStore store;
    Theory mutual = T(store, "p\nq\np -> ~q\nq -> ~p");
    CHECK(is_valid_context(mutual, A(store, "p")));
    CHECK_FALSE(is_valid_context(mutual, A(store, "")));
    CHECK_FALSE(is_valid_context(T(store, "p\np -> ~p"), A(store, "")));
}

TEST_CASE("existence oracle") {
    SentenceStore store;
    Theory counterexample = T(store,
                              "p\nq\np -> ~q\nq -> ~p\n"
                              "r\nr -> ~r\ns\ns -> ~s\n"
                              "p -> ~r\nq -> ~s\n");
    REQUIRE(counterexample.size() == 10);
    CHECK_FALSE(has_extension_oracle(counterexample));
    CHECK(has_extension_oracle(T(store, "p\nq\nr\nq -> ~p\nr -> ~q")));
    CHECK(has_extension_oracle(Theory{}));
}

TEST_CASE("count oracle") {
    SentenceStore store;
    CHECK(count_extensions_oracle(T(store, "p\nq\np -> ~q\nq -> ~p")) == 2);
    CHECK(count_extensions_oracle(T(store, "p\np -> ~p")) == 0);
    CHECK(count_extensions_oracle(T(store, "p")) == 1);
    CHECK(count_extensions_oracle(Theory{}) == 1);
}

TEST_CASE("the sentences of an extension-bearing theory are all interpretable") {
    SentenceStore store;
    // every sentence of the no-extension counterexample is still justifiable
    // or defeasible, showing interpretability alone cannot force an extension
    Theory counterexample = T(store,
                              "p\nq\np -> ~q\nq -> ~p\n"
                              "r\nr -> ~r\ns\ns -> ~s\n"
                              "p -> ~r\nq -> ~s\n");
    for (Sentence s : counterexample) {
        auto v = justification_verdict(counterexample, s);
        CHECK((v.justifiable || v.defeasible));
    }
    CHECK(extensions(counterexample).empty());
}

TEST_CASE("a justifying argument justifies what it supports and defeats what it attacks") {
    SentenceStore store;
    Theory counterexample = T(store,
                              "p\nq\np -> ~q\nq -> ~p\n"
                              "r\nr -> ~r\ns\ns -> ~s\n"
                              "p -> ~r\nq -> ~s\n");
    Argument c1 = A(store, "p\np -> ~q\np -> ~r");
    Argument c2 = A(store, "q\nq -> ~p\nq -> ~s");
    CHECK(is_dialectically_justifying(counterexample, c1));
    CHECK(is_dialectically_justifying(counterexample, c2));

    // defeats-set of c2: the sentences whose dialectical negation it supports
    SentenceSet closure = supp(c2.premises).closure;
    SentenceSet defeats;
    for (Sentence s : closure)
        if (s.is_dneg()) defeats.insert(s.body());
    CHECK(defeats == T(store, "p\ns"));

    for (Sentence s : closure) {
        auto v = justification_verdict(counterexample, s);
        CHECK(v.justifiable);
    }
    for (Sentence s : defeats) {
        auto v = justification_verdict(counterexample, s);
        CHECK(v.defeasible);
    }
}

TEST_CASE("minimal-incompatible pruning agrees with the full lattice") {
    SentenceStore store;
    std::mt19937_64 rng(99);
    auto random_sentence = [&](auto&& self, int depth) -> Sentence {
        static const char* names[] = {"p", "q", "r"};
        int roll = static_cast<int>(rng() % 100);
        if (depth <= 1 || roll < 45) return store.atom(names[rng() % 3]);
        if (roll < 70) return store.dneg(self(self, depth - 1));
        return store.cond(self(self, depth - 1), self(self, depth - 1));
    };
    for (int round = 0; round < 60; ++round) {
        Theory delta;
        std::size_t target = rng() % 6;
        while (delta.size() < target) delta.insert(random_sentence(random_sentence, 3));
        JustificationEngine engine(delta);
        for (const SentenceSet& c : naive::subsets(delta)) {
            if (!naive::conflict_free(store, c)) continue;
            CHECK(engine.is_justifying(engine.argument_mask(c)) ==
                  naive::justifying(store, delta, c));
        }
    }
}

TEST_CASE("extension specifiers are justifying, and the corollary holds") {
    SentenceStore store;
    std::mt19937_64 rng(123);
    static const char* pool[] = {"p", "q", "~p", "~q", "p -> q", "q -> p", "p -> ~q", "q -> ~p"};
    for (int round = 0; round < 80; ++round) {
        Theory delta;
        for (const char* s : pool)
            if (rng() & 1) delta.insert(S(store, s));
        auto exts = extensions(delta);
        for (const auto& e : exts)
            CHECK(is_dialectically_justifying(delta, Argument{e.specifier}));
        if (!exts.empty()) {
            for (Sentence s : delta) {
                auto v = justification_verdict(delta, s);
                CHECK((v.justifiable || v.defeasible));
            }
        }
    }
}

TEST_CASE("union and separation properties on sampled justifying pairs") {
    SentenceStore store;
    std::mt19937_64 rng(321);
    // bare negations are left out: an unattackable ~x premise makes most
    // arguments non-justifying, which starves the sample of pairs
    static const char* pool[] = {"p", "q", "p -> q", "q -> p", "p -> ~q", "q -> ~p"};
    int unions = 0, separations = 0;
    for (int round = 0; round < 120; ++round) {
        Theory delta;
        for (const char* s : pool)
            if (rng() & 1) delta.insert(S(store, s));
        JustificationEngine engine(delta);
        std::vector<SentenceSet> justifying;
        for (const SentenceSet& c : naive::subsets(delta)) {
            if (!naive::conflict_free(store, c)) continue;
            if (engine.is_justifying(engine.argument_mask(c))) justifying.push_back(c);
        }
        for (std::size_t i = 0; i < justifying.size(); ++i) {
            for (std::size_t j = i + 1; j < justifying.size(); ++j) {
                SentenceSet u = set_union(justifying[i], justifying[j]);
                if (is_conflict_free(u)) {
                    ++unions;
                    CHECK(engine.is_justifying(engine.argument_mask(u)));
                } else {
                    ++separations;
                    bool found = false;
                    for (Sentence s : delta) {
                        auto v = justification_verdict(delta, s);
                        if (v.justifiable && v.defeasible) {
                            found = true;
                            break;
                        }
                    }
                    CHECK(found);
                }
            }
        }
    }
    CHECK(unions > 0);
    CHECK(separations > 0);
}

TEST_CASE("oracles agree with enumeration across a small exhaustive family") {
    SentenceStore store;
    static const char* pool[] = {"p", "q", "~p", "p -> q", "p -> ~q", "q -> ~p"};
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
        Theory delta;
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1) delta.insert(S(store, pool[i]));
        std::size_t direct = extensions(delta).size();
        JustificationEngine engine(delta);
        CHECK(engine.has_extension() == (direct > 0));
        CHECK(engine.count_extensions() == direct);
    }
}

TEST_CASE("justification respects the size cap") {
    SentenceStore store;
    Theory delta;
    for (int i = 0; i < 26; ++i) delta.insert(store.atom("a" + std::to_string(i)));
    CHECK_THROWS_AS(justification_verdict(delta, S(store, "a0")), TheoryTooLargeError);
}

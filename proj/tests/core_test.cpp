#include "doctest.h"

#include "deflog/parser.hpp"
#include "deflog/sentence.hpp"
#include "deflog/sentence_set.hpp"

using namespace deflog;

TEST_CASE("structural identity and hash consing") {
    SentenceStore store;
    Sentence p1 = store.atom("p");
    Sentence p2 = store.atom("p");
    CHECK(p1 == p2);
    CHECK(store.cond(p1, store.dneg(p2)) == store.cond(p2, store.dneg(p1)));
    CHECK(store.atom("q") != p1);
    CHECK(store.dneg(p1) != p1);
}

TEST_CASE("canonical order: atoms, then negations, then conditionals") {
    SentenceStore store;
    Sentence p = store.atom("p");
    Sentence q = store.atom("q");
    Sentence np = store.dneg(p);
    Sentence pq = store.cond(p, q);
    Sentence qp = store.cond(q, p);
    CHECK(Sentence::compare(p, q) < 0);
    CHECK(Sentence::compare(q, np) < 0);
    CHECK(Sentence::compare(np, pq) < 0);
    CHECK(Sentence::compare(pq, qp) < 0);
    CHECK(Sentence::compare(pq, store.cond(p, store.atom("r"))) < 0);
    CHECK(Sentence::compare(p, p) == 0);
}

TEST_CASE("attack sugar is the derived conditional form") {
    SentenceStore store;
    Sentence p = store.atom("p");
    Sentence q = store.atom("q");
    CHECK(attack_sugar(store, p, q) == store.cond(p, store.dneg(q)));
    CHECK(attack_sugar(store, p, p) == store.cond(p, store.dneg(p)));
    Sentence ab = store.cond(store.atom("a"), store.atom("b"));
    Sentence c = store.atom("c");
    CHECK(attack_sugar(store, ab, c) == store.cond(ab, store.dneg(c)));
    CHECK(render(attack_sugar(store, ab, c)) == "(a -> b) -> ~c");
}

TEST_CASE("subsentence closure unfolds every subterm") {
    SentenceStore store;
    CHECK(subsentence_closure({}) == SentenceSet{});

    Sentence p = store.atom("p");
    Sentence q = store.atom("q");
    Sentence s1 = store.cond(p, store.dneg(q)); // p -> ~q
    CHECK(subsentence_closure({s1}) == SentenceSet{s1, p, store.dneg(q), q});

    Sentence s2 = store.cond(p, store.dneg(p)); // p -> ~p
    CHECK(subsentence_closure({p, s2}) == SentenceSet{p, s2, store.dneg(p)});
}

TEST_CASE("subsentence closure is monotone, idempotent and size-bounded") {
    SentenceStore store;
    Theory big = parse_theory(store, "p -> ~(q -> r)\n~~s\n(a -> b) -> c\n");
    Theory small = parse_theory(store, "p -> ~(q -> r)\n");
    SentenceSet cb = subsentence_closure(big);
    SentenceSet cs = subsentence_closure(small);
    CHECK(cs.subset_of(cb));
    CHECK(subsentence_closure(cb) == cb);
    std::size_t bound = 0;
    for (Sentence s : big) bound += s.term_size();
    CHECK(cb.size() <= bound);
    CHECK(big.subset_of(cb));
}

TEST_CASE("sentence sets are canonical and support set algebra") {
    SentenceStore store;
    Sentence p = store.atom("p");
    Sentence q = store.atom("q");
    SentenceSet a{q, p, q};
    CHECK(a.size() == 2);
    CHECK(a[0] == p); // canonical order
    SentenceSet b{q, store.dneg(p)};
    CHECK(set_union(a, b).size() == 3);
    CHECK(set_difference(a, b) == SentenceSet{p});
    CHECK(set_intersection(a, b) == SentenceSet{q});
    CHECK(SentenceSet{p}.subset_of(a));
    CHECK_FALSE(a.subset_of(b));
}

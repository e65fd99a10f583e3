#include "deflog/dot.hpp"

#include <algorithm>
#include <vector>

#include "deflog/errors.hpp"
#include "deflog/parser.hpp"
#include "deflog/semantics.hpp"

namespace deflog {

namespace {

struct Edge {
    Sentence from;
    Sentence to;
    bool attack;
};

} // namespace

std::string to_dot(const Theory& delta, bool annotate) {
    SentenceSet nodes;
    std::vector<Edge> edges;
    std::vector<Sentence> work(delta.begin(), delta.end());
    while (!work.empty()) {
        Sentence s = work.back();
        work.pop_back();
        if (!nodes.insert(s)) continue;
        if (!s.is_cond()) continue;
        Sentence ant = s.antecedent();
        Sentence cons = s.consequent();
        Sentence target = cons.is_dneg() ? cons.body() : cons;
        work.push_back(ant);
        work.push_back(target);
        edges.push_back({ant, target, cons.is_dneg()});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        int c = Sentence::compare(a.from, b.from);
        if (c != 0) return c < 0;
        c = Sentence::compare(a.to, b.to);
        if (c != 0) return c < 0;
        return a.attack < b.attack;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) {
                                return a.from == b.from && a.to == b.to && a.attack == b.attack;
                            }),
                edges.end());

    SentenceSet justified, defeated;
    if (annotate) {
        std::vector<Extension> exts = extensions(delta);
        if (exts.size() != 1)
            throw PreconditionError("annotation requires a unique extension, theory has " +
                                    std::to_string(exts.size()));
        justified = exts.front().justified;
        defeated = exts.front().defeated;
    }

    std::string out = "digraph deflog {\n";
    if (!nodes.empty()) out += "  node [shape=box];\n";
    for (Sentence s : nodes) {
        out += "  \"" + render(s) + "\"";
        if (annotate) {
            if (justified.contains(s))
                out += " [style=bold, color=darkgreen]";
            else if (defeated.contains(s))
                out += " [style=dashed, color=red]";
            else
                out += " [style=dotted, color=gray50, fontcolor=gray50]";
        }
        out += ";\n";
    }
    for (const Edge& e : edges) {
        out += "  \"" + render(e.from) + "\" -> \"" + render(e.to) + "\"";
        if (e.attack) out += " [color=red, arrowhead=box]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace deflog

#include "deflog/dung.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "deflog/errors.hpp"

namespace deflog {

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void parse_apx_line(std::string_view line, std::size_t line_no, ArgumentationFramework& af) {
    auto fail = [&](const std::string& msg) -> void { throw ParseError(line_no, 1, msg); };
    bool is_arg = line.starts_with("arg(");
    bool is_att = line.starts_with("att(");
    if (!is_arg && !is_att) fail("expected 'arg(...)'. or 'att(...,...).'");
    if (!line.ends_with(").")) fail("line must end with ').'");
    std::string_view inner = line.substr(4, line.size() - 6);
    if (is_arg) {
        std::string name(trim(inner));
        if (!valid_identifier(name)) fail("argument id must be a valid identifier");
        af.arguments.push_back(std::move(name));
    } else {
        std::size_t comma = inner.find(',');
        if (comma == std::string_view::npos) fail("att needs two arguments");
        std::string a(trim(inner.substr(0, comma)));
        std::string b(trim(inner.substr(comma + 1)));
        if (!valid_identifier(a) || !valid_identifier(b))
            fail("argument id must be a valid identifier");
        af.attacks.emplace_back(std::move(a), std::move(b));
    }
}

void parse_plain_line(std::string_view line, std::size_t line_no, ArgumentationFramework& af) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    for (const auto& t : tokens)
        if (!valid_identifier(t))
            throw ParseError(line_no, 1, "argument id must be a valid identifier: '" + t + "'");
    if (tokens.size() == 1) {
        af.arguments.push_back(tokens[0]);
    } else if (tokens.size() == 2) {
        af.arguments.push_back(tokens[0]);
        af.arguments.push_back(tokens[1]);
        af.attacks.emplace_back(tokens[0], tokens[1]);
    } else {
        throw ParseError(line_no, 1, "expected one id (argument) or two ids (attack)");
    }
}

} // namespace

ArgumentationFramework parse_af(std::string_view text) {
    ArgumentationFramework af;
    bool apx = text.find("arg(") != std::string_view::npos ||
               text.find("att(") != std::string_view::npos;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : nl - start);
        ++line_no;
        std::size_t pct = line.find('%');
        if (pct != std::string_view::npos) line = line.substr(0, pct);
        line = trim(line);
        if (!line.empty()) {
            if (apx)
                parse_apx_line(line, line_no, af);
            else
                parse_plain_line(line, line_no, af);
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    std::sort(af.arguments.begin(), af.arguments.end());
    af.arguments.erase(std::unique(af.arguments.begin(), af.arguments.end()),
                       af.arguments.end());
    std::sort(af.attacks.begin(), af.attacks.end());
    af.attacks.erase(std::unique(af.attacks.begin(), af.attacks.end()), af.attacks.end());
    return af;
}

Theory af_to_theory(SentenceStore& store, const ArgumentationFramework& af) {
    std::set<std::string> known(af.arguments.begin(), af.arguments.end());
    Theory out;
    for (const auto& a : af.arguments) out.insert(store.atom(a));
    for (const auto& [a, b] : af.attacks) {
        if (!known.count(a) || !known.count(b))
            throw ParseError(0, 0, "attack references unknown argument: att(" + a + "," + b + ")");
        out.insert(store.cond(store.atom(a), store.dneg(store.atom(b))));
    }
    return out;
}

bool is_dung_theory(const Theory& delta) {
    for (Sentence s : delta) {
        if (s.is_atom()) continue;
        if (s.is_cond() && s.antecedent().is_atom() && s.consequent().is_dneg() &&
            s.consequent().body().is_atom())
            continue;
        return false;
    }
    return true;
}

std::vector<std::vector<std::string>> stable_extensions(const ArgumentationFramework& af) {
    std::size_t n = af.arguments.size();
    std::vector<std::vector<bool>> att(n, std::vector<bool>(n, false));
    auto index_of = [&](const std::string& name) {
        return std::lower_bound(af.arguments.begin(), af.arguments.end(), name) -
               af.arguments.begin();
    };
    for (const auto& [a, b] : af.attacks) att[index_of(a)][index_of(b)] = true;

    std::vector<std::vector<std::string>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            bool in_i = (mask >> i) & 1;
            if (in_i) {
                for (std::size_t j = 0; j < n && ok; ++j)
                    if (((mask >> j) & 1) && att[j][i]) ok = false; // conflict inside
            } else {
                bool attacked = false;
                for (std::size_t j = 0; j < n && !attacked; ++j)
                    if (((mask >> j) & 1) && att[j][i]) attacked = true;
                if (!attacked) ok = false; // outside argument left unattacked
            }
        }
        if (!ok) continue;
        std::vector<std::string> ext;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) ext.push_back(af.arguments[i]);
        out.push_back(std::move(ext));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_admissible(const Theory& delta, const Argument& c, const EngineLimits& limits) {
    JustificationEngine engine(delta, limits);
    return engine.is_admissible(engine.argument_mask(c.premises));
}

namespace {

// Dung theories have a flat shape (atoms plus atom -> ~atom), which makes
// both notions checkable per argument in linear time: the only derivable
// dialectical negations are ~B for an attack conditional A -> ~B whose
// antecedent is held, the only attackable premises are atoms, and every
// incompatibility is witnessed by a triple {A, B, A -> ~B} realized inside
// the theory.
struct DungView {
    std::vector<Sentence> atoms;
    struct Cond {
        Sentence sentence;
        int ant;    // index into atoms, -1 when the atom is not in the theory
        int target; // likewise
    };
    std::vector<Cond> conds;

    explicit DungView(const Theory& delta) {
        for (Sentence s : delta)
            if (s.is_atom()) atoms.push_back(s);
        auto atom_index = [&](Sentence a) -> int {
            auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
            if (it != atoms.end() && *it == a) return static_cast<int>(it - atoms.begin());
            return -1;
        };
        for (Sentence s : delta)
            if (s.is_cond())
                conds.push_back({s, atom_index(s.antecedent()),
                                 atom_index(s.consequent().body())});
    }

    std::uint64_t attacked_atoms(std::uint64_t x, std::uint64_t r) const {
        std::uint64_t out = 0;
        for (std::size_t c = 0; c < conds.size(); ++c) {
            if (!((r >> c) & 1)) continue;
            if (conds[c].ant >= 0 && ((x >> conds[c].ant) & 1) && conds[c].target >= 0)
                out |= std::uint64_t(1) << conds[c].target;
        }
        return out;
    }

    bool conflict_free(std::uint64_t x, std::uint64_t r) const {
        return (attacked_atoms(x, r) & x) == 0;
    }

    bool admissible(std::uint64_t x, std::uint64_t r) const {
        std::uint64_t attacked = attacked_atoms(x, r);
        for (const Cond& c : conds) {
            if (c.ant < 0 || c.target < 0) continue;
            if (c.ant == c.target) continue; // {A, A -> ~A} is no argument
            if (!((x >> c.target) & 1)) continue;
            if (!((attacked >> c.ant) & 1)) return false;
        }
        return true;
    }

    // An argument is incompatible with S exactly when, for some realized
    // triple {A, B, A -> ~B}, it holds the part of the triple S lacks; that
    // remainder is itself the minimal incompatible argument. So S is
    // justifying iff for every realized triple it partially holds, S
    // attacks an atom of the remainder.
    bool justifying(std::uint64_t x, std::uint64_t r) const {
        std::uint64_t attacked = attacked_atoms(x, r);
        for (std::size_t c = 0; c < conds.size(); ++c) {
            const Cond& cd = conds[c];
            if (cd.ant < 0 || cd.target < 0) continue; // triple not realized in the theory
            bool ant_in = (x >> cd.ant) & 1;
            bool tgt_in = (x >> cd.target) & 1;
            bool cond_in = (r >> c) & 1;
            if (!ant_in && !tgt_in && !cond_in) continue; // remainder is not an argument
            if (ant_in && tgt_in && cond_in) continue;    // S itself conflicted; not reached
            bool ok = false;
            if (!ant_in && ((attacked >> cd.ant) & 1)) ok = true;
            if (!tgt_in && ((attacked >> cd.target) & 1)) ok = true;
            if (!ok) return false;
        }
        return true;
    }
};

} // namespace

std::optional<AdmissibleJustifyingMismatch>
find_admissible_justifying_mismatch(const Theory& delta, const EngineLimits& limits) {
    if (!is_dung_theory(delta))
        throw PreconditionError("admissible/justifying comparison requires a Dung theory");
    if (delta.size() > limits.max_theory_size)
        throw TheoryTooLargeError(delta.size(), limits.max_theory_size);
    DungView view(delta);
    std::size_t na = view.atoms.size();
    std::size_t nc = view.conds.size();

    auto to_set = [&](std::uint64_t x, std::uint64_t r) {
        std::vector<Sentence> items;
        for (std::size_t i = 0; i < na; ++i)
            if ((x >> i) & 1) items.push_back(view.atoms[i]);
        for (std::size_t c = 0; c < nc; ++c)
            if ((r >> c) & 1) items.push_back(view.conds[c].sentence);
        return SentenceSet(std::move(items));
    };
    auto probe = [&](std::uint64_t x, std::uint64_t r) -> std::optional<AdmissibleJustifyingMismatch> {
        if (!view.conflict_free(x, r)) return std::nullopt;
        bool adm = view.admissible(x, r);
        bool just = view.justifying(x, r);
        if (adm == just) return std::nullopt;
        return AdmissibleJustifyingMismatch{to_set(x, r), adm, just};
    };

    // Singletons decide the outcome whenever an attack's endpoints are all
    // present, so the exhaustive pass below is only ever reached on
    // theories where it is cheap.
    for (std::size_t i = 0; i < na; ++i)
        if (auto m = probe(std::uint64_t(1) << i, 0)) return m;
    for (std::size_t c = 0; c < nc; ++c)
        if (auto m = probe(0, std::uint64_t(1) << c)) return m;

    for (std::uint64_t x = 0; x < (std::uint64_t(1) << na); ++x) {
        std::uint64_t allowed = 0;
        for (std::size_t c = 0; c < nc; ++c) {
            const auto& cd = view.conds[c];
            bool both = cd.ant >= 0 && cd.target >= 0 && ((x >> cd.ant) & 1) &&
                        ((x >> cd.target) & 1);
            if (!both) allowed |= std::uint64_t(1) << c;
        }
        std::uint64_t r = allowed;
        while (true) {
            if (auto m = probe(x, r)) return m;
            if (r == 0) break;
            r = (r - 1) & allowed;
        }
    }
    return std::nullopt;
}

bool admissible_equals_justifying_check(const Theory& delta, const EngineLimits& limits) {
    return !find_admissible_justifying_mismatch(delta, limits).has_value();
}

} // namespace deflog

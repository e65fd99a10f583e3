// deflog: command-line front end for the dialectical argumentation engine.
//
// Exit codes: 0 success (and theorem/correspondence agreement), 1 no
// extension (extensions command only), 2 input error, 3 disagreement.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deflog/dot.hpp"
#include "deflog/dung.hpp"
#include "deflog/errors.hpp"
#include "deflog/justification.hpp"
#include "deflog/parser.hpp"
#include "deflog/rules.hpp"
#include "deflog/semantics.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunReport {
    std::string command;
    std::string input_digest;
    json results;
    std::int64_t elapsed_ms = 0;
    std::string text;
    int exit_code = 0;
};

std::string fnv1a_digest(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string plural(std::size_t n, const char* word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string join_sentences(const deflog::SentenceSet& set) {
    if (set.empty()) return "(none)";
    std::string out;
    for (deflog::Sentence s : set) {
        if (!out.empty()) out += ", ";
        out += deflog::render(s);
    }
    return out;
}

json set_to_json(const deflog::SentenceSet& set) {
    json arr = json::array();
    for (deflog::Sentence s : set) arr.push_back(deflog::render(s));
    return arr;
}

void emit(const RunReport& report, bool as_json) {
    if (as_json) {
        json doc;
        doc["command"] = report.command;
        doc["input_digest"] = report.input_digest;
        doc["results"] = report.results;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << report.text;
    }
    std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
}

struct CommandArgs {
    std::string file;
    std::string sentence;
    bool full = false;
    bool annotate = false;
    bool as_json = false;
    std::size_t max_theory = 24;
};

deflog::EngineLimits limits_of(const CommandArgs& a) { return {a.max_theory}; }

RunReport run_extensions(deflog::SentenceStore& store, const CommandArgs& args) {
    RunReport report;
    report.command = "extensions";
    std::string raw = read_file(args.file);
    report.input_digest = fnv1a_digest(raw);
    deflog::Theory delta = deflog::parse_theory(store, raw);
    std::vector<deflog::Extension> exts = deflog::extensions(delta, limits_of(args));

    std::ostringstream text;
    json list = json::array();
    for (std::size_t i = 0; i < exts.size(); ++i) {
        const auto& e = exts[i];
        deflog::SentenceSet justified_delta = set_intersection(e.justified, delta);
        deflog::SentenceSet defeated_delta = set_intersection(e.defeated, delta);
        text << "extension " << (i + 1) << "\n";
        text << "  justified: " << join_sentences(justified_delta) << "\n";
        text << "  defeated: " << join_sentences(defeated_delta) << "\n";
        json je;
        je["justified"] = set_to_json(justified_delta);
        je["defeated"] = set_to_json(defeated_delta);
        if (args.full) {
            text << "  supp: " << join_sentences(e.justified) << "\n";
            text << "  att: " << join_sentences(e.defeated) << "\n";
            je["supp"] = set_to_json(e.justified);
            je["att"] = set_to_json(e.defeated);
        }
        list.push_back(std::move(je));
    }
    text << plural(exts.size(), "extension") << "\n";
    report.results["count"] = exts.size();
    report.results["extensions"] = std::move(list);
    report.text = text.str();
    report.exit_code = exts.empty() ? 1 : 0;
    return report;
}

RunReport run_justify(deflog::SentenceStore& store, const CommandArgs& args) {
    RunReport report;
    report.command = "justify";
    std::string raw = read_file(args.file);
    report.input_digest = fnv1a_digest(raw + '\0' + args.sentence);
    deflog::Theory delta = deflog::parse_theory(store, raw);
    deflog::Sentence phi = deflog::parse_sentence(store, args.sentence);
    deflog::JustificationVerdict v = deflog::justification_verdict(delta, phi, limits_of(args));

    const char* verdict = v.justifiable ? (v.defeasible ? "AMBIGUOUS" : "JUSTIFIABLE")
                                        : (v.defeasible ? "DEFEASIBLE" : "UNINTERPRETABLE");
    std::ostringstream text;
    text << verdict << "\n";
    report.results["sentence"] = deflog::render(phi);
    report.results["verdict"] = verdict;
    if (v.witness_for) {
        text << "witness for: " << deflog::render_set(v.witness_for->premises) << "\n";
        report.results["witness_for"] = set_to_json(v.witness_for->premises);
    }
    if (v.witness_against) {
        text << "witness against: " << deflog::render_set(v.witness_against->premises) << "\n";
        report.results["witness_against"] = set_to_json(v.witness_against->premises);
    }
    report.text = text.str();
    return report;
}

RunReport run_verify_theorems(deflog::SentenceStore& store, const CommandArgs& args) {
    RunReport report;
    report.command = "verify-theorems";
    std::string raw = read_file(args.file);
    report.input_digest = fnv1a_digest(raw);
    deflog::Theory delta = deflog::parse_theory(store, raw);
    deflog::EngineLimits limits = limits_of(args);

    std::size_t direct = deflog::extensions(delta, limits).size();
    deflog::JustificationEngine engine(delta, limits);
    bool oracle_exists = engine.has_extension();
    std::size_t oracle_count = engine.count_extensions();
    bool agree = (oracle_exists == (direct > 0)) && (oracle_count == direct);

    std::ostringstream text;
    text << "direct extension count: " << direct << "\n";
    text << "oracle existence: " << (oracle_exists ? "true" : "false") << "\n";
    text << "oracle count: " << oracle_count << "\n";
    text << (agree ? "AGREE" : "DISAGREE") << "\n";
    report.results["direct_count"] = direct;
    report.results["oracle_exists"] = oracle_exists;
    report.results["oracle_count"] = oracle_count;
    report.results["agree"] = agree;
    report.text = text.str();
    report.exit_code = agree ? 0 : 3;
    return report;
}

RunReport run_from_af(deflog::SentenceStore& store, const CommandArgs& args) {
    RunReport report;
    report.command = "from-af";
    std::string raw = read_file(args.file);
    report.input_digest = fnv1a_digest(raw);
    deflog::ArgumentationFramework af = deflog::parse_af(raw);
    deflog::Theory delta = deflog::af_to_theory(store, af);

    std::vector<deflog::Extension> exts = deflog::extensions(delta, limits_of(args));
    std::vector<std::vector<std::string>> deflog_sets;
    for (const auto& e : exts) {
        std::vector<std::string> atoms;
        for (deflog::Sentence s : set_intersection(e.justified, delta))
            if (s.is_atom()) atoms.emplace_back(s.atom_name());
        deflog_sets.push_back(std::move(atoms));
    }
    std::sort(deflog_sets.begin(), deflog_sets.end());
    std::vector<std::vector<std::string>> stable = deflog::stable_extensions(af);
    bool match = deflog_sets == stable;

    auto format_sets = [](const std::vector<std::vector<std::string>>& sets) {
        if (sets.empty()) return std::string("(none)");
        std::string out;
        for (const auto& s : sets) {
            if (!out.empty()) out += ", ";
            out += "{";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) out += ", ";
                out += s[i];
            }
            out += "}";
        }
        return out;
    };

    std::ostringstream text;
    text << "theory:\n";
    for (deflog::Sentence s : delta) text << "  " << deflog::render(s) << "\n";
    text << "deflog extensions (justified atoms): " << format_sets(deflog_sets) << "\n";
    text << "stable extensions: " << format_sets(stable) << "\n";
    text << (match ? "MATCH" : "MISMATCH") << "\n";
    report.results["theory"] = set_to_json(delta);
    report.results["deflog_extensions"] = deflog_sets;
    report.results["stable_extensions"] = stable;
    report.results["match"] = match;
    report.text = text.str();
    report.exit_code = match ? 0 : 3;
    return report;
}

RunReport run_from_defaults(deflog::SentenceStore& store, const CommandArgs& args) {
    RunReport report;
    report.command = "from-defaults";
    std::string raw = read_file(args.file);
    report.input_digest = fnv1a_digest(raw);

    // File format: a bare sentence per line is a fact; a default is
    // written `prerequisite : justification / consequent`. `#` comments.
    deflog::Theory delta;
    std::vector<deflog::ParseError> errors;
    std::size_t line_no = 0;
    std::istringstream lines(raw);
    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            std::size_t colon = line.find(':');
            if (colon == std::string::npos) {
                delta.insert(deflog::parse_sentence(store, line, line_no));
                continue;
            }
            std::size_t slash = line.find('/', colon + 1);
            if (slash == std::string::npos)
                throw deflog::ParseError(line_no, colon + 1, "default needs ':' and '/'");
            deflog::DefaultRule rule{
                deflog::parse_sentence(store, line.substr(0, colon), line_no),
                deflog::parse_sentence(store, line.substr(colon + 1, slash - colon - 1), line_no),
                deflog::parse_sentence(store, line.substr(slash + 1), line_no)};
            deflog::Sentence contrary = deflog::default_contrary(store, rule.justification);
            auto [applied, blocked] = deflog::default_to_sentences(store, rule, contrary);
            delta.insert(applied);
            delta.insert(blocked);
        } catch (const deflog::ParseError& e) {
            errors.push_back(e);
        } catch (const deflog::PreconditionError& e) {
            errors.push_back(deflog::ParseError(line_no, 1, e.what()));
        }
    }
    if (!errors.empty()) throw deflog::TheoryParseError(std::move(errors));

    std::vector<deflog::Extension> exts = deflog::extensions(delta, limits_of(args));
    std::ostringstream text;
    text << "theory:\n";
    for (deflog::Sentence s : delta) text << "  " << deflog::render(s) << "\n";
    text << plural(exts.size(), "extension") << "\n";
    json list = json::array();
    for (const auto& e : exts) {
        json je;
        je["justified"] = set_to_json(set_intersection(e.justified, delta));
        je["defeated"] = set_to_json(set_intersection(e.defeated, delta));
        list.push_back(std::move(je));
    }
    report.results["theory"] = set_to_json(delta);
    report.results["count"] = exts.size();
    report.results["extensions"] = std::move(list);
    report.text = text.str();
    return report;
}

RunReport run_dot(deflog::SentenceStore& store, const CommandArgs& args) {
    RunReport report;
    report.command = "dot";
    std::string raw = read_file(args.file);
    report.input_digest = fnv1a_digest(raw);
    deflog::Theory delta = deflog::parse_theory(store, raw);
    std::string dot = deflog::to_dot(delta, args.annotate);
    report.results["dot"] = dot;
    report.text = dot;
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deflog: a reasoning engine for dialectical argumentation"};
    app.require_subcommand(1);

    CommandArgs args;
    RunReport (*handler)(deflog::SentenceStore&, const CommandArgs&) = nullptr;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", args.as_json, "machine-readable output");
        cmd->add_option("--max-theory", args.max_theory,
                        "size cap for the exponential searches")
            ->capture_default_str();
    };

    CLI::App* c_ext = app.add_subcommand("extensions", "list all extensions of a theory");
    c_ext->add_option("file", args.file, "theory file (.dfl)")->required();
    c_ext->add_flag("--full", args.full, "also print full supported/attacked sets");
    add_common(c_ext);
    c_ext->callback([&] { handler = run_extensions; });

    CLI::App* c_jus = app.add_subcommand("justify", "dialectical justification of a sentence");
    c_jus->add_option("file", args.file, "theory file (.dfl)")->required();
    c_jus->add_option("sentence", args.sentence, "sentence to query")->required();
    add_common(c_jus);
    c_jus->callback([&] { handler = run_justify; });

    CLI::App* c_ver = app.add_subcommand(
        "verify-theorems", "compare direct enumeration with the existence/count oracles");
    c_ver->add_option("file", args.file, "theory file (.dfl)")->required();
    add_common(c_ver);
    c_ver->callback([&] { handler = run_verify_theorems; });

    CLI::App* c_af = app.add_subcommand(
        "from-af", "translate an argumentation framework and check the stable correspondence");
    c_af->add_option("file", args.file, "framework file (.apx or plain pairs)")->required();
    add_common(c_af);
    c_af->callback([&] { handler = run_from_af; });

    CLI::App* c_def = app.add_subcommand("from-defaults",
                                         "translate default rules and list extensions");
    c_def->add_option("file", args.file, "defaults file")->required();
    add_common(c_def);
    c_def->callback([&] { handler = run_from_defaults; });

    CLI::App* c_dot = app.add_subcommand("dot", "emit the theory as a DOT digraph");
    c_dot->add_option("file", args.file, "theory file (.dfl)")->required();
    c_dot->add_flag("--annotate", args.annotate,
                    "style nodes by the unique extension's verdicts");
    add_common(c_dot);
    c_dot->callback([&] { handler = run_dot; });

    CLI11_PARSE(app, argc, argv);

    try {
        deflog::SentenceStore store;
        auto start = std::chrono::steady_clock::now();
        RunReport report = handler(store, args);
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        emit(report, args.as_json);
        return report.exit_code;
    } catch (const deflog::TheoryParseError& e) {
        for (const auto& err : e.errors())
            std::cerr << args.file << ":" << err.what() << "\n";
        return 2;
    } catch (const deflog::ParseError& e) {
        std::cerr << args.file << ":" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

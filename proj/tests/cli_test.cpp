#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DEFLOG_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content) {
        path_ = fs::temp_directory_path() / ("deflog_test_" + std::to_string(counter()++) + "_" + name);
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::error_code ec; fs::remove(path_, ec); }
    std::string str() const { return path_.string(); }

private:
    static int& counter() { static int c = 0; return c; }
    fs::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("extensions command: counts, pluralization and exit codes") {
    TempFile nixon("nixon.dfl",
                   "q\nr\nq -> p\nr -> np\n"
                   "(q & (q -> p)) -> ~(r -> np)\n"
                   "(r & (r -> np)) -> ~(q -> p)\n");
    RunResult two = run("extensions " + nixon.str());
    CHECK(two.exit_code == 0);
    CHECK(contains(two.out, "2 extensions"));

    TempFile none("none.dfl", "p\np -> ~p\n");
    RunResult zero = run("extensions " + none.str());
    CHECK(zero.exit_code == 1);
    CHECK(contains(zero.out, "0 extensions"));

    TempFile empty("empty.dfl", "# nothing here\n");
    RunResult one = run("extensions " + empty.str());
    CHECK(one.exit_code == 0);
    CHECK(contains(one.out, "1 extension\n"));
}

TEST_CASE("extensions command: full listing and determinism") {
    TempFile simple("simple.dfl", "b\nb -> ~s\ns\n");
    RunResult full = run("extensions --full " + simple.str());
    CHECK(full.exit_code == 0);
    CHECK(contains(full.out, "justified: b, b -> ~s"));
    CHECK(contains(full.out, "defeated: s"));
    CHECK(contains(full.out, "supp: b, ~s, b -> ~s"));
    CHECK(contains(full.out, "att: s"));
    RunResult again = run("extensions --full " + simple.str());
    CHECK(again.out == full.out);
}

TEST_CASE("justify command verdicts and witnesses") {
    TempFile chain("chain.dfl", "p\nq\nr\nq -> ~p\nr -> ~q\n");
    RunResult j = run("justify " + chain.str() + " p");
    CHECK(j.exit_code == 0);
    CHECK(contains(j.out, "JUSTIFIABLE"));
    CHECK(contains(j.out, "witness for: {p, r, r -> ~q}"));

    TempFile mutual("mutual.dfl", "p\nq\np -> ~q\nq -> ~p\n");
    RunResult amb = run("justify " + mutual.str() + " p");
    CHECK(amb.exit_code == 0);
    CHECK(contains(amb.out, "AMBIGUOUS"));

    TempFile self("self.dfl", "p\np -> ~p\n");
    RunResult un = run("justify " + self.str() + " p");
    CHECK(un.exit_code == 0);
    CHECK(contains(un.out, "UNINTERPRETABLE"));

    RunResult de = run("justify " + chain.str() + " q");
    CHECK(contains(de.out, "DEFEASIBLE"));
    CHECK(contains(de.out, "witness against: {r, r -> ~q}"));
}

TEST_CASE("verify-theorems agrees on the worked examples") {
    TempFile counterexample("counter.dfl",
                            "p\nq\np -> ~q\nq -> ~p\nr\nr -> ~r\ns\ns -> ~s\np -> ~r\nq -> ~s\n");
    RunResult r1 = run("verify-theorems " + counterexample.str());
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.out, "direct extension count: 0"));
    CHECK(contains(r1.out, "oracle existence: false"));
    CHECK(contains(r1.out, "AGREE"));

    TempFile mutual("mutual.dfl", "p\nq\np -> ~q\nq -> ~p\n");
    RunResult r2 = run("verify-theorems " + mutual.str());
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.out, "direct extension count: 2"));
    CHECK(contains(r2.out, "oracle count: 2"));
    CHECK(contains(r2.out, "AGREE"));

    TempFile single("single.dfl", "p\n");
    RunResult r3 = run("verify-theorems " + single.str());
    CHECK(r3.exit_code == 0);
    CHECK(contains(r3.out, "direct extension count: 1"));
    CHECK(contains(r3.out, "oracle count: 1"));
}

TEST_CASE("from-af translates, solves and matches") {
    TempFile mutual("mutual.apx", "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n");
    RunResult r = run("from-af " + mutual.str());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "a -> ~b"));
    CHECK(contains(r.out, "deflog extensions (justified atoms): {a}, {b}"));
    CHECK(contains(r.out, "stable extensions: {a}, {b}"));
    CHECK(contains(r.out, "MATCH"));

    TempFile self("self.apx", "arg(a).\natt(a,a).\n");
    RunResult r2 = run("from-af " + self.str());
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.out, "deflog extensions (justified atoms): (none)"));
    CHECK(contains(r2.out, "MATCH"));

    TempFile empty("empty.apx", "% nothing\n");
    RunResult r3 = run("from-af " + empty.str());
    CHECK(r3.exit_code == 0);
    CHECK(contains(r3.out, "deflog extensions (justified atoms): {}"));
    CHECK(contains(r3.out, "MATCH"));

    TempFile bad("bad.apx", "arg(a).\natt(a,z).\n");
    CHECK(run("from-af " + bad.str()).exit_code == 2);
}

TEST_CASE("from-defaults translates the classic no-extension default") {
    TempFile defaults("reiter.dft", "true\ntrue : neg_p / p\n");
    RunResult r = run("from-defaults " + defaults.str());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "true -> p"));
    CHECK(contains(r.out, "p -> ~(true -> p)"));
    CHECK(contains(r.out, "0 extensions"));
}

TEST_CASE("dot output and annotation guard") {
    TempFile support("support.dfl", "a\na -> s\n");
    RunResult plain = run("dot " + support.str());
    CHECK(plain.exit_code == 0);
    CHECK(contains(plain.out, "digraph deflog {"));
    CHECK(contains(plain.out, "\"a\" -> \"s\";"));

    RunResult annotated = run("dot --annotate " + support.str());
    CHECK(annotated.exit_code == 0);
    CHECK(contains(annotated.out, "[style=bold, color=darkgreen]"));

    TempFile mutual("mutual.dfl", "p\nq\np -> ~q\nq -> ~p\n");
    CHECK(run("dot --annotate " + mutual.str()).exit_code == 2);

    TempFile empty("empty.dfl", "\n");
    RunResult e = run("dot " + empty.str());
    CHECK(e.out == "digraph deflog {\n}\n");
}

TEST_CASE("json output is structured and stable across runs") {
    TempFile mutual("mutual.dfl", "p\nq\np -> ~q\nq -> ~p\n");
    RunResult r1 = run("extensions --json " + mutual.str());
    RunResult r2 = run("extensions --json " + mutual.str());
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    auto doc = nlohmann::json::parse(r1.out);
    CHECK(doc["command"] == "extensions");
    CHECK(doc["results"]["count"] == 2);
    CHECK(doc["results"]["extensions"].size() == 2);
    CHECK(doc["input_digest"].get<std::string>().size() == 16);

    TempFile chain("chain.dfl", "p\nq\nr\nq -> ~p\nr -> ~q\n");
    auto jd = nlohmann::json::parse(run("justify --json " + chain.str() + " p").out);
    CHECK(jd["results"]["verdict"] == "JUSTIFIABLE");
    CHECK(jd["results"]["witness_for"].size() == 3);
}

TEST_CASE("input errors exit with code 2") {
    TempFile broken("broken.dfl", "p ->\nq &\n");
    CHECK(run("extensions " + broken.str()).exit_code == 2);
    CHECK(run("extensions /nonexistent/path.dfl").exit_code == 2);

    TempFile big("big.dfl", [] {
        std::string s;
        for (int i = 0; i < 30; ++i) s += "a" + std::to_string(i) + "\n";
        return s;
    }());
    CHECK(run("extensions " + big.str()).exit_code == 2);
    CHECK(run("extensions --max-theory 32 " + big.str()).exit_code == 0);
}

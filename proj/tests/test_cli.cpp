#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lpsem/cli.hpp"
#include "support/helpers.hpp"

using namespace lpsem;
using namespace lpsem::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string write_program(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "lpsem_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

template <typename Cmd>
Run run(Cmd cmd, const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = cmd(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig json_for(const std::string& path, const std::string& semantics = "wf") {
    RunConfig cfg;
    cfg.input = path;
    cfg.semantics = semantics;
    cfg.format = "json";
    return cfg;
}

const std::string kEx1 = write_program("example1.lp", testing_support::kExample1);

}  // namespace

TEST(Compute, Example1Json) {
    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "wf")).out, "{\"true\":[\"q\"],\"false\":[\"p\"],\"undefined\":[]}\n");
    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "maxwf")).out, "{\"true\":[\"p\"],\"false\":[\"q\"],\"undefined\":[]}\n");
    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "wf-alt")).out, "{\"true\":[\"q\"],\"false\":[\"p\"],\"undefined\":[]}\n");
    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "supported")).out, "{\"models\":[[\"p\"],[\"q\"]],\"count\":2}\n");
}

TEST(Compute, NoStableModel) {
    auto path = write_program("odd.lp", "p :- not p.\n");
    auto r = run(cmd_compute, json_for(path, "stable"));
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "{\"models\":[],\"count\":0}\n");
}

TEST(Compute, TextAndTrace) {
    auto cfg = json_for(kEx1, "wf");
    cfg.format = "text";
    cfg.trace = true;
    auto r = run(cmd_compute, cfg);
    EXPECT_EQ(r.out,
              "semantics: wf\nmodel: {q, not p}\nundefined: {}\ntotal: yes\n"
              "stage 0: {}\nstage 1: {not p}\nstage 2: {q, not p}\nstage 3: {q, not p}\n");
    cfg.semantics = "fitting";
    cfg.trace = false;
    EXPECT_NE(run(cmd_compute, cfg).out.find("total: no"), std::string::npos);

    auto json = json_for(kEx1, "maxwf");
    json.trace = true;
    auto j = Json::parse(run(cmd_compute, json).out);
    ASSERT_EQ(j["trace"].size(), 4u);
    EXPECT_EQ(j["trace"][1]["true"], Json::array({"p"}));
}

TEST(Compute, ExitCodes) {
    auto bad = write_program("bad.lp", "p :- q\n");
    auto r = run(cmd_compute, json_for(bad));
    EXPECT_EQ(r.code, kExitParseError);
    EXPECT_NE(r.err.find("parse error"), std::string::npos);
    EXPECT_TRUE(r.out.empty());

    EXPECT_EQ(run(cmd_compute, json_for("/nonexistent/x.lp")).code, kExitParseError);

    auto cap = json_for(kEx1, "stable");
    cap.cap = 1;
    EXPECT_EQ(run(cmd_compute, cap).code, kExitCapExceeded);

    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "least")).code, kExitNotDefinite);
    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "greatest")).code, kExitNotDefinite);
    EXPECT_EQ(run(cmd_compute, json_for(kEx1, "nonsense")).code, kExitUsage);

    auto neg = json_for(kEx1);
    neg.gen.neg_prob = 1.5;
    EXPECT_EQ(run(cmd_compute, neg).code, kExitUsage);
    auto zero = json_for(kEx1);
    zero.cap = 0;
    EXPECT_EQ(run(cmd_compute, zero).code, kExitUsage);
}

TEST(Compute, JsonRoundTrip) {
    const std::string text = "a :- not b. b :- not a. c :- a. c :- b. d :- d. e :- not e.";
    auto path = write_program("roundtrip.lp", text);
    auto g = ground_text(text);
    for (auto k : kAllSemantics) {
        auto cfg = json_for(path, std::string(to_string(k)));
        auto r = run(cmd_compute, cfg);
        if (r.code == kExitNotDefinite) continue;
        ASSERT_EQ(r.code, kExitOk) << r.err;
        auto j = Json::parse(r.out);
        std::string again;
        if (is_model_set_semantics(k)) {
            again = model_set_json(g, model_set_from_json(g, j)).dump() + "\n";
        } else {
            again = interpretation_json(g, interpretation_from_json(g, j)).dump() + "\n";
        }
        EXPECT_EQ(again, r.out) << to_string(k);
    }
}

TEST(Compare, Example1) {
    auto cfg = json_for(kEx1);
    auto j = Json::parse(run(cmd_compare, cfg).out);
    auto relation = [&](const std::string& a, const std::string& b) {
        for (const auto& e : j["agreement"])
            if (e["a"] == a && e["b"] == b) return e["relation"].get<std::string>();
        return std::string("missing");
    };
    EXPECT_EQ(relation("wf", "maxwf"), "incomparable");
    EXPECT_EQ(relation("fitting", "wf"), "below");
    EXPECT_EQ(relation("fitting", "maxwf"), "below");
    EXPECT_EQ(j["semantics"][0]["available"], false);

    cfg.format = "text";
    auto text = run(cmd_compare, cfg).out;
    EXPECT_NE(text.find("wf         maxwf      incomparable"), std::string::npos) << text;
    EXPECT_NE(text.find("least      n/a"), std::string::npos);
}

TEST(Compare, DefiniteChainAgrees) {
    auto path = write_program("chain.lp", "a. b :- a.");
    auto j = Json::parse(run(cmd_compare, json_for(path)).out);
    for (const auto& s : j["semantics"]) {
        ASSERT_EQ(s["available"], true);
        if (s.contains("model")) {
            EXPECT_EQ(s["total"], true);
            EXPECT_EQ(s["model"]["true"], Json::array({"a", "b"}));
        } else {
            EXPECT_EQ(s["models"], Json::parse("[[\"a\",\"b\"]]"));
        }
    }
    for (const auto& e : j["agreement"]) EXPECT_EQ(e["relation"], "equal");
}

TEST(Compare, EvenLoop) {
    auto path = write_program("even.lp", "p :- not q. q :- not p.");
    auto j = Json::parse(run(cmd_compare, json_for(path)).out);
    for (const auto& e : j["agreement"]) {
        if (e["a"] == "stable" && e["b"] == "maxstable") { EXPECT_EQ(e["relation"], "equal"); }
        if (e["a"] == "wf" && e["b"] == "maxwf") { EXPECT_EQ(e["relation"], "equal"); }
    }
    for (const auto& s : j["semantics"]) {
        if (s["name"] == "wf" || s["name"] == "maxwf") { EXPECT_EQ(s["model"]["undefined"], Json::array({"p", "q"})); }
        if (s["name"] == "stable") { EXPECT_EQ(s["models"], Json::parse("[[\"p\"],[\"q\"]]")); }
    }
}

TEST(Check, Example1AllPass) {
    auto cfg = json_for(kEx1);
    auto r = run(cmd_check, cfg);
    EXPECT_EQ(r.code, kExitOk);
    auto j = Json::parse(r.out);
    ASSERT_FALSE(j["checks"].empty());
    for (const auto& c : j["checks"]) {
        EXPECT_NE(c["status"], "fail") << c.dump();
        if (c["status"] == "pass") {
            EXPECT_TRUE(c["witness"].is_null());
        }
    }
}

TEST(Check, RandomSeed42) {
    RunConfig cfg;
    cfg.seed = 42;
    cfg.gen.atoms = 4;
    cfg.format = "json";
    auto r = run(cmd_check, cfg);
    EXPECT_EQ(r.code, kExitOk);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["seed"], 42);
    for (const auto& c : j["checks"])
        if (c["name"] == "wf-alternating" || c["name"] == "maxwf-alternating") { EXPECT_EQ(c["status"], "pass"); }
}

TEST(Check, LargeProgramSkipsEnumeration) {
    std::string text;
    for (int k = 0; k < 25; ++k) text += "a" + std::to_string(k) + " :- not a" + std::to_string((k + 1) % 25) + ".\n";
    auto path = write_program("big.lp", text);
    auto r = run(cmd_check, json_for(path));
    EXPECT_EQ(r.code, kExitOk) << r.out;
    bool seen = false;
    const auto j = Json::parse(r.out);
    for (const auto& c : j["checks"]) {
        if (c["name"] == "stable-enumeration") {
            seen = true;
            EXPECT_EQ(c["status"], "skipped");
            EXPECT_NE(c["witness"].get<std::string>().find("cap"), std::string::npos);
        }
    }
    EXPECT_TRUE(seen);
}

TEST(Check, JobsDoNotChangeOutput) {
    RunConfig cfg;
    cfg.programs = 40;
    cfg.gen.atoms = 5;
    cfg.gen.clauses = 8;
    auto one = run(cmd_check, cfg);
    cfg.jobs = 4;
    auto four = run(cmd_check, cfg);
    EXPECT_EQ(one.code, kExitOk);
    EXPECT_EQ(one.out, four.out);
}

TEST(Gen, Deterministic) {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.gen.atoms = 3;
    cfg.gen.clauses = 4;
    auto a = run(cmd_gen, cfg);
    auto b = run(cmd_gen, cfg);
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(parse_program(a.out));
    cfg.seed = 2;
    EXPECT_NE(run(cmd_gen, cfg).out, a.out);
}

TEST(Gen, StratifiedAndDefinite) {
    RunConfig cfg;
    cfg.seed = 7;
    cfg.gen.stratified = true;
    cfg.gen.atoms = 6;
    cfg.gen.clauses = 10;
    EXPECT_TRUE(is_locally_stratified(ground_text(run(cmd_gen, cfg).out)));

    RunConfig def;
    def.gen.neg_prob = 0.0;
    def.gen.clauses = 12;
    for (std::uint64_t s = 0; s < 20; ++s) {
        def.seed = s;
        EXPECT_TRUE(ground_text(run(cmd_gen, def).out).is_definite());
    }
}

TEST(Gen, Json) {
    RunConfig cfg;
    cfg.format = "json";
    auto j = Json::parse(run(cmd_gen, cfg).out);
    EXPECT_EQ(j["seed"], 1);
    EXPECT_NO_THROW(parse_program(j["program"].get<std::string>()));
}

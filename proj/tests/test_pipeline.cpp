#include <doctest.h>

#include "mcone/pipeline.hpp"
#include "mcone/semigroup.hpp"

#include <filesystem>
#include <set>

using namespace mcone;

namespace {

RunConfig config(const std::string& spec) {
    RunConfig cfg;
    cfg.spec = RepSpec::parse(spec);
    return cfg;
}

std::vector<Vec> ineqs(const RunReport& rep) {
    std::vector<Vec> out;
    for (const auto& r : rep.inequalities) out.push_back(r.ineq);
    return out;
}

std::set<std::vector<Int>> restricted(const ConeHull& h, const std::vector<Vec>& vs) {
    std::set<std::vector<Int>> out;
    for (const auto& v : vs) out.insert(h.restrict(v));
    return out;
}

InequalityFile file_of(const RunReport& rep, const RunConfig& cfg) {
    return parse_inequality_file(records_jsonl(rep, cfg));
}

std::vector<Rat> rats(const Vec& v) { return std::vector<Rat>(v.begin(), v.end()); }

std::filesystem::path fresh_dir(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("Kron(2,2,2) and Kron(3,2,2) against the semigroup hull") {
    for (auto [spec, dim] : std::vector<std::pair<std::string, int>>{{"kron 2 2 2", 4}, {"kron 3 2 2", 5}}) {
        auto cfg = config(spec);
        auto rep = run(cfg);
        auto h = hull_facets(semigroup_points(cfg.spec, 8), dim);
        auto mine = expand_symmetry(cfg.spec, ineqs(rep));
        for (const auto& v : mine) CHECK(h.is_facet(v));
        auto all = mine;
        all.insert(all.end(), rep.dominancy.begin(), rep.dominancy.end());
        auto got = restricted(h, all);
        CHECK(got == std::set<std::vector<Int>>(h.facets.begin(), h.facets.end()));
    }
}

TEST_CASE("Boson(3,2) is checked by semigroup points") {
    auto cfg = config("boson 3 2");
    auto rep = run(cfg);
    REQUIRE(rep.inequalities.size() == 1);
    auto pts = semigroup_points(cfg.spec, 8);
    for (const auto& v : ineqs(rep))
        for (const auto& p : pts) CHECK(pairing(v, p) <= 0);
    auto h = hull_facets(pts, 3);
    auto all = ineqs(rep);
    all.insert(all.end(), rep.dominancy.begin(), rep.dominancy.end());
    CHECK(restricted(h, all) == std::set<std::vector<Int>>(h.facets.begin(), h.facets.end()));
}

TEST_CASE("cones with empty interior") {
    auto cfg = config("fermion 6 3");
    CHECK_THROWS_AS(run(cfg), DegenerateCone);
    cfg.allow_degenerate = true;
    auto rep = run(cfg);
    CHECK_FALSE(rep.c0);
    CHECK(rep.pid == 2);
    CHECK(rep.inequalities.size() == 13);
    std::set<Vec> a, b;
    for (const auto& v : ineqs(rep)) {
        a.insert(primitive(v));
        b.insert(fermion_dual(cfg.spec, v));
    }
    CHECK(a == b);
    CHECK(file_of(rep, cfg).degenerate);
}

TEST_CASE("determinism, workers and resume") {
    auto cfg = config("kron 3 3 3");
    auto one = run(cfg);
    CHECK(one.inequalities.size() == 8);
    CHECK(records_jsonl(one, cfg) == records_jsonl(run(cfg), cfg));
    auto par = cfg;
    par.jobs = 3;
    CHECK(records_jsonl(run(par), par) == records_jsonl(one, cfg));

    auto dir = fresh_dir("mcone_resume_test");
    auto a = cfg;
    a.checkpoint_dir = dir.string();
    a.last_stage = 3;
    auto first = run(a);
    CHECK(first.pairs.size() == 32);
    auto b = a;
    b.first_stage = 4;
    b.last_stage = 5;
    auto second = run(b);
    CHECK(records_jsonl(second, b) == records_jsonl(one, cfg));
    CHECK(second.stages.front().stage == 0);
    auto wrong = b;
    wrong.seed = 2;
    CHECK_THROWS_AS(run(wrong), CheckpointMismatch);
    auto missing = b;
    missing.checkpoint_dir = fresh_dir("mcone_missing_test").string();
    CHECK_THROWS_AS(run(missing), CheckpointMismatch);
    auto nodir = b;
    nodir.checkpoint_dir.clear();
    CHECK_THROWS_AS(run(nodir), std::invalid_argument);
    std::filesystem::remove_all(dir);

    CHECK(derive_seed(1, 4, {1, 0}) != derive_seed(1, 5, {1, 0}));
    CHECK(derive_seed(1, 4, {1, 0}) != derive_seed(2, 4, {1, 0}));
    CHECK(derive_seed(1, 4, {1, 0}, {{1, 0}}) != derive_seed(1, 4, {1, 0}, {{0, 1}}));
}

TEST_CASE("filters do not change the output") {
    auto cfg = config("kron 3 3 3");
    auto plain = run(cfg);
    cfg.bkr = cfg.lin_tri = cfg.grobner = true;
    cfg.grobner_budget_s = 0.5;
    auto filtered = run(cfg);
    CHECK(ineqs(filtered) == ineqs(plain));
    CHECK(filtered.filters.lin_tri_selected == 6);
    CHECK(filtered.filters.bkr_eliminated == 2);
    for (const auto& r : filtered.inequalities) CHECK_FALSE(r.provenance.empty());
}

TEST_CASE("membership") {
    auto cfg = config("kron 2 2 2");
    auto rep = run(cfg);
    auto f = file_of(rep, cfg);
    CHECK(f.spec == cfg.spec);
    CHECK(f.inequalities.size() == 1);
    CHECK(membership(f, rats({1, 0, 1, 0, 1, 0})).member);
    CHECK(membership(f, rats({2, 0, 1, 1, 1, 1})).member);
    auto out = membership(f, rats({2, 0, 2, 0, 1, 1}));
    CHECK_FALSE(out.member);
    CHECK(out.violated.size() == 1);
    CHECK(membership(f, rats({20, 0, 20, 0, 10, 10})).member == false);
    CHECK(membership(f, rats({20, 0, 10, 10, 10, 10})).member);
    CHECK(membership(f, parse_lambda("(1/2 1/2 | 1 0 | 1/2, 1/2)")).member);
    // not dominant
    CHECK_FALSE(membership(f, rats({0, 1, 1, 0, 1, 0})).member);
    CHECK_THROWS_AS(membership(f, rats({1, 0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(membership(f, rats({1, 0, 2, 0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda("1 x"), std::invalid_argument);
    // every semigroup point is a member
    for (const auto& p : semigroup_points(cfg.spec, 6)) CHECK(membership(f, rats(p)).member);
}

TEST_CASE("symmetry expansion") {
    auto spec = RepSpec::kronecker({3, 2, 2});
    CHECK(expand_symmetry(spec, {{1, 0, 1, 1, 0, -2, -1}}).size() == 2);
    CHECK(expand_symmetry(spec, {{1, 1, 0, 0, 0, -1, -1}}).size() == 1);
    auto k = RepSpec::kronecker({2, 2, 2});
    CHECK(expand_symmetry(k, {{1, 0, 1, 0, -2, -1}}).size() == 3);
    CHECK(expand_symmetry(RepSpec::boson(3, 2), {{0, 0, -1}}).size() == 1);
}

TEST_CASE("stages and output formats") {
    auto cfg = config("kron 2 2 2");
    cfg.last_stage = 2;
    auto rep = run(cfg);
    CHECK(rep.stages.back().stage == 2);
    auto text = records_jsonl(rep, cfg);
    CHECK(text.find("\"type\":\"tau\"") != std::string::npos);
    CHECK_THROWS_AS(parse_inequality_file(text), std::invalid_argument);
    cfg.last_stage = 5;
    rep = run(cfg);
    auto facets = facets_text(rep);
    CHECK(facets.rfind("# kron 2 2 2\n", 0) == 0);
    CHECK(facets.find("# dominancy\n") != std::string::npos);
    auto rec = rep.inequalities.at(0);
    CHECK(record_from_json(to_json(rec)) == rec);
    cfg.first_stage = 0;
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("comparison table") {
    CHECK(emit_table({}) == "spec | step 1 | step 2 | step 3 | step 4 | step 5\n");
    std::vector<json> reps;
    for (auto s : {"kron 3 2 2", "kron 2 2 2", "boson 3 2"}) {
        auto cfg = config(s);
        reps.push_back(report_json(run(cfg), cfg));
    }
    auto half = config("kron 2 2 2");
    half.last_stage = 3;
    reps.push_back(report_json(run(half), half));
    auto t = emit_table(reps);
    std::vector<std::string> lines;
    std::string cur;
    for (char c : t) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    REQUIRE(lines.size() == 5);
    CHECK(lines[1].rfind("boson 3 2 |", 0) == 0);
    CHECK(lines[2].rfind("kron 2 2 2 | 3 (", 0) == 0);
    CHECK(lines[3].rfind("kron 2 2 2 |", 0) == 0);
    CHECK(lines[3].substr(lines[3].size() - 7) == "| - | -");
    CHECK(lines[4].rfind("kron 3 2 2 |", 0) == 0);
}

#include "mcone/pipeline.hpp"

#include "mcone/birationality.hpp"
#include "mcone/bkr.hpp"
#include "mcone/isotropy.hpp"
#include "mcone/lintri.hpp"
#include "mcone/weyl_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace mcone {

namespace {

constexpr int kCheckpointVersion = 1;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string spec_text(const RepSpec& spec) {
    std::ostringstream o;
    if (spec.kind == Kind::Kronecker) {
        o << "kron";
        for (int d : spec.dims) o << " " << d;
    } else {
        o << (spec.kind == Kind::Fermion ? "fermion " : "boson ") << spec.dims[0] << " " << spec.r;
    }
    return o.str();
}

template <class F>
void parallel_for(size_t n, int jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(n)); ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next++;
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                    next = n;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

json perm_json(const BlockPerm& w) {
    json a = json::array();
    for (const auto& p : w) {
        json b = json::array();
        for (int x : p) b.push_back(x + 1);
        a.push_back(b);
    }
    return a;
}

BlockPerm perm_from(const json& j) {
    BlockPerm w;
    for (const auto& b : j) {
        Perm p;
        for (const auto& x : b) p.push_back(x.get<int>() - 1);
        w.push_back(std::move(p));
    }
    return w;
}

json stats_json(const RunReport& rep) {
    json st = json::array();
    for (const auto& s : rep.stages) st.push_back({{"stage", s.stage}, {"count", s.count}, {"seconds", s.seconds}});
    const auto& a = rep.step1;
    const auto& f = rep.filters;
    return {
        {"pid", rep.pid},
        {"c0", rep.c0},
        {"base_pid", rep.base_pid},
        {"stages", st},
        {"step1",
         {{"dense_calls", a.dense_calls},
          {"dense_hyperplanes", a.dense_hyperplanes},
          {"dense_distinct_hyperplanes", a.dense_distinct_hyperplanes},
          {"dense_regular", a.dense_regular},
          {"dense_regular_mod_sym", a.dense_regular_mod_sym},
          {"dense_regular_unbounded", a.dense_regular_unbounded},
          {"dense_regular_unbounded_mod_sym", a.dense_regular_unbounded_mod_sym},
          {"tau_prime", a.tau_prime},
          {"extensions", a.extensions},
          {"bpp_pass", a.bpp_pass},
          {"bpp_mod_sym", a.bpp_mod_sym},
          {"total_calls", a.total_calls}}},
        {"step2", {{"input", rep.step2.input}, {"bprime", rep.step2.bprime}, {"output", rep.step2.output}}},
        {"filters",
         {{"lin_tri_tested", f.lin_tri_tested},
          {"lin_tri_selected", f.lin_tri_selected},
          {"bkr_tested", f.bkr_tested},
          {"bkr_eliminated", f.bkr_eliminated},
          {"bkr_skipped", f.bkr_skipped},
          {"grobner_tested", f.grobner_tested},
          {"grobner_birational", f.grobner_birational},
          {"grobner_rejected", f.grobner_rejected},
          {"grobner_inconclusive", f.grobner_inconclusive},
          {"step5_tested", f.step5_tested},
          {"boundary_rejected", f.boundary_rejected},
          {"ramification_rejected", f.ramification_rejected}}},
    };
}

void stats_from(const json& j, RunReport& rep) {
    rep.pid = j.at("pid");
    rep.c0 = j.at("c0");
    rep.base_pid = j.at("base_pid");
    rep.stages.clear();
    for (const auto& s : j.at("stages")) rep.stages.push_back({s.at("stage"), s.at("count"), s.at("seconds")});
    const auto& a = j.at("step1");
    auto& st = rep.step1;
    st.dense_calls = a.at("dense_calls");
    st.dense_hyperplanes = a.at("dense_hyperplanes");
    st.dense_distinct_hyperplanes = a.at("dense_distinct_hyperplanes");
    st.dense_regular = a.at("dense_regular");
    st.dense_regular_mod_sym = a.at("dense_regular_mod_sym");
    st.dense_regular_unbounded = a.at("dense_regular_unbounded");
    st.dense_regular_unbounded_mod_sym = a.at("dense_regular_unbounded_mod_sym");
    st.tau_prime = a.at("tau_prime");
    st.extensions = a.at("extensions");
    st.bpp_pass = a.at("bpp_pass");
    st.bpp_mod_sym = a.at("bpp_mod_sym");
    st.total_calls = a.at("total_calls");
    const auto& b = j.at("step2");
    rep.step2 = {b.at("input"), b.at("bprime"), b.at("output")};
}

std::string symbolic_name(SymbolicPolicy p) {
    switch (p) {
    case SymbolicPolicy::Never: return "never";
    case SymbolicPolicy::OnReject: return "on-reject";
    case SymbolicPolicy::Always: return "always";
    }
    return "?";
}

json checkpoint_header(const RunConfig& cfg, int stage) {
    return {{"format", "mcone-checkpoint"},
            {"version", kCheckpointVersion},
            {"spec", spec_text(cfg.spec)},
            {"seed", cfg.seed},
            {"symmetry", cfg.symmetry},
            {"allow_degenerate", cfg.allow_degenerate},
            {"symbolic", symbolic_name(cfg.symbolic)},
            {"stage", stage}};
}

std::filesystem::path checkpoint_path(const RunConfig& cfg, int stage) {
    return std::filesystem::path(cfg.checkpoint_dir) / ("stage" + std::to_string(stage) + ".json");
}

void write_checkpoint(const RunConfig& cfg, int stage, const RunReport& rep) {
    if (cfg.checkpoint_dir.empty()) return;
    std::filesystem::create_directories(cfg.checkpoint_dir);
    json j = checkpoint_header(cfg, stage);
    j["report"] = stats_json(rep);
    if (stage <= 2) {
        j["taus"] = rep.taus;
    } else {
        json a = json::array();
        for (const auto& p : rep.pairs) a.push_back(to_json(p));
        j["pairs"] = a;
    }
    auto path = checkpoint_path(cfg, stage);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void read_checkpoint(const RunConfig& cfg, int stage, RunReport& rep) {
    auto path = checkpoint_path(cfg, stage);
    std::ifstream in(path);
    if (!in) throw CheckpointMismatch("missing checkpoint " + path.string());
    json j = json::parse(in);
    json want = checkpoint_header(cfg, stage);
    for (auto it = want.begin(); it != want.end(); ++it)
        if (!j.contains(it.key()) || j[it.key()] != it.value())
            throw CheckpointMismatch("checkpoint " + path.string() + ": field " + it.key() + " differs");
    stats_from(j.at("report"), rep);
    if (stage <= 2) {
        rep.taus = j.at("taus").get<std::vector<Vec>>();
    } else {
        rep.pairs.clear();
        for (const auto& p : j.at("pairs")) rep.pairs.push_back(pair_from_json(p));
    }
}

struct Decision {
    bool accepted = false;
    std::vector<std::string> provenance;
    bool lin_tri = false, bkr_eliminated = false, bkr_skipped = false, bkr_tested = false;
    bool grobner_tested = false;
    GrobnerVerdict grobner = GrobnerVerdict::Inconclusive;
    bool step5 = false, boundary = false;
};

Decision decide(const RunConfig& cfg, const CandidatePair& p) {
    const auto& spec = cfg.spec;
    Decision d;
    if (cfg.lin_tri && lin_tri_verdict(spec, p.tau, p.w) == LinTriVerdict::Birational) {
        d.lin_tri = true;
        d.accepted = true;
        d.provenance.push_back("lin-tri:birational");
        return d;
    }
    if (cfg.bkr) {
        d.bkr_tested = true;
        auto m = levi_multiplicity(spec, p.tau, p.w);
        if (m.skipped) {
            d.bkr_skipped = true;
            d.provenance.push_back("bkr:skipped");
        } else if (m.multiplicity != 1) {
            d.bkr_eliminated = true;
            return d;
        } else {
            d.provenance.push_back("bkr:multiplicity-1");
        }
    }
    if (cfg.grobner) {
        d.grobner_tested = true;
        GrobnerOptions opt;
        opt.mode = cfg.grobner_mode;
        opt.seed = derive_seed(cfg.seed, 6, p.tau, p.w);
        opt.budget_s = cfg.grobner_budget_s;
        opt.confirm_negative = true;
        d.grobner = grobner_verdict(spec, p.tau, p.w, opt);
        if (d.grobner == GrobnerVerdict::Birational) {
            d.accepted = true;
            d.provenance.push_back("grobner:birational");
            return d;
        }
        if (d.grobner == GrobnerVerdict::NotBirational) return d;
        d.provenance.push_back("grobner:inconclusive");
    }
    d.step5 = true;
    auto br = decide_birationality(spec, p.tau, p.w, derive_seed(cfg.seed, 5, p.tau, p.w));
    d.boundary = br.boundary_rejected;
    if (br.birational) {
        d.accepted = true;
        d.provenance.push_back("step5:birational");
    }
    return d;
}

long vec_gcd(const Vec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

}  // namespace

uint64_t derive_seed(uint64_t root, int stage, const Vec& tau, const BlockPerm& w) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(root);
    mix(static_cast<uint64_t>(stage));
    for (long x : tau) mix(static_cast<uint64_t>(x));
    for (const auto& p : w) {
        mix(0xfeedull);
        for (int x : p) mix(static_cast<uint64_t>(x));
    }
    // splitmix64 finalizer
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

RunReport run(const RunConfig& cfg) {
    const auto& spec = cfg.spec;
    if (cfg.first_stage < 1 || cfg.last_stage > 5 || cfg.first_stage > cfg.last_stage)
        throw std::invalid_argument("stages must satisfy 1 <= first <= last <= 5");
    auto t_run = Clock::now();
    RunReport rep;
    rep.spec = spec;
    rep.dominancy = dominance_inequalities(spec);

    if (cfg.first_stage > 1) {
        if (cfg.checkpoint_dir.empty())
            throw std::invalid_argument("stage " + std::to_string(cfg.first_stage) + " needs a checkpoint directory");
        read_checkpoint(cfg, cfg.first_stage - 1, rep);
        rep.stages.erase(std::remove_if(rep.stages.begin(), rep.stages.end(),
                                        [&](const StageReport& s) { return s.stage >= cfg.first_stage; }),
                         rep.stages.end());
    } else {
        auto t = Clock::now();
        rep.pid = pid_full(spec, derive_seed(cfg.seed, 0, {}));
        rep.c0 = rep.pid == spec.central_rank();
        if (!rep.c0) {
            if (!cfg.allow_degenerate)
                throw DegenerateCone("condition (C0) fails for " + spec.name() + ": the general isotropy has dimension " +
                                     std::to_string(rep.pid) + " instead of " + std::to_string(spec.central_rank()) +
                                     ", so the moment cone has empty interior (use --allow-degenerate to continue)");
            rep.base_pid = rep.pid;
        }
        rep.stages.push_back({0, rep.pid, since(t)});
    }

    for (int stage = cfg.first_stage; stage <= cfg.last_stage; ++stage) {
        auto t = Clock::now();
        long count = 0;
        switch (stage) {
        case 1: {
            Step1Options opt;
            opt.symmetry = cfg.symmetry;
            rep.taus = enumerate_tau_plus(spec, opt, &rep.step1);
            count = static_cast<long>(rep.taus.size());
            break;
        }
        case 2:
            rep.taus = step2(spec, rep.taus, derive_seed(cfg.seed, 2, {}), &rep.step2, rep.base_pid);
            count = static_cast<long>(rep.taus.size());
            break;
        case 3:
            rep.pairs = step3(spec, rep.taus, cfg.symmetry);
            count = static_cast<long>(rep.pairs.size());
            break;
        case 4: {
            std::vector<char> keep(rep.pairs.size(), 0);
            parallel_for(rep.pairs.size(), cfg.jobs, [&](size_t i) {
                const auto& p = rep.pairs[i];
                keep[i] = decide_dominance(spec, p.tau, p.w, derive_seed(cfg.seed, 4, p.tau, p.w), cfg.symbolic).dominant;
            });
            std::vector<CandidatePair> out;
            for (size_t i = 0; i < keep.size(); ++i)
                if (keep[i]) out.push_back(rep.pairs[i]);
            rep.pairs = std::move(out);
            count = static_cast<long>(rep.pairs.size());
            break;
        }
        case 5: {
            std::vector<Decision> dec(rep.pairs.size());
            parallel_for(rep.pairs.size(), cfg.jobs, [&](size_t i) { dec[i] = decide(cfg, rep.pairs[i]); });
            auto& f = rep.filters;
            f = {};
            for (size_t i = 0; i < dec.size(); ++i) {
                const auto& d = dec[i];
                if (cfg.lin_tri) ++f.lin_tri_tested;
                f.lin_tri_selected += d.lin_tri;
                f.bkr_tested += d.bkr_tested;
                f.bkr_eliminated += d.bkr_eliminated;
                f.bkr_skipped += d.bkr_skipped;
                if (d.grobner_tested) {
                    ++f.grobner_tested;
                    if (d.grobner == GrobnerVerdict::Birational) ++f.grobner_birational;
                    else if (d.grobner == GrobnerVerdict::NotBirational) ++f.grobner_rejected;
                    else ++f.grobner_inconclusive;
                }
                if (d.step5) {
                    ++f.step5_tested;
                    if (!d.accepted) ++(d.boundary ? f.boundary_rejected : f.ramification_rejected);
                }
                if (!d.accepted) continue;
                const auto& p = rep.pairs[i];
                rep.inequalities.push_back({p.tau, p.w, inversion_set(p.w), p.ineq, d.provenance});
            }
            count = static_cast<long>(rep.inequalities.size());
            break;
        }
        }
        rep.stages.push_back({stage, count, since(t)});
        if (stage < 5) write_checkpoint(cfg, stage, rep);
    }
    rep.seconds = since(t_run);
    return rep;
}

json to_json(const CandidatePair& p) { return {{"tau", p.tau}, {"w", perm_json(p.w)}, {"ineq", p.ineq}}; }

CandidatePair pair_from_json(const json& j) {
    return {j.at("tau").get<Vec>(), perm_from(j.at("w")), j.at("ineq").get<Vec>()};
}

json to_json(const InequalityRecord& r) {
    json phi = json::array();
    for (const auto& b : r.phi) phi.push_back({b.k + 1, b.i + 1, b.j + 1});
    return {{"type", "inequality"}, {"tau", r.tau},   {"w", perm_json(r.w)},
            {"phi", phi},           {"ineq", r.ineq}, {"provenance", r.provenance}};
}

InequalityRecord record_from_json(const json& j) {
    InequalityRecord r;
    r.tau = j.at("tau").get<Vec>();
    r.w = perm_from(j.at("w"));
    for (const auto& b : j.at("phi")) r.phi.push_back({b[0].get<int>() - 1, b[1].get<int>() - 1, b[2].get<int>() - 1});
    r.ineq = j.at("ineq").get<Vec>();
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    return r;
}

std::string records_jsonl(const RunReport& rep, const RunConfig& cfg) {
    std::ostringstream o;
    int last = rep.stages.empty() ? 0 : rep.stages.back().stage;
    if (last == 5) {
        for (const auto& r : rep.inequalities) o << to_json(r).dump() << "\n";
    } else if (last >= 3) {
        for (const auto& p : rep.pairs) {
            json j = to_json(p);
            j["type"] = "pair";
            o << j.dump() << "\n";
        }
    } else {
        for (const auto& t : rep.taus) o << json{{"type", "tau"}, {"tau", t}}.dump() << "\n";
    }
    for (const auto& d : rep.dominancy) o << json{{"type", "dominancy"}, {"ineq", d}}.dump() << "\n";
    json counts = json::object();
    for (const auto& s : rep.stages)
        if (s.stage > 0) counts[std::to_string(s.stage)] = s.count;
    json filters = json::array();
    if (cfg.bkr) filters.push_back("bkr");
    if (cfg.grobner) filters.push_back("grobner");
    if (cfg.lin_tri) filters.push_back("lin-tri");
    o << json{{"type", "summary"},
              {"format", "mcone-inequalities"},
              {"version", 1},
              {"spec", spec_text(rep.spec)},
              {"symmetry", cfg.symmetry},
              {"degenerate", !rep.c0},
              {"seed", cfg.seed},
              {"filters", filters},
              {"last_stage", last},
              {"counts", counts}}
             .dump()
      << "\n";
    return o.str();
}

std::string facets_text(const RunReport& rep) {
    std::ostringstream o;
    o << "# " << spec_text(rep.spec) << "\n";
    auto line = [&](const Vec& v) {
        for (size_t i = 0; i < v.size(); ++i) o << (i ? " " : "") << v[i];
        o << "\n";
    };
    for (const auto& r : rep.inequalities) line(r.ineq);
    o << "# dominancy\n";
    for (const auto& d : rep.dominancy) line(d);
    return o.str();
}

json report_json(const RunReport& rep, const RunConfig& cfg) {
    json j = stats_json(rep);
    j["spec"] = spec_text(rep.spec);
    j["seconds"] = rep.seconds;
    j["config"] = {{"seed", cfg.seed},
                   {"symmetry", cfg.symmetry},
                   {"bkr", cfg.bkr},
                   {"grobner", cfg.grobner},
                   {"lin_tri", cfg.lin_tri},
                   {"budget_s", cfg.grobner_budget_s},
                   {"grobner_mode", cfg.grobner_mode == GrobnerMode::Generic ? "generic" : "random"},
                   {"jobs", cfg.jobs},
                   {"symbolic", symbolic_name(cfg.symbolic)},
                   {"allow_degenerate", cfg.allow_degenerate}};
    return j;
}

std::string human_summary(const RunReport& rep) {
    std::ostringstream o;
    o << spec_text(rep.spec) << ": pid " << rep.pid << (rep.c0 ? "" : " (C0 fails, relative (C))") << "\n";
    o << std::fixed << std::setprecision(3);
    for (const auto& s : rep.stages)
        if (s.stage > 0) o << "  step " << s.stage << ": " << s.count << " (" << s.seconds << "s)\n";
    const auto& f = rep.filters;
    if (f.lin_tri_tested) o << "  lin-tri: " << f.lin_tri_selected << " of " << f.lin_tri_tested << " selected\n";
    if (f.bkr_tested)
        o << "  bkr: " << f.bkr_eliminated << " of " << f.bkr_tested << " eliminated, " << f.bkr_skipped
          << " skipped\n";
    if (f.grobner_tested)
        o << "  grobner: " << f.grobner_birational << " birational, " << f.grobner_rejected << " rejected, "
          << f.grobner_inconclusive << " inconclusive\n";
    if (f.step5_tested)
        o << "  step 5: " << f.step5_tested << " tested, " << f.boundary_rejected << " boundary, "
          << f.ramification_rejected << " ramification rejections\n";
    o << "  total " << rep.seconds << "s\n";
    return o.str();
}

std::string emit_table(const std::vector<json>& reports) {
    std::ostringstream o;
    o << "spec | step 1 | step 2 | step 3 | step 4 | step 5\n";
    std::vector<const json*> rows;
    for (const auto& r : reports) rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [](const json* a, const json* b) {
        return a->at("spec").get<std::string>() < b->at("spec").get<std::string>();
    });
    for (const json* r : rows) {
        std::map<int, std::pair<long, double>> cells;
        for (const auto& s : r->at("stages")) cells[s.at("stage")] = {s.at("count"), s.at("seconds")};
        o << r->at("spec").get<std::string>();
        for (int k = 1; k <= 5; ++k) {
            o << " | ";
            auto it = cells.find(k);
            if (it == cells.end()) {
                o << "-";
                continue;
            }
            std::ostringstream c;
            c << it->second.first << " (" << std::fixed << std::setprecision(2) << it->second.second << "s)";
            o << c.str();
        }
        o << "\n";
    }
    return o.str();
}

InequalityFile parse_inequality_file(const std::string& text) {
    InequalityFile f;
    bool summary = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        std::string type = j.at("type");
        if (type == "inequality") f.inequalities.push_back(j.at("ineq").get<Vec>());
        else if (type == "dominancy") f.dominancy.push_back(j.at("ineq").get<Vec>());
        else if (type == "summary") {
            if (j.at("format") != "mcone-inequalities") throw std::invalid_argument("not an inequality file");
            if (j.at("last_stage") != 5) throw std::invalid_argument("inequality file stops before step 5");
            f.spec = RepSpec::parse(j.at("spec").get<std::string>());
            f.symmetry = j.at("symmetry");
            f.degenerate = j.at("degenerate");
            summary = true;
        }
    }
    if (!summary) throw std::invalid_argument("inequality file without summary line");
    return f;
}

std::vector<Vec> expand_symmetry(const RepSpec& spec, const std::vector<Vec>& ineqs) {
    std::vector<Perm> sigmas;
    Perm sigma(spec.s());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (int k = 0; k < spec.s(); ++k)
            if (spec.dims[sigma[k]] != spec.dims[k]) ok = false;
        if (ok) sigmas.push_back(sigma);
    } while (spec.kind == Kind::Kronecker && std::next_permutation(sigma.begin(), sigma.end()));
    std::map<Vec, Vec> out;
    for (const auto& v : ineqs)
        for (const auto& s : sigmas) {
            Vec u;
            for (int k = 0; k < spec.s(); ++k) {
                int o = spec.offset(s[k]);
                u.insert(u.end(), v.begin() + o, v.begin() + o + spec.dims[k]);
            }
            out.emplace(canonical_inequality(spec, u, false), u);
        }
    std::vector<Vec> res;
    for (auto& [k, u] : out) res.push_back(u);
    return res;
}

std::vector<Rat> parse_lambda(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == '|' || c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(t);
    std::vector<Rat> out;
    std::string tok;
    while (in >> tok) {
        Rat x;
        if (x.set_str(tok, 10) != 0) throw std::invalid_argument("malformed entry '" + tok + "'");
        x.canonicalize();
        out.push_back(x);
    }
    return out;
}

Membership membership(const InequalityFile& file, const std::vector<Rat>& lambda) {
    const auto& spec = file.spec;
    if (static_cast<int>(lambda.size()) != spec.n())
        throw std::invalid_argument("lambda has " + std::to_string(lambda.size()) + " entries, expected " +
                                    std::to_string(spec.n()));
    Int l = 1;
    for (const auto& x : lambda) l = lcm(l, Int(x.get_den()));
    std::vector<Int> L;
    for (const auto& x : lambda) L.push_back(x.get_num() * (l / x.get_den()));
    if (spec.kind == Kind::Kronecker) {
        Int deg = 0;
        for (int k = 0; k < spec.s(); ++k) {
            Int t = 0;
            for (int i = 0; i < spec.dims[k]; ++i) t += L[spec.offset(k) + i];
            if (k == 0) deg = t;
            else if (t != deg) throw std::invalid_argument("blocks of lambda have different sizes");
        }
    }
    Membership m;
    auto check = [&](const Vec& v) {
        Int s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += v[i] * L[i];
        if (s > 0) m.violated.push_back(v);
    };
    for (const auto& v : file.symmetry ? expand_symmetry(spec, file.inequalities) : file.inequalities) check(v);
    for (const auto& v : file.dominancy) check(v);
    m.member = m.violated.empty();
    return m;
}

Vec primitive(const Vec& v) {
    long g = vec_gcd(v);
    Vec out = v;
    if (g > 1)
        for (long& x : out) x /= g;
    return out;
}

Vec fermion_dual(const RepSpec& spec, const Vec& v) {
    long total = std::accumulate(v.begin(), v.end(), 0L);
    int d = spec.n();
    Vec out(d);
    for (int i = 0; i < d; ++i) out[i] = total - spec.r * v[d - 1 - i];
    return primitive(out);
}

}  // namespace mcone

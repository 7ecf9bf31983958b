// mcone run|member|table
#include "mcone/isotropy.hpp"
#include "mcone/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mcone;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

void write_to(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

void parse_stages(const std::string& s, RunConfig& cfg) {
    auto dash = s.find('-');
    if (dash == std::string::npos) {
        cfg.first_stage = 1;
        cfg.last_stage = std::stoi(s);
    } else {
        cfg.first_stage = std::stoi(s.substr(0, dash));
        cfg.last_stage = std::stoi(s.substr(dash + 1));
    }
}

void parse_filters(const std::string& s, RunConfig& cfg) {
    std::stringstream in(s);
    std::string f;
    while (std::getline(in, f, ',')) {
        if (f == "bkr") cfg.bkr = true;
        else if (f == "grobner") cfg.grobner = true;
        else if (f == "lin-tri") cfg.lin_tri = true;
        else if (!f.empty()) throw CLI::ValidationError("--filters", "unknown filter " + f);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal inequalities of Kronecker, fermionic and bosonic moment cones"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "compute the inequalities");
    std::vector<std::string> spec_words;
    std::string stages = "5", filters, symbolic = "on-reject", checkpoint, format = "json", output, report;
    std::string grobner_mode = "random";
    uint64_t seed = 1;
    long budget_ms = -1;
    int jobs = 1;
    if (const char* env = std::getenv("MCONE_JOBS")) jobs = std::max(1, std::atoi(env));
    bool no_symmetry = false, allow_degenerate = false;
    run_cmd->add_option("spec", spec_words, "kron d1 .. ds | fermion d r | boson d r")->required();
    run_cmd->add_option("--stages", stages, "last stage N, or a range A-B (A > 1 resumes from --checkpoint)");
    run_cmd->add_option("--filters", filters, "comma separated subset of bkr,grobner,lin-tri");
    run_cmd->add_option("--seed", seed, "root seed");
    run_cmd->add_option("--budget-ms", budget_ms, "Groebner budget per pair (default 1000 random, 5000 generic)");
    run_cmd->add_option("--grobner-mode", grobner_mode, "random or generic")->check(CLI::IsMember({"random", "generic"}));
    run_cmd->add_option("--jobs", jobs, "worker threads (default $MCONE_JOBS or 1)");
    run_cmd->add_flag("--no-symmetry", no_symmetry, "do not identify permuted equal blocks");
    run_cmd->add_option("--symbolic", symbolic, "symbolic rank in step 4")
        ->check(CLI::IsMember({"never", "on-reject", "always"}));
    run_cmd->add_option("--checkpoint", checkpoint, "checkpoint directory");
    run_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_option("--output", output, "inequality file (default stdout)");
    run_cmd->add_option("--report", report, "write counts and timings as JSON");
    run_cmd->add_flag("--allow-degenerate", allow_degenerate, "continue when the cone has empty interior");

    auto* member_cmd = app.add_subcommand("member", "test a highest weight against an inequality file");
    std::string file;
    std::vector<std::string> lambda_words;
    member_cmd->add_option("file", file, "output of run --format json")->required();
    member_cmd->add_option("lambda", lambda_words, "entries, blocks may be separated by |")->required();

    auto* table_cmd = app.add_subcommand("table", "tabulate run reports");
    std::vector<std::string> reports;
    table_cmd->add_option("reports", reports, "files written by run --report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            RunConfig cfg;
            std::string text;
            for (const auto& w : spec_words) text += w + " ";
            cfg.spec = RepSpec::parse(text);
            parse_stages(stages, cfg);
            parse_filters(filters, cfg);
            cfg.seed = seed;
            cfg.grobner_mode = grobner_mode == "generic" ? GrobnerMode::Generic : GrobnerMode::Random;
            cfg.grobner_budget_s = budget_ms >= 0 ? budget_ms / 1000.0 : (cfg.grobner_mode == GrobnerMode::Generic ? 5.0 : 1.0);
            cfg.jobs = jobs;
            cfg.symmetry = !no_symmetry;
            cfg.symbolic = symbolic == "never"    ? SymbolicPolicy::Never
                           : symbolic == "always" ? SymbolicPolicy::Always
                                                  : SymbolicPolicy::OnReject;
            cfg.checkpoint_dir = checkpoint;
            cfg.allow_degenerate = allow_degenerate;
            auto rep = run(cfg);
            write_to(output, format == "json" ? records_jsonl(rep, cfg) : facets_text(rep));
            if (!report.empty()) write_to(report, report_json(rep, cfg).dump(2) + "\n");
            std::cerr << human_summary(rep);
        } else if (*member_cmd) {
            auto f = parse_inequality_file(slurp(file));
            std::string text;
            for (const auto& w : lambda_words) text += w + " ";
            auto m = membership(f, parse_lambda(text));
            json j = {{"member", m.member}, {"violated", m.violated}};
            if (f.degenerate) j["note"] = "cone with empty interior: linear equations are not checked";
            std::cout << j.dump() << "\n";
        } else if (*table_cmd) {
            std::vector<json> js;
            for (const auto& r : reports) js.push_back(json::parse(slurp(r)));
            std::cout << emit_table(js);
        }
    } catch (const DegenerateCone& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeedDisagreement& e) {
        std::cerr << "error: internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

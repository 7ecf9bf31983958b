// Steps 0-5 with optional filters, checkpoints, output records and
// membership queries.
#pragma once

#include "mcone/core.hpp"
#include "mcone/dominance.hpp"
#include "mcone/grobner.hpp"
#include "mcone/tau_filter.hpp"
#include "mcone/tau_search.hpp"
#include "mcone/weyl_search.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcone {

using json = nlohmann::json;

struct RunConfig {
    RepSpec spec;
    int first_stage = 1;  // > 1 needs a checkpoint of the previous stage
    int last_stage = 5;
    bool bkr = false;
    bool grobner = false;
    bool lin_tri = false;
    uint64_t seed = 1;
    double grobner_budget_s = 1.0;
    GrobnerMode grobner_mode = GrobnerMode::Random;
    int jobs = 1;
    bool symmetry = true;
    SymbolicPolicy symbolic = SymbolicPolicy::OnReject;
    std::string checkpoint_dir;
    bool allow_degenerate = false;
};

struct InequalityRecord {
    Vec tau;
    BlockPerm w;
    std::vector<Root> phi;
    Vec ineq;  // w tau
    std::vector<std::string> provenance;
    bool operator==(const InequalityRecord&) const = default;
};

struct StageReport {
    int stage = 0;
    long count = 0;
    double seconds = 0;
};

struct FilterStats {
    long lin_tri_tested = 0, lin_tri_selected = 0;
    long bkr_tested = 0, bkr_eliminated = 0, bkr_skipped = 0;
    long grobner_tested = 0, grobner_birational = 0, grobner_rejected = 0, grobner_inconclusive = 0;
    long step5_tested = 0, boundary_rejected = 0, ramification_rejected = 0;
};

struct RunReport {
    RepSpec spec;
    int pid = 0;
    bool c0 = true;
    int base_pid = -1;
    std::vector<StageReport> stages;
    Step1Stats step1;
    Step2Stats step2;
    FilterStats filters;
    std::vector<Vec> taus;               // after the last stage <= 2 run
    std::vector<CandidatePair> pairs;    // after the last stage in 3..4 run
    std::vector<InequalityRecord> inequalities;
    std::vector<Vec> dominancy;
    double seconds = 0;
};

// (C0) fails and the run was not allowed to continue.
struct DegenerateCone : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckpointMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunReport run(const RunConfig& cfg);

// Deterministic per-candidate seed.
uint64_t derive_seed(uint64_t root, int stage, const Vec& tau, const BlockPerm& w = {});

// Output file: one JSON object per line (records, dominancy, then a summary
// of counts); byte-identical for identical configurations.
std::string records_jsonl(const RunReport& rep, const RunConfig& cfg);
// Coefficient vectors, one per line, dominancy after a comment line.
std::string facets_text(const RunReport& rep);
// Counts, timings and filter statistics.
json report_json(const RunReport& rep, const RunConfig& cfg);
std::string human_summary(const RunReport& rep);

// Rows "spec | step counts (seconds)", grouped by spec.
std::string emit_table(const std::vector<json>& reports);

// Parsed output file.
struct InequalityFile {
    RepSpec spec;
    bool symmetry = true;
    bool degenerate = false;
    std::vector<Vec> inequalities;
    std::vector<Vec> dominancy;
};
InequalityFile parse_inequality_file(const std::string& text);

// Orbit closure under permutations of equal-size blocks, one vector per
// class modulo central shifts.
std::vector<Vec> expand_symmetry(const RepSpec& spec, const std::vector<Vec>& ineqs);

struct Membership {
    bool member = false;
    std::vector<Vec> violated;  // inequalities and dominancy with <v,lambda> > 0
};
// lambda may be rational (it is scaled to integers). Throws
// std::invalid_argument on a wrong length or unequal block degrees.
Membership membership(const InequalityFile& file, const std::vector<Rat>& lambda);
std::vector<Rat> parse_lambda(const std::string& text);

// tau -> (|tau| - r tau_{d+1-i})_i on fermion inequality vectors, primitive.
Vec fermion_dual(const RepSpec& spec, const Vec& v);
// Primitive representative up to positive scaling.
Vec primitive(const Vec& v);

json to_json(const CandidatePair& p);
CandidatePair pair_from_json(const json& j);
json to_json(const InequalityRecord& r);
InequalityRecord record_from_json(const json& j);

}  // namespace mcone

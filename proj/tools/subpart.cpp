#include "subpart/analyze.hpp"
#include "subpart/construct.hpp"
#include "subpart/error.hpp"
#include "subpart/hstats.hpp"
#include "subpart/io.hpp"
#include "subpart/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>

using namespace subpart;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kValidation = 3, kAssertion = 4, kBudget = 5 };

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::IoError:
        case ErrorCode::ParseError: return kIo;
        case ErrorCode::BudgetExceeded: return kBudget;
        default: return kUsage;
    }
}

std::uint64_t budget_from_env() {
    if (const char* v = std::getenv("SUBPART_BUDGET")) {
        try {
            return std::stoull(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string("SUBPART_BUDGET is not a number: ") + v);
        }
    }
    return 0;
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
    bool json = false;
    unsigned threads = 1;
};

struct RefineArgs {
    std::string base;
    std::string with;
    std::size_t member = 0;
};

SubspacePartition build(const std::string& kind, int n, int q, int t, int d, const RefineArgs& r) {
    if (kind == "refine") {
        if (r.base.empty() || r.with.empty()) throw Error(ErrorCode::BadRange, "refine needs --in and --with");
        const auto base = read_partition_file(r.base);
        if (r.member >= base.size()) throw Error(ErrorCode::BadRange, "--member is past the last member");
        return refine(base, r.member, read_partition_file(r.with));
    }
    if (kind == "beutelspacher") {
        if (d == 0) throw Error(ErrorCode::BadRange, "beutelspacher needs --d");
        return beutelspacher(n, d, q);
    }
    if (t == 0) throw Error(ErrorCode::BadRange, kind + " needs --t");
    return kind == "spread" ? spread(n, t, q) : minimal_partition(n, t, q);
}

int run_construct(const std::string& kind, int n, int q, int t, int d, const RefineArgs& refine_args,
                  const std::string& out, bool json_out) {
    const auto p = build(kind, n, q, t, d, refine_args);
    const auto report = validate(p);
    if (out.empty() || out == "-") {
        std::cout << write_partition(p, json_out ? Format::Json : Format::Text);
    } else {
        write_partition_file(out, p, json_out ? Format::Json : Format::Text);
        std::cerr << "wrote " << report.type.to_string() << " (" << report.size << " members) to " << out << "\n";
    }
    return report.valid ? kOk : kValidation;
}

int run_verify(const std::string& file, bool all, const Common& c) {
    const auto p = read_partition_file(file);
    const auto v = validate(p);
    nlohmann::json j;
    j["validate"] = to_json(v);
    bool ok = v.valid;
    if (!v.valid) {
        if (c.json) {
            print(j);
        } else {
            std::cout << "INVALID partition\n";
            for (const auto& f : v.failures) std::cout << "  " << f.describe() << "\n";
        }
        return kValidation;
    }
    const int n = p.ambient_dim();
    const int q = p.field().q();
    const bool packing = check_packing(v.type, n, q);
    const bool dimension = check_dimension(v.type, n);
    const auto size_id = verify_size_identity(p);
    const auto hl = verify_heden_lehmann(p);
    ok = ok && packing && dimension && size_id.passed() && hl.passed();
    j["packing"] = packing;
    j["dimension"] = dimension;
    j["size_identity"] = to_json(size_id);
    j["heden_lehmann"] = to_json(hl);

    nlohmann::json cuts = nlohmann::json::array();
    std::vector<std::string> cut_lines;
    const auto dims = v.type.dims();
    for (std::size_t i = 1; i < dims.size(); ++i) {
        std::string status = "ok";
        try {
            const auto cs = c_values(p, dims[i]);
            std::map<std::string, std::size_t> hist;
            for (const auto& x : cs) ++hist[x.str()];
            cuts.push_back({{"cut", dims[i]}, {"c_histogram", hist}, {"ok", true}});
        } catch (const Error& e) {
            ok = false;
            status = e.what();
            cuts.push_back({{"cut", dims[i]}, {"ok", false}, {"error", e.what()}});
        }
        cut_lines.push_back("c_H at cut " + std::to_string(dims[i]) + ": " + status);
    }
    j["c_values"] = cuts;

    std::vector<MomentReport> moments;
    if (all) {
        for (int d : dims) moments.push_back(verify_moment_identities(p, d));
        nlohmann::json mj = nlohmann::json::array();
        for (const auto& m : moments) {
            ok = ok && m.passed();
            mj.push_back(to_json(m));
        }
        j["moments"] = mj;
    }
    j["passed"] = ok;

    if (c.json) {
        print(j);
    } else {
        auto line = [](bool pass, const std::string& s) { std::cout << (pass ? "PASS " : "FAIL ") << s << "\n"; };
        std::cout << "partition of V(" << n << "," << q << "), type " << v.type.to_string() << ", " << v.size << " members\n";
        line(true, "exact cover of all points");
        line(packing, "packing identity");
        line(dimension, "dimension condition");
        line(size_id.passed(), "size identity on " + std::to_string(size_id.hyperplanes_checked) + " hyperplanes");
        line(hl.incidence_paths_agree, "full scan and dual scan agree");
        if (!hl.hypothesis_met) std::cout << "NOTE fewer than two members with dimension in [1, n-2]\n";
        for (const auto& ch : hl.checks) line(ch.holds(), ch.name + ": " + ch.lhs.str() + " = " + ch.rhs.str());
        for (const auto& s : cut_lines) line(s.ends_with(": ok"), s);
        for (const auto& m : moments) {
            for (const auto* ch : {&m.x, &m.y, &m.z}) {
                line(ch->holds(), "dim " + std::to_string(m.family_dim) + " " + ch->name + ": " + ch->lhs.str() + " = " + ch->rhs.str());
            }
        }
    }
    return ok ? kOk : kAssertion;
}

int run_analyze(const std::string& file, int cut, const std::string& mode_s, const Common& c) {
    const auto p = read_partition_file(file);
    const auto v = validate(p);
    if (!v.valid) {
        std::cerr << "invalid partition: " << (v.failures.empty() ? "" : v.failures.front().describe()) << "\n";
        return kValidation;
    }
    const CheckMode mode = mode_s == "explore" ? CheckMode::Explore : CheckMode::Assert;
    const auto bound = supertail_bound_check(p, cut);
    const auto report = theorem15_check(p, cut, mode);
    nlohmann::json j = {{"type", to_json(v.type)}, {"bound", to_json(bound)}, {"supertail", to_json(report)}};
    std::vector<std::string> notes;
    bool ok = report.passed();
    try {
        const auto l = lemma31_check(p, cut);
        j["lemma31"] = to_json(l);
        if (!l.holds && mode == CheckMode::Assert) ok = false;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisNotMet) throw;
        notes.push_back(std::string("dimension gap lemma: ") + e.what());
    }
    try {
        const auto cr = corollary16_check(p, cut);
        j["corollary16"] = to_json(cr);
        if (!cr.holds && mode == CheckMode::Assert) ok = false;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisNotMet) throw;
        notes.push_back(std::string("nested supertail bound: ") + e.what());
    }
    j["notes"] = notes;
    j["passed"] = ok;
    if (c.json) {
        print(j);
    } else {
        std::cout << "type " << v.type.to_string() << "\n" << to_text(report);
        if (j.contains("corollary16")) {
            const auto& cr = j["corollary16"];
            std::cout << (cr["holds"].get<bool>() ? "PASS" : "FAIL") << " nested bound (branch " << cr["branch"].get<std::string>()
                      << "): |ST^| = " << cr["extended_size"] << " >= " << cr["bound"] << "\n";
            for (const auto& f : cr["findings"]) std::cout << "NOTE " << f.get<std::string>() << "\n";
        }
        for (const auto& s : notes) std::cout << "NOTE " << s << "\n";
    }
    return ok ? kOk : kAssertion;
}

int run_sigma(int n, int t, int q, bool oracle, std::uint64_t budget, const Common& c) {
    const auto value = sigma(n, t, q);
    nlohmann::json j = {{"n", n}, {"t", t}, {"q", q}, {"sigma", value.str()}};
    bool agree = true;
    if (oracle) {
        SearchOptions o;
        o.node_budget = budget;
        const auto r = min_partition_size(n, t, q, o);
        agree = BigInt(r.size) == value;
        j["oracle"] = r.size;
        j["nodes"] = r.stats.nodes;
        j["agree"] = agree;
        j["witness_type"] = r.witness.type().to_string();
    }
    if (c.json) {
        print(j);
    } else {
        std::cout << value.str() << "\n";
        if (oracle) {
            std::cout << "oracle " << j["oracle"] << " (" << j["nodes"] << " nodes, witness " << j["witness_type"].get<std::string>()
                      << "): " << (agree ? "agree" : "DISAGREE") << "\n";
        }
    }
    return agree ? kOk : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify and analyze subspace partitions of V(n,q)."};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "Emit machine-readable JSON");
    app.add_option("--threads", common.threads, "Worker threads for scans and searches")->check(CLI::Range(1u, 256u));

    int n = 0, q = 2, t = 0, d = 0, cut = 0, max_dim = 0, cut_lo = 1, cut_hi = 0;
    std::string file, out, mode = "assert", checkpoint, type_s;
    bool all = false, oracle = false, resume = false, emit = false;
    std::uint64_t budget = 0, count_limit = 0;

    auto* construct = app.add_subcommand("construct", "Build a partition and write it to a file");
    std::string kind;
    RefineArgs refine_args;
    construct->add_option("kind", kind, "spread | beutelspacher | minimal | refine")
        ->required()
        ->check(CLI::IsMember({"spread", "beutelspacher", "minimal", "refine"}));
    construct->add_option("--n", n, "Ambient dimension (not used by refine)");
    construct->add_option("--q", q);
    construct->add_option("--t", t, "Member dimension (spread) or largest dimension (minimal)");
    construct->add_option("--d", d, "Dimension of the small members (beutelspacher)");
    construct->add_option("--out", out, "Output file, - for stdout");
    construct->add_option("--in", refine_args.base, "refine: partition whose member is replaced");
    construct->add_option("--member", refine_args.member, "refine: index of the member to replace");
    construct->add_option("--with", refine_args.with, "refine: partition of that member, in its basis coordinates");

    auto* verify = app.add_subcommand("verify", "Validate a partition and check the counting identities");
    verify->add_option("file", file)->required();
    verify->add_flag("--all-identities", all, "Also check the moment identities for every dimension");

    auto* analyze = app.add_subcommand("analyze", "Supertail analysis at a cut");
    analyze->add_option("file", file)->required();
    analyze->add_option("--cut", cut)->required();
    analyze->add_option("--mode", mode)->check(CLI::IsMember({"assert", "explore"}));

    auto* sig = app.add_subcommand("sigma", "Minimum partition size with largest dimension t");
    sig->add_option("--n", n)->required();
    sig->add_option("--t", t)->required();
    sig->add_option("--q", q);
    sig->add_flag("--oracle", oracle, "Also compute the value by exhaustive search");
    sig->add_option("--budget", budget, "Node budget (default: SUBPART_BUDGET or unlimited)");

    auto* search = app.add_subcommand("search", "Exhaustive exact-cover searches");
    std::string what;
    search->add_option("what", what, "partitions | conjecture")->required()->check(CLI::IsMember({"partitions", "conjecture"}));
    search->add_option("--n", n)->required();
    search->add_option("--q", q);
    search->add_option("--max-dim", max_dim, "Largest member dimension (default n-1)");
    search->add_option("--budget", budget, "Node budget (default: SUBPART_BUDGET or unlimited)");
    search->add_option("--checkpoint", checkpoint, "Checkpoint file written when the budget runs out");
    search->add_flag("--resume", resume, "Continue from --checkpoint");
    search->add_option("--type", type_s, "Only partitions of this type, e.g. [2^5]");
    search->add_option("--count-limit", count_limit, "Stop after this many partitions");
    search->add_flag("--emit", emit, "Print every partition found");
    search->add_option("--cut-lo", cut_lo, "Smallest cut examined (conjecture)");
    search->add_option("--cut-hi", cut_hi, "Largest cut examined (conjecture, default n)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget == 0) budget = budget_from_env();
        if (*construct) {
            return run_construct(kind, n, q, t, d, refine_args, out, common.json);
        }
        if (*verify) return run_verify(file, all, common);
        if (*analyze) return run_analyze(file, cut, mode, common);
        if (*sig) return run_sigma(n, t, q, oracle, budget, common);
        if (*search) {
            SearchOptions o;
            o.max_dim = max_dim;
            o.node_budget = budget;
            o.threads = common.threads;
            o.checkpoint_path = checkpoint;
            if (resume) {
                if (checkpoint.empty()) throw Error(ErrorCode::BadRange, "--resume needs --checkpoint");
                if (std::filesystem::exists(checkpoint)) o.resume_path = checkpoint;
            }
            if (!type_s.empty()) o.type_filter = parse_type(type_s);
            if (count_limit) o.count_limit = count_limit;
            if (what == "conjecture") {
                const auto rep = conjecture_search(n, q, cut_lo, cut_hi == 0 ? n : cut_hi, o);
                if (common.json) {
                    print(to_json(rep));
                } else {
                    std::cout << to_text(rep);
                }
                return rep.asserted_failures == 0 ? kOk : kAssertion;
            }
            std::map<std::string, std::uint64_t> types;
            std::uint64_t invalid = 0;
            std::uint64_t this_run = 0;
            SearchStats stats;
            std::string stop;
            try {
                stats = enumerate_partitions(n, q, o, [&](const SubspacePartition& p) {
                    const auto v = validate(p);
                    if (!v.valid) ++invalid;
                    ++types[v.type.to_string()];
                    ++this_run;
                    if (emit) std::cout << write_partition(p) << "\n";
                    return true;
                });
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BudgetExceeded) throw;
                stop = e.what();
            }
            if (common.json) {
                print({{"n", n}, {"q", q}, {"partitions_this_run", this_run}, {"partitions_total", stats.emitted},
                       {"nodes", stats.nodes}, {"complete", stats.complete}, {"types", types}, {"invalid", invalid},
                       {"stopped", stop}});
            } else {
                std::cout << "partitions " << this_run;
                if (stop.empty()) {
                    std::cout << " (" << stats.emitted << " in total, " << stats.nodes << " nodes, "
                              << (stats.complete ? "complete" : "stopped early") << ")\n";
                } else {
                    std::cout << " before stopping: " << stop << "\n";
                }
                for (const auto& [ty, k] : types) std::cout << "  " << ty << " " << k << "\n";
            }
            if (invalid != 0) return kValidation;
            return stop.empty() ? kOk : kBudget;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    }
    return kUsage;
}

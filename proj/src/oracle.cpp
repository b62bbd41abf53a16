#include "subpart/oracle.hpp"

#include "subpart/enumerate.hpp"
#include "subpart/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace subpart {

namespace {

using Mask = unsigned __int128;

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();
constexpr const char* kCheckpointMagic = "subpart-checkpoint";
constexpr int kCheckpointVersion = 1;

int first_zero(Mask m) {
    const auto lo = static_cast<std::uint64_t>(m);
    if (~lo != 0) return std::countr_one(lo);
    return 64 + std::countr_one(static_cast<std::uint64_t>(m >> 64));
}

struct Candidate {
    Mask mask = 0;
    int dim = 0;
    std::size_t subspace = 0;
};

struct Frame {
    std::uint32_t point = 0;
    std::uint32_t pos = 0;  // next position to try in the point's candidate list
    bool applied = false;   // candidate at pos - 1 is currently applied
};

std::string describe_options(int n, int q, int max_dim, const SearchOptions& o) {
    std::ostringstream s;
    s << "n " << n << "\nq " << q << "\nmax_dim " << max_dim << "\ntype_filter "
      << (o.type_filter ? o.type_filter->to_string() : "none") << "\nsize_limit "
      << (o.size_limit ? std::to_string(*o.size_limit) : "none") << "\nbelow_cut "
      << (o.below_cut ? std::to_string(o.below_cut->cut) + " " + std::to_string(o.below_cut->limit) : "none")
      << "\ncanonical_seed " << (o.canonical_seed ? 1 : 0) << "\n";
    return s.str();
}

/// Shared, immutable search data: points, candidates and their order.
struct Universe {
    Field field;
    int n;
    int max_dim;
    std::size_t point_count;
    Mask full = 0;
    std::vector<Subspace> subspaces;
    std::vector<Candidate> candidates;
    std::vector<std::vector<std::uint32_t>> by_point;  // candidates whose least point is p
    std::vector<bool> root_canonical;                  // position in by_point[0] kept under canonical seeding

    Universe(int n_, int q, const SearchOptions& o) : field(make_field(q)), n(n_) {
        if (n < 1) throw Error(ErrorCode::BadRange, "n must be positive");
        max_dim = o.max_dim == 0 ? std::max(1, n - 1) : o.max_dim;
        if (max_dim < 1 || max_dim > n) throw Error(ErrorCode::BadRange, "max_dim must lie in [1, n]");
        const auto pts = theta_u64(n, q);
        if (pts > o.point_budget || pts > 128) {
            throw Error(ErrorCode::BudgetExceeded,
                        "Theta_n = " + std::to_string(pts) + " exceeds the oracle point budget " +
                            std::to_string(std::min<std::uint64_t>(o.point_budget, 128)));
        }
        point_count = static_cast<std::size_t>(pts);
        full = point_count == 128 ? ~Mask(0) : ((Mask(1) << point_count) - 1);

        const PointIndex index(field, n);
        by_point.resize(point_count);
        for (int d = max_dim; d >= 1; --d) {
            if (o.type_filter && o.type_filter->count(d) == 0) continue;
            SubspaceStream stream(field, n, d);
            while (auto u = stream.next()) {
                Candidate c;
                c.dim = d;
                c.subspace = subspaces.size();
                for (auto i : index.indices(*u)) c.mask |= Mask(1) << i;
                const auto least = static_cast<std::size_t>(first_zero(~c.mask));
                by_point[least].push_back(static_cast<std::uint32_t>(candidates.size()));
                candidates.push_back(c);
                subspaces.push_back(std::move(*u));
            }
        }
        root_canonical.assign(by_point[0].size(), false);
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < by_point[0].size(); ++i) {
            const int d = candidates[by_point[0][i]].dim;
            if (!seen[static_cast<std::size_t>(d)]) root_canonical[i] = seen[static_cast<std::size_t>(d)] = true;
        }
    }
};

/// Depth-first exact cover over one Universe. Hooks decide pruning and
/// what to do with complete covers.
class Engine {
public:
    using Accept = std::function<bool(const Engine&)>;   // complete cover; false stops
    using Bound = std::function<bool(const Engine&)>;    // false prunes the node

    Engine(const Universe& u, const SearchOptions& o) : u_(u), o_(o), dim_counts_(static_cast<std::size_t>(u.n) + 1, 0) {
        if (o.type_filter) {
            type_counts_.assign(static_cast<std::size_t>(u.n) + 1, 0);
            for (const auto& e : o.type_filter->entries()) {
                if (e.dim >= 1 && e.dim <= u.n) type_counts_[static_cast<std::size_t>(e.dim)] = static_cast<std::size_t>(e.count);
            }
        }
    }

    void set_bound(Bound b) { bound_ = std::move(b); }
    void restrict_root(std::vector<std::uint32_t> positions) { root_only_ = std::move(positions); }
    void set_node_counter(std::atomic<std::uint64_t>* shared) { shared_nodes_ = shared; }

    const std::vector<std::uint32_t>& chosen() const { return chosen_; }
    std::size_t dim_count(int d) const { return dim_counts_[static_cast<std::size_t>(d)]; }
    int max_used() const {
        for (int d = u_.n; d >= 1; --d)
            if (dim_counts_[static_cast<std::size_t>(d)] > 0) return d;
        return 0;
    }
    std::size_t uncovered() const { return uncovered_; }

    SubspacePartition partition() const {
        std::vector<Subspace> members;
        members.reserve(chosen_.size());
        for (auto c : chosen_) members.push_back(u_.subspaces[u_.candidates[c].subspace]);
        return SubspacePartition(u_.field, u_.n, std::move(members));
    }

    /// Runs to completion or until `accept` returns false. Returns true when
    /// the tree was exhausted.
    bool run(const Accept& accept) {
        if (frames_.empty() && !started_) {
            started_ = true;
            uncovered_ = u_.point_count;
            frames_.push_back({0, 0, false});
        }
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t since_clock = 0;
        while (!frames_.empty()) {
            if (o_.node_budget != 0 && total_nodes() >= o_.node_budget) budget_exhausted("node budget");
            if (o_.time_limit_seconds > 0 && ++since_clock >= 4096) {
                since_clock = 0;
                const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
                if (el.count() >= o_.time_limit_seconds) budget_exhausted("time limit");
            }
            const std::size_t depth = frames_.size() - 1;
            Frame& f = frames_.back();
            const auto& list = u_.by_point[f.point];
            if (f.applied) {
                undo(list[f.pos - 1]);
                f.applied = false;
            }
            bool found = false;
            while (f.pos < list.size()) {
                const auto pos = f.pos++;
                if (depth == 0 && !root_allowed(pos)) continue;
                if (admissible(list[pos])) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                frames_.pop_back();
                continue;
            }
            const auto c = list[f.pos - 1];
            apply(c);
            f.applied = true;
            ++nodes_;
            if (shared_nodes_) shared_nodes_->fetch_add(1, std::memory_order_relaxed);
            if (uncovered_ == 0) {
                if (complete_ok()) {
                    ++emitted_;
                    if (!accept(*this)) return false;
                }
                continue;
            }
            if (bound_ && !bound_(*this)) continue;
            frames_.push_back({static_cast<std::uint32_t>(first_zero(covered_)), 0, false});
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t emitted() const { return emitted_; }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw Error(ErrorCode::IoError, "cannot write checkpoint " + path);
        out << kCheckpointMagic << " " << kCheckpointVersion << "\n"
            << describe_options(u_.n, u_.field.q(), u_.max_dim, o_) << "nodes " << nodes_ << "\nemitted " << emitted_
            << "\nframes " << frames_.size() << "\n";
        for (const auto& f : frames_) out << f.point << " " << f.pos << " " << (f.applied ? 1 : 0) << "\n";
        if (!out) throw Error(ErrorCode::IoError, "cannot write checkpoint " + path);
    }

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::IoError, "cannot read checkpoint " + path);
        std::string magic;
        int version = 0;
        in >> magic >> version;
        if (magic != kCheckpointMagic || version != kCheckpointVersion) {
            throw Error(ErrorCode::ParseError, "not a version " + std::to_string(kCheckpointVersion) + " checkpoint");
        }
        std::string line;
        std::getline(in, line);
        const auto expected = describe_options(u_.n, u_.field.q(), u_.max_dim, o_);
        std::string header;
        for (int i = 0; i < 7 && std::getline(in, line); ++i) header += line + "\n";
        if (header != expected) throw Error(ErrorCode::ParseError, "checkpoint was written with different search options");
        std::string key;
        std::size_t count = 0;
        if (!(in >> key >> nodes_) || key != "nodes" || !(in >> key >> emitted_) || key != "emitted" ||
            !(in >> key >> count) || key != "frames") {
            throw Error(ErrorCode::ParseError, "malformed checkpoint counters");
        }
        started_ = true;
        uncovered_ = u_.point_count;
        frames_.clear();
        for (std::size_t i = 0; i < count; ++i) {
            Frame f;
            int applied = 0;
            if (!(in >> f.point >> f.pos >> applied)) throw Error(ErrorCode::ParseError, "truncated checkpoint frames");
            if (f.point >= u_.point_count || f.pos > u_.by_point[f.point].size() || (applied && f.pos == 0) ||
                (covered_ >> f.point) & 1) {
                throw Error(ErrorCode::ParseError, "checkpoint frame does not fit the search tree");
            }
            f.applied = applied != 0;
            if (f.applied) {
                const auto c = u_.by_point[f.point][f.pos - 1];
                if (u_.candidates[c].mask & covered_) throw Error(ErrorCode::ParseError, "checkpoint frames overlap");
                apply(c);
            }
            frames_.push_back(f);
        }
    }

private:
    bool root_allowed(std::uint32_t pos) const {
        if (o_.canonical_seed && !u_.root_canonical[pos]) return false;
        if (root_only_ && !std::binary_search(root_only_->begin(), root_only_->end(), pos)) return false;
        return true;
    }

    bool admissible(std::uint32_t c) const {
        const auto& cand = u_.candidates[c];
        if (cand.mask & covered_) return false;
        const auto d = static_cast<std::size_t>(cand.dim);
        if (!type_counts_.empty() && dim_counts_[d] >= type_counts_[d]) return false;
        if (o_.size_limit && chosen_.size() + 1 > *o_.size_limit) return false;
        if (o_.below_cut && cand.dim < o_.below_cut->cut && below_ + 1 > o_.below_cut->limit) return false;
        return true;
    }

    bool complete_ok() const {
        if (!type_counts_.empty()) {
            for (std::size_t d = 0; d < type_counts_.size(); ++d)
                if (dim_counts_[d] != type_counts_[d]) return false;
        }
        return true;
    }

    void apply(std::uint32_t c) {
        const auto& cand = u_.candidates[c];
        covered_ |= cand.mask;
        uncovered_ -= static_cast<std::size_t>(theta_u64(cand.dim, u_.field.q()));
        ++dim_counts_[static_cast<std::size_t>(cand.dim)];
        if (o_.below_cut && cand.dim < o_.below_cut->cut) ++below_;
        chosen_.push_back(c);
    }

    void undo(std::uint32_t c) {
        const auto& cand = u_.candidates[c];
        covered_ &= ~cand.mask;
        uncovered_ += static_cast<std::size_t>(theta_u64(cand.dim, u_.field.q()));
        --dim_counts_[static_cast<std::size_t>(cand.dim)];
        if (o_.below_cut && cand.dim < o_.below_cut->cut) --below_;
        chosen_.pop_back();
    }

    std::uint64_t total_nodes() const { return shared_nodes_ ? shared_nodes_->load(std::memory_order_relaxed) : nodes_; }

    [[noreturn]] void budget_exhausted(const std::string& what) const {
        std::string msg = what + " exhausted after " + std::to_string(nodes_) + " nodes";
        if (!o_.checkpoint_path.empty() && !shared_nodes_) {
            save(o_.checkpoint_path);
            msg += "; checkpoint written to " + o_.checkpoint_path;
        }
        throw Error(ErrorCode::BudgetExceeded, msg);
    }

    const Universe& u_;
    const SearchOptions& o_;
    Bound bound_;
    std::optional<std::vector<std::uint32_t>> root_only_;
    std::atomic<std::uint64_t>* shared_nodes_ = nullptr;

    bool started_ = false;
    Mask covered_ = 0;
    std::size_t uncovered_ = 0;
    std::size_t below_ = 0;
    std::vector<std::size_t> dim_counts_;
    std::vector<std::size_t> type_counts_;
    std::vector<std::uint32_t> chosen_;
    std::vector<Frame> frames_;
    std::uint64_t nodes_ = 0;
    std::uint64_t emitted_ = 0;
};

SearchStats enumerate_parallel(const Universe& u, const SearchOptions& o, const PartitionSink& sink) {
    if (!o.checkpoint_path.empty() || !o.resume_path.empty()) {
        throw Error(ErrorCode::Unsupported, "checkpoints require a single-threaded search");
    }
    std::vector<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < u.by_point[0].size(); ++i) {
        if (!o.canonical_seed || u.root_canonical[i]) roots.push_back(i);
    }
    const std::size_t workers = std::min<std::size_t>(o.threads, std::max<std::size_t>(1, roots.size()));
    std::vector<std::vector<SubspacePartition>> found(roots.size());
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto work = [&] {
        try {
            for (std::size_t r = next++; r < roots.size(); r = next++) {
                Engine e(u, o);
                e.set_node_counter(&nodes);
                e.restrict_root({roots[r]});
                e.run([&](const Engine& eng) {
                    found[r].push_back(eng.partition());
                    return !o.count_limit || found[r].size() < *o.count_limit;
                });
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = roots.size();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    SearchStats stats;
    stats.nodes = nodes.load();
    stats.complete = true;
    for (auto& bucket : found) {
        for (auto& p : bucket) {
            if (o.count_limit && stats.emitted >= *o.count_limit) {
                stats.complete = false;
                return stats;
            }
            ++stats.emitted;
            if (!sink(p)) {
                stats.complete = false;
                return stats;
            }
        }
    }
    return stats;
}

}  // namespace

SearchStats enumerate_partitions(int n, int q, const SearchOptions& options, const PartitionSink& sink) {
    const Universe u(n, q, options);
    if (options.count_limit && *options.count_limit == 0) return {0, 0, false};
    if (options.threads > 1) return enumerate_parallel(u, options, sink);

    Engine e(u, options);
    if (!options.resume_path.empty()) e.load(options.resume_path);
    bool stopped = false;
    const bool done = e.run([&](const Engine& eng) {
        if (!sink(eng.partition()) || (options.count_limit && eng.emitted() >= *options.count_limit)) {
            stopped = true;
            return false;
        }
        return true;
    });
    return {e.nodes(), e.emitted(), done && !stopped};
}

std::vector<SubspacePartition> collect_partitions(int n, int q, const SearchOptions& options) {
    std::vector<SubspacePartition> out;
    enumerate_partitions(n, q, options, [&](const SubspacePartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

MinSizeResult min_partition_size(int n, int t, int q, const SearchOptions& options) {
    if (t < 1 || t >= n) throw Error(ErrorCode::BadRange, "min_partition_size needs 1 <= t < n");
    SearchOptions o = options;
    o.max_dim = t;
    o.canonical_seed = true;
    o.type_filter.reset();
    o.count_limit.reset();
    const Universe u(n, q, o);

    // fewest[cap][r]: fewest subspaces of dimension <= cap with r points in total.
    const std::size_t inf = kNoLimit / 2;
    std::vector<std::vector<std::size_t>> fewest(static_cast<std::size_t>(t) + 1);
    for (int cap = 1; cap <= t; ++cap) {
        auto& row = fewest[static_cast<std::size_t>(cap)];
        row.assign(u.point_count + 1, inf);
        row[0] = 0;
        for (std::size_t r = 1; r <= u.point_count; ++r) {
            for (int j = 1; j <= cap; ++j) {
                const auto th = static_cast<std::size_t>(theta_u64(j, q));
                if (th <= r && row[r - th] + 1 < row[r]) row[r] = row[r - th] + 1;
            }
        }
    }
    const auto theta_t = static_cast<std::size_t>(theta_u64(t, q));
    auto lower_bound = [&](const Engine& e) -> std::size_t {
        const bool has_top = e.dim_count(t) > 0;
        const int cap = std::min(t, n - std::max(e.max_used(), t));
        std::size_t r = e.uncovered();
        std::size_t extra = 0;
        if (!has_top) {
            if (r < theta_t) return inf;
            r -= theta_t;
            extra = 1;
        }
        if (r == 0) return extra;
        if (cap < 1) return inf;
        return extra + fewest[static_cast<std::size_t>(cap)][r];
    };

    std::size_t best = kNoLimit;
    std::optional<SubspacePartition> witness;
    Engine e(u, o);
    if (!o.resume_path.empty()) throw Error(ErrorCode::Unsupported, "minimum-size searches are not resumable");
    e.set_bound([&](const Engine& eng) { return eng.chosen().size() + lower_bound(eng) < best; });
    e.run([&](const Engine& eng) {
        if (eng.dim_count(t) > 0 && eng.chosen().size() < best) {
            best = eng.chosen().size();
            witness = eng.partition();
        }
        return true;
    });
    if (!witness) throw Error(ErrorCode::HypothesisNotMet, "no partition with largest dimension t exists");
    return {best, std::move(*witness), {e.nodes(), e.emitted(), true}};
}

ConjectureReport conjecture_search(int n, int q, int cut_lo, int cut_hi, const SearchOptions& options) {
    ConjectureReport rep;
    rep.n = n;
    rep.q = q;
    rep.cut_lo = cut_lo;
    rep.cut_hi = cut_hi;
    if (cut_lo > cut_hi) return rep;

    SearchOptions o = options;
    if (o.max_dim == 0) o.max_dim = std::max(1, n - 1);
    rep.stats = enumerate_partitions(n, q, o, [&](const SubspacePartition& p) {
        ++rep.partitions;
        const auto type = p.type();
        const auto dims = type.dims();
        for (std::size_t i = 1; i < dims.size(); ++i) {
            const int cut = dims[i];
            if (cut < cut_lo || cut > cut_hi) continue;
            ++rep.cuts_examined;
            const auto st = supertail(p, cut, CutMode::Occurring);
            const int t = st.below;
            if (BigInt(st.members.size()) != sigma(cut, t, q) || cut >= 2 * t) continue;
            ++rep.minimum_gap_cuts;
            const auto report = theorem15_check(p, cut, CheckMode::Assert);
            if (report.hypotheses_met) {
                ++rep.proved_cases;
                if (!report.passed()) {
                    ++rep.asserted_failures;
                    for (const auto& f : report.failures) rep.failures.push_back(type.to_string() + " cut " + std::to_string(cut) + ": " + f);
                }
            } else {
                ++rep.open_cases;
                ConjectureFinding f;
                f.type = type;
                f.cut = cut;
                f.classification = report.structure.classification;
                if (report.structure.subspace) f.union_dim = report.structure.subspace->dim();
                f.note = report.structure.subspace ? "union is a subspace" : "union is not a subspace: counterexample candidate";
                rep.findings.push_back(std::move(f));
            }
        }
        return true;
    });
    rep.open_regime_reached = rep.open_cases > 0;
    return rep;
}

}  // namespace subpart

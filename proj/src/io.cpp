#include "subpart/io.hpp"

#include "subpart/error.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace subpart {

using nlohmann::json;

namespace {

std::string big(const BigInt& v) { return v.str(); }

// Counts fit JSON integers while small; larger ones are written as strings.
json number(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
    if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) return static_cast<std::int64_t>(v);
    return v.str();
}

json vec(std::span<const Element> v) {
    json a = json::array();
    for (auto x : v) a.push_back(static_cast<int>(x));
    return a;
}

SubspacePartition build(int version, int p, int e, int q, const std::vector<int>& modulus, int n,
                        const std::vector<std::vector<std::vector<int>>>& members) {
    if (version != 1) throw Error(ErrorCode::ParseError, "unsupported partition document version " + std::to_string(version));
    Field f = make_field(q);
    if (f.p() != p || f.e() != e) throw Error(ErrorCode::ParseError, "p and e do not match q");
    if (!modulus.empty() && modulus != f.modulus()) {
        throw Error(ErrorCode::Unsupported, "field modulus differs from the built-in representation of GF(" + std::to_string(q) + ")");
    }
    if (n < 1) throw Error(ErrorCode::ParseError, "n must be positive");
    std::vector<Subspace> subs;
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<Element> rows;
        for (const auto& r : members[i]) {
            if (static_cast<int>(r.size()) != n) {
                throw Error(ErrorCode::ParseError, "member " + std::to_string(i) + " has a row of length " + std::to_string(r.size()));
            }
            for (int x : r) {
                if (x < 0 || x >= q) throw Error(ErrorCode::ParseError, "element code " + std::to_string(x) + " out of range");
                rows.push_back(static_cast<Element>(x));
            }
        }
        auto s = Subspace::from_rows(f, n, rows);
        if (s.dim() != static_cast<int>(members[i].size())) {
            throw Error(ErrorCode::ParseError, "member " + std::to_string(i) + " has dependent basis rows");
        }
        subs.push_back(std::move(s));
    }
    return SubspacePartition(f, n, std::move(subs));
}

SubspacePartition read_text(std::string_view doc) {
    std::istringstream in{std::string(doc)};
    std::string line;
    int version = -1, p = -1, e = -1, q = -1, n = -1;
    std::vector<int> modulus;
    std::vector<std::vector<std::vector<int>>> members;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        auto need_int = [&](int& out) {
            if (!(ls >> out)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected an integer after " + key);
        };
        if (key == "version") need_int(version);
        else if (key == "p") need_int(p);
        else if (key == "e") need_int(e);
        else if (key == "q") need_int(q);
        else if (key == "n") need_int(n);
        else if (key == "modulus") {
            int c;
            while (ls >> c) modulus.push_back(c);
        } else if (key == "member") {
            std::vector<std::vector<int>> rows(1);
            std::string tok;
            while (ls >> tok) {
                if (tok == "|") {
                    rows.emplace_back();
                    continue;
                }
                try {
                    std::size_t used = 0;
                    rows.back().push_back(std::stoi(tok, &used));
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
                }
            }
            if (rows.back().empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": empty basis row");
            members.push_back(std::move(rows));
        } else {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (version < 0 || q < 0 || n < 0) throw Error(ErrorCode::ParseError, "missing version, q or n header");
    if (p < 0 || e < 0) {
        const Field f = make_field(q);
        p = f.p();
        e = f.e();
    }
    return build(version, p, e, q, modulus, n, members);
}

SubspacePartition read_json(std::string_view doc) {
    try {
        const auto j = json::parse(doc);
        const int q = j.at("q").get<int>();
        const Field f = make_field(q);
        return build(j.at("version").get<int>(), j.value("p", f.p()), j.value("e", f.e()), q,
                     j.value("modulus", std::vector<int>{}), j.at("n").get<int>(),
                     j.at("members").get<std::vector<std::vector<std::vector<int>>>>());
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("partition JSON: ") + ex.what());
    }
}

}  // namespace

std::string write_partition(const SubspacePartition& p, Format format) {
    if (format == Format::Json) return to_json(p).dump(1) + "\n";
    const auto& f = p.field();
    std::ostringstream out;
    out << "version 1\np " << f.p() << "\ne " << f.e() << "\nq " << f.q() << "\nmodulus";
    for (int c : f.modulus()) out << ' ' << c;
    out << "\nn " << p.ambient_dim() << "\n";
    for (const auto& m : p.members()) {
        out << "member";
        for (int r = 0; r < m.dim(); ++r) {
            if (r) out << " |";
            for (auto x : m.row(r)) out << ' ' << static_cast<int>(x);
        }
        out << "\n";
    }
    return out.str();
}

SubspacePartition read_partition(std::string_view document) {
    const auto first = document.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && document[first] == '{') return read_json(document);
    return read_text(document);
}

SubspacePartition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_partition(buf.str());
}

void write_partition_file(const std::string& path, const SubspacePartition& p, Format format) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << write_partition(p, format);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

PartitionType parse_type(std::string_view s) {
    std::string body;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw Error(ErrorCode::ParseError, "type must look like [3^8,2^1,1^4]");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<PartitionType::Entry> entries;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto caret = item.find('^');
        try {
            if (caret == std::string::npos) {
                entries.push_back({std::stoi(item), 1});
            } else {
                entries.push_back({std::stoi(item.substr(0, caret)), BigInt(item.substr(caret + 1))});
            }
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad type entry '" + item + "'");
        }
    }
    return PartitionType(std::move(entries));
}

json to_json(const PartitionType& t) {
    json a = json::array();
    for (auto it = t.entries().rbegin(); it != t.entries().rend(); ++it) a.push_back({{"dim", it->dim}, {"count", number(it->count)}});
    return {{"text", t.to_string()}, {"entries", a}};
}

json to_json(const SubspacePartition& p) {
    json members = json::array();
    for (const auto& m : p.members()) {
        json rows = json::array();
        for (int r = 0; r < m.dim(); ++r) rows.push_back(vec(m.row(r)));
        members.push_back(rows);
    }
    const auto& f = p.field();
    return {{"version", 1}, {"p", f.p()}, {"e", f.e()}, {"q", f.q()}, {"modulus", f.modulus()}, {"n", p.ambient_dim()},
            {"members", members}};
}

json to_json(const ValidationReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(f.describe());
    return {{"valid", r.valid}, {"type", to_json(r.type)}, {"size", r.size}, {"failures", fails}};
}

static json to_json(const IdentityCheck& c) {
    return {{"name", c.name}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"holds", c.holds()}};
}

json to_json(const HedenLehmannReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"hypothesis_met", r.hypothesis_met}, {"checked_dims", r.checked_dims}, {"skipped_dims", r.skipped_dims},
            {"incidence_paths_agree", r.incidence_paths_agree}, {"checks", checks}, {"passed", r.passed()}};
}

json to_json(const SizeIdentityReport& r) {
    return {{"hyperplanes_checked", r.hyperplanes_checked}, {"violations", r.violations}, {"passed", r.passed()}};
}

json to_json(const AlphaContext& a) {
    json alpha = json::object();
    for (const auto& [i, v] : a.alpha) alpha[std::to_string(i)] = v;
    json j = {{"family_dim", a.family_dim}, {"family_size", a.family_size}, {"alpha", alpha},
              {"x", number(a.x)}, {"y", number(a.y)}, {"z", number(a.z)}, {"violations", a.violations}};
    if (a.appendix) {
        const auto& r = *a.appendix;
        j["appendix"] = {{"d", r.d}, {"t", r.t}, {"k", r.k}, {"r_d", r.r_d}, {"r_t", r.r_t}, {"ell", number(r.ell)},
                         {"delta", number(r.delta)}, {"gamma", number(r.gamma)}, {"support_in_range", r.support_in_range},
                         {"gap_empty", r.gap_empty}, {"alpha_delta_matches", r.alpha_delta_matches},
                         {"x_matches", r.x_matches}, {"y_matches", r.y_matches}};
    }
    if (a.pair) {
        const auto& r = *a.pair;
        j["pair"] = {{"t", r.t}, {"a", r.a}, {"divisibility", r.divisibility}, {"empty_forces_top", r.empty_forces_top},
                     {"alpha0_expected", number(r.alpha0_expected)}, {"alpha0_matches", r.alpha0_matches},
                     {"quadratic_lhs", number(r.quadratic_lhs)}, {"quadratic_rhs", number(r.quadratic_rhs)},
                     {"quadratic_matches", r.quadratic_matches}, {"quadratic_nonpositive", r.quadratic_nonpositive}};
    }
    return j;
}

json to_json(const MomentReport& r) {
    return {{"family_dim", r.family_dim}, {"family_size", r.family_size}, {"x", to_json(r.x)}, {"y", to_json(r.y)},
            {"z", to_json(r.z)}, {"passed", r.passed()}};
}

json to_json(const BoundReport& r) {
    return {{"cut", r.cut}, {"below", r.below}, {"supertail_size", r.supertail_size}, {"sigma_bound", number(r.sigma_bound)},
            {"slack", number(r.slack)}, {"holds", r.holds}};
}

json to_json(const SupertailReport& r) {
    json j = {{"mode", to_string(r.mode)},
              {"cut", r.cut},
              {"below", r.below},
              {"s", r.s},
              {"supertail_type", to_json(r.supertail_type)},
              {"size", r.size},
              {"sigma_bound", number(r.sigma_bound)},
              {"is_minimum", r.is_minimum},
              {"gap", r.gap},
              {"conditions", {{"i", r.cond_i}, {"ii", r.cond_ii}, {"iii", r.cond_iii}}},
              {"hypotheses_met", r.hypotheses_met},
              {"union_point_count", r.structure.union_points.size()},
              {"union_dim", r.structure.subspace ? json(r.structure.subspace->dim()) : json(nullptr)},
              {"classification", to_string(r.classification)},
              {"beta0", r.beta0 ? number(*r.beta0) : json(nullptr)},
              {"c0", r.c0 ? number(*r.c0) : json(nullptr)},
              {"checks", r.checks},
              {"failures", r.failures},
              {"findings", r.findings},
              {"passed", r.passed()}};
    if (r.alpha) j["alpha"] = to_json(*r.alpha);
    return j;
}

json to_json(const Lemma31Report& r) {
    return {{"cut", r.cut}, {"below", r.below}, {"smallest", r.smallest}, {"holds", r.holds}};
}

json to_json(const Corollary16Report& r) {
    return {{"s", r.s},
            {"cut", r.cut},
            {"next_cut", r.next_cut},
            {"branch_i_hypotheses", r.branch_i_hypotheses},
            {"branch_ii_hypotheses", r.branch_ii_hypotheses},
            {"branch", r.branch == Corollary16Report::Branch::I ? "i" : "ii"},
            {"bound", number(r.bound)},
            {"extended_size", r.extended_size},
            {"holds", r.holds},
            {"branch_i_bound", r.branch_i_bound ? number(*r.branch_i_bound) : json(nullptr)},
            {"findings", r.findings}};
}

json to_json(const ConjectureReport& r) {
    json findings = json::array();
    for (const auto& f : r.findings) {
        findings.push_back({{"type", f.type.to_string()}, {"cut", f.cut}, {"classification", to_string(f.classification)},
                            {"union_dim", f.union_dim ? json(*f.union_dim) : json(nullptr)}, {"note", f.note}});
    }
    return {{"n", r.n}, {"q", r.q}, {"cut_range", {r.cut_lo, r.cut_hi}}, {"partitions", r.partitions},
            {"cuts_examined", r.cuts_examined}, {"minimum_gap_cuts", r.minimum_gap_cuts}, {"proved_cases", r.proved_cases},
            {"open_cases", r.open_cases}, {"asserted_failures", r.asserted_failures}, {"failures", r.failures},
            {"findings", findings}, {"open_regime_reached", r.open_regime_reached},
            {"nodes", r.stats.nodes}, {"complete", r.stats.complete}};
}

std::string to_text(const SupertailReport& r) {
    std::ostringstream out;
    out << "cut d_s = " << r.cut << " (s = " << r.s << "), d_{s-1} = " << r.below << ", mode " << to_string(r.mode) << "\n"
        << "supertail " << r.supertail_type.to_string() << ", |ST| = " << r.size << ", sigma = " << big(r.sigma_bound)
        << (r.is_minimum ? " (minimum)" : "") << "\n"
        << "d_s < 2 d_{s-1}: " << (r.gap ? "yes" : "no") << "; conditions (i) " << (r.cond_i ? "yes" : "no") << ", (ii) "
        << (r.cond_ii ? "yes" : "no") << ", (iii) " << (r.cond_iii ? "yes" : "no") << "; hypotheses "
        << (r.hypotheses_met ? "met" : "not met") << "\n"
        << "union: " << r.structure.union_points.size() << " points, "
        << (r.structure.subspace ? "a " + std::to_string(r.structure.subspace->dim()) + "-subspace" : std::string("not a subspace"))
        << "\nclassification " << to_string(r.classification) << "\n";
    if (r.beta0) out << "beta_0 = " << big(*r.beta0) << "\n";
    if (r.c0) out << "c_0 = " << big(*r.c0) << "\n";
    if (r.alpha) {
        out << "alpha (family dim " << r.alpha->family_dim << ", " << r.alpha->family_size << " members):";
        for (const auto& [i, v] : r.alpha->alpha) out << " a_" << i << "=" << v;
        out << "; x = " << big(r.alpha->x) << ", y = " << big(r.alpha->y) << ", z = " << big(r.alpha->z) << "\n";
    }
    for (const auto& c : r.checks) out << "PASS " << c << "\n";
    for (const auto& c : r.failures) out << "FAIL " << c << "\n";
    for (const auto& c : r.findings) out << "NOTE " << c << "\n";
    return out.str();
}

std::string to_text(const ConjectureReport& r) {
    std::ostringstream out;
    out << "V(" << r.n << "," << r.q << "), cuts " << r.cut_lo << ".." << r.cut_hi << "\n"
        << "partitions " << r.partitions << ", cuts examined " << r.cuts_examined << ", minimum gap cuts "
        << r.minimum_gap_cuts << ", proved " << r.proved_cases << ", open " << r.open_cases << ", asserted failures "
        << r.asserted_failures << "\n"
        << "open regime " << (r.open_regime_reached ? "reached" : "not reached at this size") << "\n";
    for (const auto& f : r.failures) out << "FAIL " << f << "\n";
    for (const auto& f : r.findings) {
        out << "FINDING " << f.type.to_string() << " cut " << f.cut << ": " << to_string(f.classification) << ", " << f.note
            << "\n";
    }
    return out.str();
}

}  // namespace subpart

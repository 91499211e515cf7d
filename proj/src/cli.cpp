#include "rcinf/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"

#include "rcinf/explore.hpp"
#include "rcinf/iso.hpp"

namespace rcinf::cli {

Model parse_model(const std::string& name)
{
    if (name == "x") return Model::x;
    if (name == "psi") return Model::psi;
    if (name == "rc") return Model::rc;
    if (name == "mlt") return Model::mlt;
    if (name == "mlrt") return Model::mlrt;
    throw UsageError("unknown model '" + name + "' (expected x, psi, rc, mlt or mlrt)");
}

const char* model_name(Model m)
{
    switch (m) {
    case Model::x: return "x";
    case Model::psi: return "psi";
    case Model::rc: return "rc";
    case Model::mlt: return "mlt";
    case Model::mlrt: return "mlrt";
    }
    return "?";
}

namespace {

int parse_int(const std::string& text, const std::string& what)
{
    int v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) throw UsageError("bad " + what + " '" + text + "'");
    return v;
}

} // namespace

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "list entry"));
    if (text.back() == ',') throw UsageError("trailing comma in '" + text + "'");
    return out;
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text, "rank");
        return {v, v};
    }
    const int lo = parse_int(text.substr(0, dots), "rank");
    const int hi = parse_int(text.substr(dots + 2), "rank");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

namespace {

RiggedConfiguration to_rc(const Json& input, Model from)
{
    switch (from) {
    case Model::x: return rc_from_forward(forward_from_json(input));
    case Model::psi: return rc_from_reverse(reverse_from_json(input));
    case Model::rc: return rc_from_json(input);
    case Model::mlt: return mlt_to_rc(mlt_from_json(input));
    case Model::mlrt: return mlrt_to_rc(mlrt_from_json(input));
    }
    throw UsageError("unknown source model");
}

Json from_rc(const RiggedConfiguration& rc, Model to)
{
    switch (to) {
    case Model::x: return to_json(forward_exponents_of(rc));
    case Model::psi: return to_json(reverse_exponents_of(rc));
    case Model::rc: return to_json(rc);
    case Model::mlt: return to_json(rc_to_mlt(rc));
    case Model::mlrt: return to_json(rc_to_mlrt(rc));
    }
    throw UsageError("unknown target model");
}

} // namespace

Json convert(const Json& input, Model from, Model to)
{
    const RiggedConfiguration rc = to_rc(input, from);
    // A source that is already an rc is only accepted when it lies in the crystal.
    if (from == Model::rc) forward_exponents_of(rc);
    return from_rc(rc, to);
}

Json apply(const Json& input, Model kind, const std::vector<int>& word)
{
    switch (kind) {
    case Model::rc: return to_json(apply_f_word(rc_from_json(input), word));
    case Model::mlt: {
        auto t = mlt_from_json(input);
        for (int i : word) t = apply_f_mlt(t, i);
        return to_json(t);
    }
    case Model::mlrt: {
        auto t = mlrt_from_json(input);
        for (int i : word) t = apply_f_mlrt(t, i);
        return to_json(t);
    }
    default: throw UsageError(std::string("apply works on rc, mlt or mlrt, not ") + model_name(kind));
    }
}

namespace {

template <class Exponents>
Json decision(const Membership<Exponents>& m, const char* key)
{
    Json out = {{"member", m.member()}, {"stage", to_string(m.stage)}};
    if (m.member()) {
        out[key] = to_json(*m.exponents)[key];
    } else {
        out["detail"] = m.detail;
    }
    return out;
}

std::vector<int> row_sums(const ForwardExponents& x)
{
    std::vector<int> s(static_cast<std::size_t>(x.rank()), 0);
    for (int i = 1; i <= x.rank(); ++i) {
        for (int j = 1; j <= x.rank() - i + 1; ++j) s[static_cast<std::size_t>(i - 1)] += x.at(i, j);
    }
    return s;
}

std::vector<int> row_sums(const ReverseExponents& psi)
{
    std::vector<int> s(static_cast<std::size_t>(psi.rank()), 0);
    for (int i = 1; i <= psi.rank(); ++i) {
        for (int j = 1; j <= i; ++j) s[static_cast<std::size_t>(i - 1)] += psi.at(i, j);
    }
    return s;
}

} // namespace

Json member(const Json& input, const std::string& side)
{
    const RiggedConfiguration rc = rc_from_json(input);
    if (side == "forward") {
        Json out = decision(is_member_rcinf(rc), "x");
        out["side"] = side;
        return out;
    }
    if (side == "reverse") {
        Json out = decision(is_member_rcinf_reverse(rc), "psi");
        out["side"] = side;
        return out;
    }
    if (side != "both") throw UsageError("unknown side '" + side + "' (expected forward, reverse or both)");
    const auto f = is_member_rcinf(rc);
    const auto r = is_member_rcinf_reverse(rc);
    bool agree = f.member() == r.member();
    if (agree && f.member()) agree = row_sums(*f.exponents) == row_sums(*r.exponents);
    return {{"side", side},
            {"member", f.member() && r.member()},
            {"agree", agree},
            {"forward", decision(f, "x")},
            {"reverse", decision(r, "psi")}};
}

std::string graph(int n, int depth, const std::string& format)
{
    if (format != "dot" && format != "jsonl") throw UsageError("unknown format '" + format + "' (expected dot or jsonl)");
    if (n < 1) throw UsageError("rank must be at least 1");
    if (depth < 0) throw UsageError("depth must be non-negative");
    const CrystalGraph g = explore(n, depth);

    std::vector<std::string> keys;
    for (const auto& rc : g.nodes) keys.push_back(canonical(to_json(rc)));
    std::ostringstream out;
    if (format == "jsonl") {
        for (const auto& e : g.edges) {
            out << "{\"from\":" << keys[e.from] << ",\"i\":" << e.i << ",\"to\":" << keys[e.to] << "}\n";
        }
        return out.str();
    }

    std::vector<std::string> ids;
    std::unordered_map<std::string, std::size_t> taken;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "n%016llx", static_cast<unsigned long long>(fnv1a(keys[k])));
        if (!taken.emplace(buf, k).second) throw std::logic_error("node id collision at " + keys[k]);
        ids.emplace_back(buf);
    }
    out << "digraph rc_infinity {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        out << "  " << ids[k] << " [label=\"" << to_string(g.nodes[k]) << "\"];\n";
    }
    for (const auto& e : g.edges) out << "  " << ids[e.from] << " -> " << ids[e.to] << " [label=" << e.i << "];\n";
    out << "}\n";
    return out.str();
}

namespace {

struct Suite {
    std::string name;
    long checked = 0;
    long failed = 0;
};

class CheckRun {
public:
    Suite& suite(const std::string& name)
    {
        for (auto& s : suites_) {
            if (s.name == name) return s;
        }
        suites_.push_back({name});
        return suites_.back();
    }

    void record(const std::string& name, bool ok, const Json& input, Json detail = nullptr)
    {
        Suite& s = suite(name);
        ++s.checked;
        if (ok) return;
        ++s.failed;
        if (failures_.size() < 20) {
            Json f = {{"suite", name}, {"input", input}};
            if (!detail.is_null()) f["detail"] = std::move(detail);
            failures_.push_back(std::move(f));
        }
    }

    CheckOutcome finish(Json header) const
    {
        CheckOutcome out;
        Json suites = Json::array();
        for (const auto& s : suites_) {
            suites.push_back({{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}});
            if (s.failed != 0) out.passed = false;
        }
        header["suites"] = std::move(suites);
        header["failures"] = failures_;
        header["passed"] = out.passed;
        out.report = std::move(header);
        return out;
    }

private:
    std::vector<Suite> suites_;
    Json failures_ = Json::array();
};

Json first_violation(const InequalityReport& r) { return r.passed() ? Json(nullptr) : to_json(*r.first()); }

} // namespace

CheckOutcome check(int lo, int hi, int bound)
{
    if (lo < 1 || hi < lo) throw UsageError("rank range must satisfy 1 <= lo <= hi");
    if (bound < 0) throw UsageError("bound must be non-negative");
    CheckRun run;
    for (int n = lo; n <= hi; ++n) {
        for_each_forward(n, bound, [&](const ForwardExponents& x) {
            const Json in = to_json(x);
            const RiggedConfiguration rc = rc_from_forward(x);
            run.record("forward_closed_form", rc == apply_f_word(empty_rc(n), word_of_forward(x)), in);
            run.record("forward_roundtrip", recover_forward(rc) == x.triangle(), in);
            const auto report = check_forward_inequalities(x);
            run.record("forward_inequalities", report.passed(), in, first_violation(report));
            auto t = highest_mlt(n);
            for (int i : word_of_forward(x)) t = apply_f_mlt(t, i);
            run.record("forward_tableau", t == mlt_from_forward(x) && forward_from_mlt(t) == x, in);
            const auto r = is_member_rcinf_reverse(rc);
            run.record("reverse_accepts_forward", r.member() && row_sums(*r.exponents) == row_sums(x), in);
        });
        for_each_reverse(n, bound, [&](const ReverseExponents& psi) {
            const Json in = to_json(psi);
            const RiggedConfiguration rc = rc_from_reverse(psi);
            run.record("reverse_closed_form", rc == apply_f_word(empty_rc(n), word_of_reverse(psi)), in);
            run.record("reverse_roundtrip", recover_reverse(rc) == psi.triangle(), in);
            const auto report = check_reverse_inequalities(psi);
            run.record("reverse_inequalities", report.passed(), in, first_violation(report));
            auto t = highest_mlrt(n);
            for (int i : word_of_reverse(psi)) t = apply_f_mlrt(t, i);
            run.record("reverse_tableau", t == mlrt_from_reverse(psi) && reverse_from_mlrt(t) == psi, in);
            const auto f = is_member_rcinf(rc);
            run.record("forward_accepts_reverse", f.member() && row_sums(*f.exponents) == row_sums(psi), in);
        });
    }
    return run.finish({{"n", {lo, hi}}, {"bound", bound}});
}

CheckOutcome check_table(const Json& table)
{
    InequalityReport report;
    if (table_side(table) == Side::forward) {
        report = check_forward_table(forward_table_from_json(table));
    } else {
        report = check_reverse_table(reverse_table_from_json(table));
    }
    CheckOutcome out;
    out.passed = report.passed();
    out.report = {{"side", table.at("side")},
                  {"checked", report.checked},
                  {"violations", to_json(report)},
                  {"passed", out.passed}};
    return out;
}

Json blambda(const DominantWeight& lambda, Side side)
{
    Json elements = Json::array();
    const auto set = blambda_rc_set(lambda, side);
    for (const auto& e : set) elements.push_back(to_json(e.rc));
    return {{"n", lambda.rank()},
            {"lambda", lambda.values()},
            {"side", side == Side::forward ? "forward" : "reverse"},
            {"size", set.size()},
            {"elements", std::move(elements)}};
}

std::string render_object(const Json& object, Model kind)
{
    switch (kind) {
    case Model::mlt: return render(mlt_from_json(object).rows());
    case Model::mlrt: return render(mlrt_from_json(object).rows());
    case Model::rc: return to_string(rc_from_json(object)) + "\n";
    default: return object.dump() + "\n";
    }
}

namespace {

std::string slurp(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open '" + path + "'");
        buf << file.rdbuf();
    }
    return buf.str();
}

Side parse_side(const std::string& s)
{
    if (s == "forward") return Side::forward;
    if (s == "reverse") return Side::reverse;
    throw UsageError("unknown side '" + s + "' (expected forward or reverse)");
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigged configurations, exponent triangles and marginally large tableaux for B(infinity) in type A_n"};
    app.require_subcommand(1);

    std::string input;
    std::string from = "rc";
    std::string to = "rc";
    std::string word;
    std::string side = "both";
    std::string lambda_side = "forward";
    std::string format = "dot";
    std::string range = "1..3";
    std::string lambda_text;
    std::string table;
    int n = 2;
    int depth = 3;
    int bound = 2;
    bool assert_member = false;
    bool render_flag = false;

    auto* convert_cmd = app.add_subcommand("convert", "Convert an object between models");
    convert_cmd->add_option("--from", from, "Source model: x, psi, rc, mlt, mlrt")->required();
    convert_cmd->add_option("--to", to, "Target model: x, psi, rc, mlt, mlrt")->required();
    convert_cmd->add_flag("--render", render_flag, "Print tableaux as bracketed rows instead of JSON");
    convert_cmd->add_option("input", input, "JSON file (default: standard input)");

    auto* apply_cmd = app.add_subcommand("apply", "Apply a word of lowering operators");
    apply_cmd->add_option("--from", from, "Object model: rc, mlt, mlrt")->capture_default_str();
    apply_cmd->add_option("--word", word, "Comma-separated indices, first applied first")->required();
    apply_cmd->add_flag("--render", render_flag, "Print tableaux as bracketed rows instead of JSON");
    apply_cmd->add_option("input", input, "JSON file (default: standard input)");

    auto* member_cmd = app.add_subcommand("member", "Decide membership of a rigged configuration");
    member_cmd->add_option("--side", side, "forward, reverse or both")->capture_default_str();
    member_cmd->add_flag("--assert", assert_member, "Exit with status 2 when not a member");
    member_cmd->add_option("input", input, "JSON file (default: standard input)");

    auto* graph_cmd = app.add_subcommand("graph", "Export the crystal graph near the highest weight element");
    graph_cmd->add_option("--n", n, "Rank")->capture_default_str();
    graph_cmd->add_option("--depth", depth, "Number of lowering steps")->capture_default_str();
    graph_cmd->add_option("--format", format, "dot or jsonl")->capture_default_str();

    auto* check_cmd = app.add_subcommand("check", "Run the exhaustive property suites");
    check_cmd->add_option("--n", range, "Rank or range lo..hi")->capture_default_str();
    check_cmd->add_option("--bound", bound, "Largest exponent entry")->capture_default_str();
    check_cmd->add_option("--table", table, "Check only this extended-table JSON file");

    auto* blambda_cmd = app.add_subcommand("blambda", "Enumerate B(lambda) as rigged configurations");
    blambda_cmd->add_option("--lambda", lambda_text, "Comma-separated values lambda(h_i)");
    blambda_cmd->add_option("--side", lambda_side, "forward or reverse")->capture_default_str();
    blambda_cmd->add_option("input", input, "Lambda JSON file, used when --lambda is absent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (convert_cmd->parsed()) {
            const Model dst = parse_model(to);
            const Json result = convert(parse_json(slurp(input, in)), parse_model(from), dst);
            out << (render_flag ? render_object(result, dst) : result.dump() + "\n");
            return exit_ok;
        }
        if (apply_cmd->parsed()) {
            const Model kind = parse_model(from);
            const Json result = apply(parse_json(slurp(input, in)), kind, parse_int_list(word));
            out << (render_flag ? render_object(result, kind) : result.dump() + "\n");
            return exit_ok;
        }
        if (member_cmd->parsed()) {
            const Json result = member(parse_json(slurp(input, in)), side);
            out << result.dump() << "\n";
            if (result.contains("agree") && !result["agree"].get<bool>()) return exit_violation;
            return assert_member && !result["member"].get<bool>() ? exit_violation : exit_ok;
        }
        if (graph_cmd->parsed()) {
            out << graph(n, depth, format);
            return exit_ok;
        }
        if (check_cmd->parsed()) {
            CheckOutcome outcome;
            if (!table.empty()) {
                outcome = check_table(parse_json(slurp(table, in)));
            } else {
                const auto [lo, hi] = parse_range(range);
                outcome = check(lo, hi, bound);
            }
            out << outcome.report.dump() << "\n";
            return outcome.passed ? exit_ok : exit_violation;
        }
        if (blambda_cmd->parsed()) {
            const DominantWeight lambda = lambda_text.empty() ? lambda_from_json(parse_json(slurp(input, in)))
                                                              : DominantWeight(parse_int_list(lambda_text));
            out << blambda(lambda, parse_side(lambda_side)).dump() << "\n";
            return exit_ok;
        }
    } catch (const NotMember& e) {
        err << "error: " << e.what() << "\n";
        return exit_violation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace rcinf::cli

#include "rcinf/io.hpp"

#include <array>
#include <map>

namespace rcinf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer()) fail(where, "expected an integer");
    const auto v = j.get<long long>();
    if (v < -1000000000LL || v > 1000000000LL) fail(where, "integer out of range");
    return static_cast<int>(v);
}

int rank_of(const Json& j, const std::string& where)
{
    const int n = as_int(field(j, "n", where), where + ".n");
    if (n < 1) fail(where + ".n", "rank must be at least 1");
    return n;
}

std::vector<std::vector<int>> ragged(const Json& j, int n, const std::string& where)
{
    if (!j.is_array()) fail(where, "expected an array");
    if (static_cast<int>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> out;
    for (std::size_t a = 0; a < j.size(); ++a) {
        const std::string here = where + "[" + std::to_string(a) + "]";
        if (!j[a].is_array()) fail(here, "expected an array");
        if (j[a].size() != static_cast<std::size_t>(n) - a) fail(here, "expected " + std::to_string(n - static_cast<int>(a)) + " entries");
        std::vector<int> row;
        for (std::size_t b = 0; b < j[a].size(); ++b) row.push_back(as_int(j[a][b], here + "[" + std::to_string(b) + "]"));
        out.push_back(std::move(row));
    }
    return out;
}

template <class Table>
Json table_to_json(const Table& t, const char* side)
{
    const int n = t.rank();
    Json entries = Json::array();
    for (int k = 0; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            for (int i = 1; i <= n; ++i) {
                if (t.contains(i, j, k)) entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", t.at(i, j, k)}});
            }
        }
    }
    return {{"n", n}, {"side", side}, {"entries", std::move(entries)}};
}

template <class Table>
Table table_from_json(const Json& j)
{
    const int n = rank_of(j, "table");
    const Json& entries = field(j, "entries", "table");
    if (!entries.is_array()) fail("table.entries", "expected an array");
    Table t(n);
    std::map<std::array<int, 3>, bool> seen;
    for (std::size_t a = 0; a < entries.size(); ++a) {
        const std::string here = "table.entries[" + std::to_string(a) + "]";
        const int i = as_int(field(entries[a], "i", here), here + ".i");
        const int jj = as_int(field(entries[a], "j", here), here + ".j");
        const int k = as_int(field(entries[a], "k", here), here + ".k");
        if (!t.contains(i, jj, k)) fail(here, "index outside the table");
        if (seen[{i, jj, k}]) fail(here, "duplicate entry");
        seen[{i, jj, k}] = true;
        t.set(i, jj, k, as_int(field(entries[a], "value", here), here + ".value"));
    }
    return t;
}

} // namespace

Json to_json(const RiggedConfiguration& rc)
{
    Json parts = Json::array();
    for (const auto& part : rc.parts()) {
        Json rows = Json::array();
        for (const auto& row : part.rows()) rows.push_back({{"len", row.length}, {"rig", row.rigging}});
        parts.push_back(std::move(rows));
    }
    return {{"n", rc.rank()}, {"parts", std::move(parts)}};
}

RiggedConfiguration rc_from_json(const Json& j)
{
    const int n = rank_of(j, "rc");
    const Json& parts = field(j, "parts", "rc");
    if (!parts.is_array() || static_cast<int>(parts.size()) != n) fail("rc.parts", "expected " + std::to_string(n) + " parts");
    std::vector<RiggedPartition> out;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        const std::string where = "rc.parts[" + std::to_string(a) + "]";
        if (!parts[a].is_array()) fail(where, "expected an array of rows");
        std::vector<RiggedRow> rows;
        for (std::size_t b = 0; b < parts[a].size(); ++b) {
            const std::string here = where + "[" + std::to_string(b) + "]";
            const RiggedRow row{as_int(field(parts[a][b], "len", here), here + ".len"),
                                as_int(field(parts[a][b], "rig", here), here + ".rig")};
            if (row.length <= 0) fail(here + ".len", "row length must be positive");
            rows.push_back(row);
        }
        if (!is_canonical(rows)) fail(where, "rows must be sorted by length descending, then rigging ascending");
        out.emplace_back(std::move(rows));
    }
    return RiggedConfiguration(std::move(out));
}

Json to_json(const ForwardExponents& x) { return {{"n", x.rank()}, {"x", forward_columns(x.triangle())}}; }

ForwardExponents forward_from_json(const Json& j)
{
    const int n = rank_of(j, "x");
    const auto cols = ragged(field(j, "x", "x"), n, "x.x");
    try {
        return validate_forward(forward_triangle_from_columns(n, cols));
    } catch (const ExponentError& e) {
        fail("x", e.what());
    }
}

Json to_json(const ReverseExponents& psi) { return {{"n", psi.rank()}, {"psi", reverse_rows(psi.triangle())}}; }

ReverseExponents reverse_from_json(const Json& j)
{
    const int n = rank_of(j, "psi");
    const auto rows = ragged(field(j, "psi", "psi"), n, "psi.psi");
    try {
        return validate_reverse(reverse_triangle_from_rows(n, rows));
    } catch (const ExponentError& e) {
        fail("psi", e.what());
    }
}

Json to_json(const MarginallyLargeTableau& t)
{
    Json counts = Json::array();
    const int n = t.rank();
    for (int r = 1; r <= n; ++r) {
        for (int y = r + 1; y <= n + 1; ++y) {
            if (t.count(r, y) != 0) counts.push_back({{"row", r}, {"value", y}, {"count", t.count(r, y)}});
        }
    }
    return {{"n", n}, {"counts", std::move(counts)}};
}

MarginallyLargeTableau mlt_from_json(const Json& j)
{
    const int n = rank_of(j, "mlt");
    const Json& counts = field(j, "counts", "mlt");
    if (!counts.is_array()) fail("mlt.counts", "expected an array");
    MarginallyLargeTableau t(n);
    std::map<std::pair<int, int>, bool> seen;
    std::vector<std::pair<int, int>> diagonal; // (row, count), checked once all rows are known
    for (std::size_t a = 0; a < counts.size(); ++a) {
        const std::string here = "mlt.counts[" + std::to_string(a) + "]";
        const int r = as_int(field(counts[a], "row", here), here + ".row");
        const int y = as_int(field(counts[a], "value", here), here + ".value");
        const int c = as_int(field(counts[a], "count", here), here + ".count");
        if (r < 1 || r > n) fail(here + ".row", "row out of range");
        if (y < r || y > n + 1) fail(here + ".value", "value cannot appear in row " + std::to_string(r));
        if (c < 0) fail(here + ".count", "count must be non-negative");
        if (seen[{r, y}]) fail(here, "duplicate entry");
        seen[{r, y}] = true;
        if (y == r) {
            diagonal.push_back({r, c});
        } else {
            t.set_count(r, y, c);
        }
    }
    for (const auto& [r, c] : diagonal) {
        if (c != t.diagonal_count(r)) {
            fail("mlt.counts", "row " + std::to_string(r) + " must hold " + std::to_string(t.diagonal_count(r))
                                   + " boxes of " + std::to_string(r) + " to be marginally large");
        }
    }
    return t;
}

Json to_json(const MarginallyLargeReverseTableau& t)
{
    Json counts = Json::array();
    const int n = t.rank();
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= x; ++y) {
            if (t.count(x, y) != 0) {
                counts.push_back({{"part", x}, {"row", y}, {"value", x - y + 2}, {"count", t.count(x, y)}});
            }
        }
    }
    return {{"n", n}, {"counts", std::move(counts)}};
}

MarginallyLargeReverseTableau mlrt_from_json(const Json& j)
{
    const int n = rank_of(j, "mlrt");
    const Json& counts = field(j, "counts", "mlrt");
    if (!counts.is_array()) fail("mlrt.counts", "expected an array");
    MarginallyLargeReverseTableau t(n);
    std::map<std::pair<int, int>, bool> seen;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        const std::string here = "mlrt.counts[" + std::to_string(a) + "]";
        const int x = as_int(field(counts[a], "part", here), here + ".part");
        const int y = as_int(field(counts[a], "row", here), here + ".row");
        if (x < 1 || x > n) fail(here + ".part", "part out of range");
        if (y < 1 || y > x) fail(here + ".row", "row out of range for part " + std::to_string(x));
        if (const auto v = counts[a].find("value"); v != counts[a].end() && as_int(*v, here + ".value") != x - y + 2) {
            fail(here + ".value", "part " + std::to_string(x) + " row " + std::to_string(y) + " holds the value "
                                      + std::to_string(x - y + 2));
        }
        const int c = as_int(field(counts[a], "count", here), here + ".count");
        if (seen[{x, y}]) fail(here, "duplicate entry");
        seen[{x, y}] = true;
        t.set_count(x, y, c);
    }
    try {
        validate(t);
    } catch (const InvalidTableau& e) {
        fail("mlrt", e.what());
    }
    return t;
}

Json to_json(const DominantWeight& lambda) { return {{"n", lambda.rank()}, {"lambda", lambda.values()}}; }

DominantWeight lambda_from_json(const Json& j)
{
    const int n = rank_of(j, "lambda");
    const Json& values = field(j, "lambda", "lambda");
    if (!values.is_array() || static_cast<int>(values.size()) != n) {
        fail("lambda.lambda", "expected " + std::to_string(n) + " values");
    }
    std::vector<int> out;
    for (std::size_t a = 0; a < values.size(); ++a) {
        const int v = as_int(values[a], "lambda.lambda[" + std::to_string(a) + "]");
        if (v < 0) fail("lambda.lambda[" + std::to_string(a) + "]", "value must be non-negative");
        out.push_back(v);
    }
    return DominantWeight(std::move(out));
}

Json to_json(const ForwardExtendedTable& t) { return table_to_json(t, "forward"); }

Json to_json(const ReverseExtendedTable& t) { return table_to_json(t, "reverse"); }

Side table_side(const Json& j)
{
    const Json& side = field(j, "side", "table");
    if (side == "forward") return Side::forward;
    if (side == "reverse") return Side::reverse;
    fail("table.side", "expected \"forward\" or \"reverse\"");
}

ForwardExtendedTable forward_table_from_json(const Json& j) { return table_from_json<ForwardExtendedTable>(j); }

ReverseExtendedTable reverse_table_from_json(const Json& j) { return table_from_json<ReverseExtendedTable>(j); }

Json to_json(const Violation& v)
{
    return {{"lemma", v.lemma}, {"indices", v.indices}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

Json to_json(const InequalityReport& report)
{
    Json out = Json::array();
    for (const auto& v : report.violations) out.push_back(to_json(v));
    return out;
}

// nlohmann's object type is an ordered std::map, so dump() already sorts keys.
std::string canonical(const Json& j) { return j.dump(); }

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace rcinf

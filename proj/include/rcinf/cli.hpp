#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcinf/highest_weight.hpp"
#include "rcinf/io.hpp"

namespace rcinf::cli {

enum class Model { x, psi, rc, mlt, mlrt };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_violation = 2 };

Model parse_model(const std::string& name);
const char* model_name(Model m);

/// "1,2,1" -> {1, 2, 1}; the empty string is the empty list. Throws UsageError.
std::vector<int> parse_int_list(const std::string& text);

/// "3" -> {3, 3}; "1..3" -> {1, 3}. Throws UsageError.
std::pair<int, int> parse_range(const std::string& text);

/// Every conversion goes through the rigged configuration; rc sources must be in the crystal
/// (NotMember otherwise).
Json convert(const Json& input, Model from, Model to);

/// Applies f_{word[0]} first. The object must be an rc, mlt or mlrt.
Json apply(const Json& input, Model kind, const std::vector<int>& word);

/// Decision for side "forward", "reverse" or "both"; the "member" field is the verdict and
/// "agree" (both only) records whether the two tests coincide.
Json member(const Json& rc, const std::string& side);

/// Breadth-first crystal graph as DOT or as JSON lines, one edge per line.
std::string graph(int n, int depth, const std::string& format);

struct CheckOutcome {
    Json report;
    bool passed = true;
};

/// Runs every exhaustive property suite over the triangles of ranks lo..hi with entries <= bound.
CheckOutcome check(int lo, int hi, int bound);

/// Runs the structural inequality suite on a single extended table.
CheckOutcome check_table(const Json& table);

Json blambda(const DominantWeight& lambda, Side side);

std::string render_object(const Json& object, Model kind);

/// Entry point of the command-line tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rcinf::cli

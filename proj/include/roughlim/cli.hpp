#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "roughlim/sequence.hpp"
#include "roughlim/space.hpp"
#include "roughlim/topology.hpp"

namespace roughlim {

enum class Command { Validate, Analyze, Limitset, Topology, Theorems, Search };
enum class OutputFormat { Text, Json };

/// Fully resolved invocation. run() performs no argument parsing; run_cli()
/// builds one of these from argv-style input.
struct RunConfig {
    Command command = Command::Validate;
    std::string space_source;
    std::vector<std::string> sequences;   // label specs or @file references
    std::optional<Rational> r;
    std::optional<Side> side;
    std::vector<std::string> candidates;  // empty = all points
    std::vector<std::string> set_queries; // topology --set, comma-separated labels
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t max_points = 6;
    std::size_t max_cycle = 4;
    std::size_t topology_cap = kDefaultTopologyCap;
    OutputFormat format = OutputFormat::Text;
};

/// Loads and validates a space description (JSON file). Schema problems
/// raise SchemaError, axiom violations AxiomError, so the two failure modes
/// stay distinguishable.
Space parse_space_file(const std::string& path);

/// File path or builtin generator spec: example31:k1,k2,... |
/// maxspace:v1,v2,... | random:seed,n,family (family: metric, constant,
/// general).
Space resolve_space(const std::string& source);

/// "[prefix=l1,l2:]cycle=l1,l2" with point labels, or "@file.json" holding
/// {"prefix": [indices], "cycle": [indices]}.
Sequence resolve_sequence(const Space& space, const std::string& spec);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv-style entry point (program name excluded). Exit codes: 0 success /
/// all checks pass, 1 axiom violation or theorem failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace roughlim

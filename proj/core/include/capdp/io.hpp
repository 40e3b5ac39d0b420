#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "capdp/dag.hpp"
#include "capdp/generators.hpp"
#include "capdp/knapsack.hpp"
#include "capdp/monge.hpp"
#include "capdp/unbounded.hpp"

namespace capdp {

enum class ProblemKind { knapsack, unbounded, dag, monge, sequence };

ProblemKind parse_kind(std::string_view name);
std::string_view to_string(ProblemKind kind);

struct DagProblem {
  NodeWeightedDag graph;
  Node source = 0;
  Node target = 0;
};

struct MongeProblem {
  MongeDagOracle graph;
  Node source = 0;
  Node target = 0;
};

struct SequenceProblem {
  std::vector<std::int64_t> values;
  std::int64_t k = 0;
  std::int64_t delta = 1;
};

/// A parsed and validated instance. Knapsack files are validated strictly
/// unless `lax` is set.
struct InstanceFile {
  ProblemKind kind = ProblemKind::knapsack;
  std::variant<KnapsackInstance, UnboundedInstance, DagProblem, MongeProblem, SequenceProblem>
      body;
};

struct ParseOptions {
  bool lax = false;
};

/// `source` names the input in error messages ("file:line:col: ...").
InstanceFile parse_instance(std::istream& in, ProblemKind kind, const ParseOptions& opts = {},
                            std::string_view source = "<input>");
InstanceFile parse_instance_file(const std::string& path, ProblemKind kind,
                                 const ParseOptions& opts = {});

void write_knapsack(std::ostream& out, const RawKnapsack& k);
void write_dag(std::ostream& out, const NodeWeightedDag& g, Node s, Node t);
/// Complete oracles are written with every edge and the "complete" flag.
void write_monge(std::ostream& out, const MongeDagOracle& g, Node s, Node t);
void write_sequence(std::ostream& out, const SequenceProblem& p);

}  // namespace capdp

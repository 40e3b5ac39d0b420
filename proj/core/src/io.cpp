#include "capdp/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <memory>
#include <ostream>
#include <sstream>

namespace capdp {

ProblemKind parse_kind(std::string_view name) {
  if (name == "knapsack") return ProblemKind::knapsack;
  if (name == "unbounded") return ProblemKind::unbounded;
  if (name == "dag") return ProblemKind::dag;
  if (name == "monge") return ProblemKind::monge;
  if (name == "sequence") return ProblemKind::sequence;
  throw Error(Errc::usage, "unknown problem kind '" + std::string(name) + "'");
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::knapsack: return "knapsack";
    case ProblemKind::unbounded: return "unbounded";
    case ProblemKind::dag: return "dag";
    case ProblemKind::monge: return "monge";
    case ProblemKind::sequence: return "sequence";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

class TokenStream {
 public:
  TokenStream(std::istream& in, std::string_view source) : source_(source) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens_.push_back({line.substr(start, i - start), lineno, start + 1});
      }
      last_line_ = lineno;
    }
    if (in.bad()) throw Error(Errc::io, std::string(source_) + ": read failed");
  }

  bool empty() const { return tokens_.empty(); }
  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

  [[noreturn]] void fail(const Token* at, const std::string& msg) const {
    std::string where = std::string(source_) + ":";
    if (at) {
      where += std::to_string(at->line) + ":" + std::to_string(at->col);
    } else {
      where += std::to_string(last_line_ + 1) + ":1";
    }
    throw Error(Errc::parse, where + ": " + msg);
  }

  std::int64_t integer(const char* what) {
    const Token* t = peek();
    if (!t) fail(nullptr, std::string("unexpected end of input, expected ") + what);
    std::int64_t v = 0;
    const char* b = t->text.data();
    const char* e = b + t->text.size();
    if (*b == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec == std::errc::result_out_of_range) fail(t, std::string(what) + " out of range");
    if (ec != std::errc() || ptr != e) fail(t, std::string("expected ") + what + ", got '" + t->text + "'");
    ++pos_;
    return v;
  }

  ExtValue reward(const char* what) {
    const Token* t = peek();
    if (t && (t->text == "-inf" || t->text == "-INF")) {
      ++pos_;
      return kBottom;
    }
    const Token* at = t;
    const std::int64_t v = integer(what);
    if (v > ExtValue::kLimit || v < -ExtValue::kLimit) fail(at, std::string(what) + " out of range");
    return v;
  }

  std::int64_t nonneg(const char* what) {
    const Token* at = peek();
    const std::int64_t v = integer(what);
    if (v < 0) fail(at, std::string(what) + " must be nonnegative");
    return v;
  }

  bool flag(std::string_view word) {
    const Token* t = peek();
    if (t && t->text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  void finish() {
    if (!done()) fail(peek(), "unexpected trailing token '" + peek()->text + "'");
  }

  const Token* current() const { return peek(); }

 private:
  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

RawKnapsack read_items(TokenStream& ts) {
  RawKnapsack raw;
  const std::int64_t n = ts.nonneg("item count n");
  raw.capacity = ts.integer("capacity T");
  for (std::int64_t i = 0; i < n; ++i) {
    Item it;
    it.weight = ts.integer("item weight");
    it.value = ts.integer("item value");
    raw.items.push_back(it);
  }
  ts.finish();
  return raw;
}

struct GraphHeader {
  std::int64_t n = 0, m = 0, s = 0, t = 0;
  bool transitive = false;
  bool complete = false;
};

GraphHeader read_graph_header(TokenStream& ts) {
  GraphHeader h;
  h.n = ts.nonneg("node count n");
  h.m = ts.nonneg("edge count m");
  const Token* s_at = ts.current();
  h.s = ts.nonneg("source s");
  const Token* t_at = ts.current();
  h.t = ts.nonneg("target t");
  if (h.n == 0) ts.fail(nullptr, "graph needs at least one node");
  if (h.s >= h.n) ts.fail(s_at, "source out of range");
  if (h.t >= h.n) ts.fail(t_at, "target out of range");
  for (;;) {
    if (ts.flag("transitive")) {
      h.transitive = true;
    } else if (ts.flag("complete")) {
      h.complete = true;
    } else {
      break;
    }
  }
  return h;
}

Node read_node(TokenStream& ts, std::int64_t n, const char* what) {
  const Token* at = ts.current();
  const std::int64_t v = ts.nonneg(what);
  if (v >= n) ts.fail(at, std::string(what) + " " + std::to_string(v) + " out of range");
  return static_cast<Node>(v);
}

DagProblem read_dag(TokenStream& ts) {
  const GraphHeader h = read_graph_header(ts);
  if (h.complete) ts.fail(nullptr, "'complete' applies to monge files only");
  std::vector<ExtValue> rewards;
  for (std::int64_t i = 0; i < h.n; ++i) rewards.push_back(ts.reward("node reward"));
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < h.m; ++i) {
    const Token* at = ts.current();
    const Node u = read_node(ts, h.n, "edge tail");
    const Node v = read_node(ts, h.n, "edge head");
    if (u >= v) ts.fail(at, "edge must go from a smaller to a larger node index");
    edges.push_back({u, v});
  }
  ts.finish();
  DagProblem p{NodeWeightedDag(static_cast<std::size_t>(h.n), std::move(rewards), std::move(edges),
                               h.transitive),
               static_cast<Node>(h.s), static_cast<Node>(h.t)};
  if (h.transitive && !p.graph.verify_transitive()) {
    throw Error(Errc::validation, "graph is flagged transitive but is not");
  }
  return p;
}

MongeProblem read_monge(TokenStream& ts) {
  const GraphHeader h = read_graph_header(ts);
  for (std::int64_t i = 0; i < h.n; ++i) ts.reward("node reward");
  std::vector<WeightedEdge> edges;
  for (std::int64_t i = 0; i < h.m; ++i) {
    const Token* at = ts.current();
    const Node u = read_node(ts, h.n, "edge tail");
    const Node v = read_node(ts, h.n, "edge head");
    if (u >= v) ts.fail(at, "edge must go from a smaller to a larger node index");
    const Token* w_at = ts.current();
    const std::int64_t w = ts.integer("edge weight");
    if (w > ExtValue::kLimit || w < -ExtValue::kLimit) ts.fail(w_at, "edge weight out of range");
    edges.push_back({u, v, w});
  }
  ts.finish();
  const Node last = static_cast<Node>(h.n - 1);
  MongeDagOracle listed = MongeDagOracle::from_edges(last, std::move(edges));
  MongeProblem p{std::move(listed), static_cast<Node>(h.s), static_cast<Node>(h.t)};
  if (h.complete) {
    const std::size_t need = static_cast<std::size_t>(h.n) * static_cast<std::size_t>(h.n - 1) / 2;
    if (p.graph.edge_count() != need) {
      throw Error(Errc::validation, "flagged complete but lists " +
                                        std::to_string(p.graph.edge_count()) + " of " +
                                        std::to_string(need) + " edges");
    }
    const std::size_t nodes = static_cast<std::size_t>(h.n);
    auto dense = std::make_shared<std::vector<std::int64_t>>(nodes * nodes, 0);
    for (Node j = 1; j <= last; ++j) {
      p.graph.for_each_pred(j, 0, j - 1, [&](Node i, std::int64_t w) { (*dense)[i * nodes + j] = w; });
    }
    const std::int64_t bound = p.graph.bound();
    p.graph = MongeDagOracle::complete(
        last, [dense, nodes](Node i, Node j) { return (*dense)[i * nodes + j]; }, bound);
  }
  return p;
}

SequenceProblem read_sequence(TokenStream& ts) {
  SequenceProblem p;
  const std::int64_t n = ts.nonneg("length n");
  p.k = ts.nonneg("k");
  const Token* d_at = ts.current();
  p.delta = ts.integer("delta");
  if (p.delta < 1) ts.fail(d_at, "delta must be positive");
  for (std::int64_t i = 0; i < n; ++i) {
    const Token* at = ts.current();
    const std::int64_t v = ts.integer("sequence value");
    if (v > (std::int64_t{1} << 40) || v < -(std::int64_t{1} << 40)) ts.fail(at, "value out of range");
    p.values.push_back(v);
  }
  ts.finish();
  return p;
}

}  // namespace

InstanceFile parse_instance(std::istream& in, ProblemKind kind, const ParseOptions& opts,
                            std::string_view source) {
  TokenStream ts(in, source);
  if (ts.empty()) ts.fail(nullptr, "empty input");
  switch (kind) {
    case ProblemKind::knapsack: {
      RawKnapsack raw = read_items(ts);
      return {kind, KnapsackInstance(std::move(raw.items), raw.capacity, opts.lax)};
    }
    case ProblemKind::unbounded: {
      RawKnapsack raw = read_items(ts);
      return {kind, UnboundedInstance(std::move(raw.items), raw.capacity)};
    }
    case ProblemKind::dag:
      return {kind, read_dag(ts)};
    case ProblemKind::monge:
      return {kind, read_monge(ts)};
    case ProblemKind::sequence:
      return {kind, read_sequence(ts)};
  }
  throw Error(Errc::usage, "unsupported kind");
}

InstanceFile parse_instance_file(const std::string& path, ProblemKind kind,
                                 const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  return parse_instance(in, kind, opts, path);
}

void write_knapsack(std::ostream& out, const RawKnapsack& k) {
  out << k.items.size() << ' ' << k.capacity << '\n';
  for (const Item& it : k.items) out << it.weight << ' ' << it.value << '\n';
}

void write_dag(std::ostream& out, const NodeWeightedDag& g, Node s, Node t) {
  out << g.size() << ' ' << g.edge_count() << ' ' << s << ' ' << t;
  if (g.transitive()) out << " transitive";
  out << '\n';
  for (Node v = 0; v < g.size(); ++v) out << (v ? " " : "") << g.reward(v);
  out << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

void write_monge(std::ostream& out, const MongeDagOracle& g, Node s, Node t) {
  out << g.node_count() << ' ' << g.edge_count() << ' ' << s << ' ' << t;
  if (g.is_complete()) out << " complete";
  out << '\n';
  for (std::size_t v = 0; v < g.node_count(); ++v) out << (v ? " 0" : "0");
  out << '\n';
  for (Node j = 1; j <= g.last(); ++j) {
    g.for_each_pred(j, 0, j - 1, [&](Node i, std::int64_t w) {
      out << i << ' ' << j << ' ' << w << '\n';
    });
  }
}

void write_sequence(std::ostream& out, const SequenceProblem& p) {
  out << p.values.size() << ' ' << p.k << ' ' << p.delta << '\n';
  for (std::size_t i = 0; i < p.values.size(); ++i) out << (i ? " " : "") << p.values[i];
  out << '\n';
}

}  // namespace capdp

//  Copyright 2026 The graphemb Authors. All Rights Reserved.
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// graphemb command-line tool: embed, eval, project, stability.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphemb/analysis.hpp"
#include "graphemb/clustering.hpp"
#include "graphemb/dynamic.hpp"
#include "graphemb/embedding.hpp"
#include "graphemb/error.hpp"
#include "graphemb/g2g.hpp"
#include "graphemb/gaussian.hpp"
#include "graphemb/graph.hpp"
#include "graphemb/kg2e.hpp"
#include "graphemb/knowledge.hpp"
#include "graphemb/line.hpp"
#include "graphemb/metrics.hpp"
#include "graphemb/report.hpp"
#include "graphemb/sgns.hpp"
#include "graphemb/split.hpp"
#include "graphemb/walks.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace graphemb {
namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmbedOptions {
  std::string method;
  std::string edges, attributes, labels, triples;
  bool directed{false};
  bool weighted{false};
  bool one_hot{false};
  std::string out_dir;
  std::optional<std::size_t> dim;
  int num_walks{10};
  int walk_length{80};
  int window{10};
  double p{1.0};
  double q{1.0};
  int negatives{5};
  int hops{2};
  std::optional<int> epochs;
  std::optional<double> lr;
  double gamma{1.0};
  std::string energy{"kl"};
  std::string corruption{"unif"};
  std::vector<std::size_t> hidden{512};
  double p_val{0.10};
  double p_test{0.05};
  std::uint64_t seed{1};
  int threads{1};
};

struct EvalOptions {
  std::string task;
  std::string embedding;
  bool gaussian{false};
  std::string pairs, labels, out;
  int k{0};
  int repeats{10};
  double train_fraction{0.5};
  std::uint64_t seed{1};
};

struct ProjectOptions {
  std::string embedding;
  bool gaussian{false};
  std::size_t dim{2};
  std::string out;
};

struct StabilityOptions {
  std::string snapshots;
  std::vector<std::string> embeddings;
  bool directed{false};
  bool weighted{false};
  std::string out;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

void write_ids(const IdMap& ids, const fs::path& path) {
  std::ofstream out = open_output(path);
  out << "index\tid\n";
  for (std::size_t i = 0; i < ids.size(); ++i) out << i << '\t' << ids.name(static_cast<NodeId>(i)) << '\n';
}

void write_pairs(const IdMap& ids, std::span<const Edge> pos, std::span<const NodePair> neg, const fs::path& path) {
  std::ofstream out = open_output(path);
  for (const Edge& e : pos) out << ids.name(e.src) << ' ' << ids.name(e.dst) << " 1\n";
  for (const auto& [u, v] : neg) out << ids.name(u) << ' ' << ids.name(v) << " 0\n";
}

void write_variances(const EmbeddingHistory& history, const fs::path& path) {
  std::ofstream out = open_output(path);
  write_variance_csv(history, out);
}

Graph load_graph(const EmbedOptions& o) {
  if (o.edges.empty()) throw UsageError("--edges is required for method " + o.method);
  std::ifstream in = open_input(o.edges);
  Graph g = load_edge_list(in, o.directed, o.weighted);
  if (!o.attributes.empty()) {
    std::ifstream a = open_input(o.attributes);
    g = load_attributes(g, a);
  }
  if (!o.labels.empty()) {
    std::ifstream l = open_input(o.labels);
    g = load_labels(g, l);
  }
  return g;
}

json embed_config(const EmbedOptions& o, std::size_t dim, int epochs, double lr) {
  json c;
  c["method"] = o.method;
  c["inputs"] = {{"edges", o.edges}, {"attributes", o.attributes}, {"labels", o.labels}, {"triples", o.triples}};
  c["directed"] = o.directed;
  c["weighted"] = o.weighted;
  c["one_hot"] = o.one_hot;
  c["dim"] = dim;
  c["epochs"] = epochs;
  c["lr"] = lr;
  c["seed"] = o.seed;
  c["threads"] = o.threads;
  if (o.method == "deepwalk" || o.method == "node2vec") {
    c["num_walks"] = o.num_walks;
    c["walk_length"] = o.walk_length;
    c["window"] = o.window;
    c["p"] = o.p;
    c["q"] = o.q;
    c["k_negatives"] = o.negatives;
  } else if (o.method == "line1" || o.method == "line2") {
    c["k_negatives"] = o.negatives;
  } else if (o.method == "g2g") {
    c["K_hops"] = o.hops;
    c["hidden"] = o.hidden;
    c["p_val"] = o.p_val;
    c["p_test"] = o.p_test;
  } else {
    c["gamma"] = o.gamma;
    c["energy"] = o.energy;
    c["corruption"] = o.corruption;
  }
  return c;
}

void write_config(const json& config, const fs::path& dir) {
  std::ofstream out = open_output(dir / "config.json");
  out << config.dump(2) << '\n';
}

void embed_walks(const EmbedOptions& o, const fs::path& dir) {
  Graph g = load_graph(o);
  const bool node2vec = o.method == "node2vec";
  WalkConfig wc;
  wc.num_walks = o.num_walks;
  wc.walk_length = o.walk_length;
  wc.window = o.window;
  wc.p = node2vec ? o.p : 1.0;
  wc.q = node2vec ? o.q : 1.0;
  wc.seed = o.seed;
  wc.threads = o.threads;
  wc.validate();

  SgnsConfig sc;
  sc.dim = o.dim.value_or(sc.dim);
  sc.epochs = o.epochs.value_or(sc.epochs);
  sc.learning_rate = o.lr.value_or(sc.learning_rate);
  sc.negatives = o.negatives;
  sc.window = o.window;
  sc.seed = o.seed;
  sc.threads = o.threads;
  sc.validate();

  TransitionTable table = preprocess_transition_probs(g, wc.p, wc.q);
  WalkCorpus corpus = simulate_walks(table, wc);
  PointEmbedding emb = train_skipgram(corpus, g.node_count(), sc);

  std::ofstream out = open_output(dir / "embedding.txt");
  write_word2vec(emb, g.ids(), out);
  write_ids(g.ids(), dir / "ids.tsv");
  EmbedOptions echo = o;
  if (!node2vec) echo.p = echo.q = 1.0;
  write_config(embed_config(echo, sc.dim, sc.epochs, sc.learning_rate), dir);
}

void embed_line(const EmbedOptions& o, const fs::path& dir) {
  Graph g = load_graph(o);
  LineConfig lc;
  lc.dim = o.dim.value_or(lc.dim);
  lc.epochs = o.epochs.value_or(lc.epochs);
  lc.learning_rate = o.lr.value_or(lc.learning_rate);
  lc.negatives = o.negatives;
  lc.seed = o.seed;
  lc.threads = o.threads;
  lc.validate();
  PointEmbedding emb = train_line(g, o.method == "line1" ? 1 : 2, lc);

  std::ofstream out = open_output(dir / "embedding.txt");
  write_word2vec(emb, g.ids(), out);
  write_ids(g.ids(), dir / "ids.tsv");
  write_config(embed_config(o, lc.dim, lc.epochs, lc.learning_rate), dir);
}

void embed_g2g(const EmbedOptions& o, const fs::path& dir) {
  if (o.attributes.empty() && !o.one_hot) {
    throw UsageError("g2g needs --attributes or --one-hot");
  }
  Graph g = load_graph(o);
  G2gConfig gc;
  gc.dim = o.dim.value_or(gc.dim);
  gc.epochs = o.epochs.value_or(gc.epochs);
  gc.learning_rate = o.lr.value_or(gc.learning_rate);
  gc.hidden = o.hidden;
  gc.max_hop = o.hops;
  gc.seed = o.seed;
  if (gc.dim % 2 != 0) throw UsageError("Gaussian methods need an even --dim");
  gc.validate();

  EdgeSplit split = split_edges(g, o.p_val, o.p_test, o.seed);
  Graph train = g.with_edges(split.train_edges);
  G2gModel model = train_g2g(train, gc);

  std::ofstream out = open_output(dir / "gaussian.txt");
  write_gaussian_embedding(model.embedding, g.ids(), out);
  write_ids(g.ids(), dir / "ids.tsv");
  write_variances(model.history, dir / "variances.csv");
  {
    std::ofstream edges = open_output(dir / "train_edges.txt");
    write_edge_list(train, edges);
  }
  write_pairs(g.ids(), split.val_edges, split.val_nonedges, dir / "val_pairs.txt");
  write_pairs(g.ids(), split.test_edges, split.test_nonedges, dir / "test_pairs.txt");
  write_config(embed_config(o, gc.dim, gc.epochs, gc.learning_rate), dir);
}

void embed_kg2e(const EmbedOptions& o, const fs::path& dir) {
  if (o.triples.empty()) throw UsageError("kg2e needs --triples");
  Kg2eConfig kc;
  kc.dim = o.dim.value_or(kc.dim);
  kc.epochs = o.epochs.value_or(kc.epochs);
  kc.learning_rate = o.lr.value_or(kc.learning_rate);
  kc.gamma = o.gamma;
  kc.energy = o.energy == "el" ? KgEnergy::kEL : KgEnergy::kKL;
  kc.mode = o.corruption == "bern" ? CorruptionMode::kBern : CorruptionMode::kUnif;
  kc.seed = o.seed;
  if (kc.dim % 2 != 0) throw UsageError("Gaussian methods need an even --dim");
  kc.validate();

  std::ifstream in = open_input(o.triples);
  KnowledgeTriples kg = load_triples(in);
  KgEmbedding model = train_kg2e(kg, kc);

  {
    std::ofstream out = open_output(dir / "gaussian.txt");
    write_gaussian_embedding(model.entities, kg.entities, out);
  }
  {
    std::ofstream out = open_output(dir / "relations.txt");
    write_gaussian_embedding(model.relations, kg.relations, out);
  }
  write_ids(kg.entities, dir / "ids.tsv");
  write_variances(model.history, dir / "variances.csv");
  write_config(embed_config(o, kc.dim, kc.epochs, kc.learning_rate), dir);
}

int run_embed(const EmbedOptions& o) {
  if (o.out_dir.empty()) throw UsageError("--out is required");
  fs::create_directories(o.out_dir);
  const fs::path dir(o.out_dir);
  if (o.method == "deepwalk" || o.method == "node2vec") {
    embed_walks(o, dir);
  } else if (o.method == "line1" || o.method == "line2") {
    embed_line(o, dir);
  } else if (o.method == "g2g") {
    embed_g2g(o, dir);
  } else {
    embed_kg2e(o, dir);
  }
  return 0;
}

// Point tables load as is; Gaussian tables keep both halves.
struct LoadedEmbedding {
  EmbeddingTable table;
  GaussianEmbedding gaussian;
  bool is_gaussian{false};

  // Point rows, or Gaussian means.
  RowMatrix features() const {
    const std::size_t cols = is_gaussian ? gaussian.half_dim : table.cols;
    RowMatrix m(static_cast<Eigen::Index>(table.rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < table.rows; ++r) {
      auto row = table.row(r);
      for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    }
    return m;
  }
};

LoadedEmbedding load_embedding(const std::string& path, bool gaussian) {
  if (path.empty()) throw UsageError("--embedding is required");
  std::ifstream in = open_input(path);
  LoadedEmbedding e;
  e.table = read_embedding_table(in);
  e.is_gaussian = gaussian;
  if (!gaussian) return e;
  if (e.table.cols % 2 != 0) throw ValidationError("Gaussian embedding needs an even column count");
  GaussianEmbedding& g = e.gaussian;
  g.count = e.table.rows;
  g.half_dim = e.table.cols / 2;
  for (std::size_t r = 0; r < g.count; ++r) {
    auto row = e.table.row(r);
    g.mu.insert(g.mu.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(g.half_dim));
    g.sigma.insert(g.sigma.end(), row.begin() + static_cast<std::ptrdiff_t>(g.half_dim), row.end());
  }
  g.validate();
  return e;
}

NodeId lookup(const IdMap& ids, const std::string& name, std::size_t line_no) {
  auto id = ids.find(name);
  if (!id) throw ValidationError("line " + std::to_string(line_no) + ": id '" + name + "' is not in the embedding");
  return *id;
}

std::vector<int> load_label_vector(const std::string& path, const IdMap& ids) {
  Graph holder = Graph::from_edges(ids.size(), {}, false, false, ids);
  std::ifstream in = open_input(path);
  return load_labels(holder, in).labels();
}

MetricsReport eval_linkpred(const EvalOptions& o, const LoadedEmbedding& e) {
  if (o.pairs.empty()) throw UsageError("linkpred needs --pairs");
  std::ifstream in = open_input(o.pairs);
  std::vector<LabeledScore> scored;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string u, v;
    int label = -1;
    if (!(ls >> u)) continue;
    if (u[0] == '#') continue;
    if (!(ls >> v >> label) || (label != 0 && label != 1)) {
      throw ParseError(line_no, "expected 'u v label' with label 0 or 1");
    }
    const NodeId a = lookup(e.table.ids, u, line_no);
    const NodeId b = lookup(e.table.ids, v, line_no);
    const double score = e.is_gaussian ? -g2g_energy(e.gaussian, a, b)
                                       : similarity(e.table.row(a), e.table.row(b), Similarity::kDot);
    scored.push_back({label, score});
  }
  LinkPredictionScores s = link_prediction(scored);
  MetricsReport r;
  r.task = "linkpred";
  r.metrics = {{"auc", s.auc}, {"ap", s.ap}};
  r.config = {{"pairs", o.pairs}, {"score", e.is_gaussian ? "neg_kl" : "dot"}, {"pair_count", scored.size()}};
  return r;
}

MetricsReport eval_nodeclf(const EvalOptions& o, const LoadedEmbedding& e) {
  if (o.labels.empty()) throw UsageError("nodeclf needs --labels");
  std::vector<int> labels = load_label_vector(o.labels, e.table.ids);
  NodeClassificationConfig c;
  c.repeats = o.repeats;
  c.train_fraction = o.train_fraction;
  c.seed = o.seed;
  ClassificationScores s = node_classification(e.features(), labels, c);
  MetricsReport r;
  r.task = "nodeclf";
  r.metrics = {{"f1_micro", s.f1_micro}, {"f1_macro", s.f1_macro}};
  r.config = {{"labels", o.labels}, {"repeats", c.repeats}, {"train_fraction", c.train_fraction},
              {"l2", c.l2}, {"steps", c.steps}, {"normalize", c.normalize}};
  r.seeds = {o.seed};
  return r;
}

MetricsReport eval_cluster(const EvalOptions& o, const LoadedEmbedding& e) {
  std::vector<int> labels;
  if (!o.labels.empty()) labels = load_label_vector(o.labels, e.table.ids);
  int k = o.k;
  if (k == 0) {
    if (labels.empty()) throw UsageError("cluster needs --k or --labels");
    std::set<int> classes(labels.begin(), labels.end());
    classes.erase(kUnlabeled);
    k = static_cast<int>(classes.size());
  }
  RowMatrix x = e.features();
  KMeansResult km = kmeans(x, k, o.seed);
  MetricsReport r;
  r.task = "cluster";
  r.metrics["inertia"] = km.inertia;
  r.metrics["silhouette"] = silhouette(x, km.assignments);
  if (!labels.empty()) {
    std::vector<int> predicted, truth;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == kUnlabeled) continue;
      predicted.push_back(km.assignments[i]);
      truth.push_back(labels[i]);
    }
    AgreementScores a = nmi_and_accuracy(predicted, truth);
    r.metrics["nmi"] = a.nmi;
    r.metrics["accuracy"] = a.accuracy;
  }
  r.config = {{"k", k}, {"labels", o.labels}, {"iterations", km.iterations}};
  r.seeds = {o.seed};
  return r;
}

void emit_report(MetricsReport& r, const std::string& path) {
  if (path.empty()) {
    write_report(r, std::cout);
    return;
  }
  std::ofstream out = open_output(path);
  write_report(r, out);
}

int run_eval(const EvalOptions& o) {
  LoadedEmbedding e = load_embedding(o.embedding, o.gaussian);
  MetricsReport r;
  if (o.task == "linkpred") {
    r = eval_linkpred(o, e);
  } else if (o.task == "nodeclf") {
    r = eval_nodeclf(o, e);
  } else {
    r = eval_cluster(o, e);
  }
  r.config["embedding"] = o.embedding;
  r.config["gaussian"] = o.gaussian;
  emit_report(r, o.out);
  return 0;
}

int run_project(const ProjectOptions& o) {
  LoadedEmbedding e = load_embedding(o.embedding, o.gaussian);
  if (o.out.empty()) throw UsageError("--out is required");
  Projection p = pca_project(e.features(), o.dim);
  std::ofstream out = open_output(o.out);
  out << "id";
  static const char* kAxes[] = {"x", "y", "z"};
  for (std::size_t c = 0; c < o.dim; ++c) {
    if (c < 3) {
      out << '\t' << kAxes[c];
    } else {
      out << "\tc" << c;
    }
  }
  if (e.is_gaussian) out << "\tuncertainty";
  out << '\n';
  out.precision(10);
  for (std::size_t r = 0; r < e.table.rows; ++r) {
    out << e.table.ids.name(static_cast<NodeId>(r));
    for (std::size_t c = 0; c < o.dim; ++c) {
      out << '\t' << p.coordinates(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    if (e.is_gaussian) {
      auto s = e.gaussian.sigma_row(r);
      double mean = 0.0;
      for (double v : s) mean += v;
      out << '\t' << mean / static_cast<double>(s.size());
    }
    out << '\n';
  }
  return 0;
}

int run_stability(const StabilityOptions& o) {
  if (o.snapshots.empty()) throw UsageError("--snapshots is required");
  SnapshotSequence seq = load_snapshot_dir(o.snapshots, o.directed, o.weighted);
  if (o.embeddings.size() != seq.snapshots.size()) {
    throw UsageError("expected " + std::to_string(seq.snapshots.size()) + " embedding files, got " +
                     std::to_string(o.embeddings.size()));
  }
  std::vector<RowMatrix> matrices;
  std::size_t cols = 0;
  for (std::size_t t = 0; t < o.embeddings.size(); ++t) {
    std::ifstream in = open_input(o.embeddings[t]);
    EmbeddingTable table = read_embedding_table(in);
    if (t == 0) cols = table.cols;
    if (table.cols != cols) throw ValidationError("embedding dimensions differ between snapshots");
    RowMatrix m = RowMatrix::Zero(static_cast<Eigen::Index>(seq.ids.size()), static_cast<Eigen::Index>(cols));
    std::vector<bool> covered(seq.ids.size(), false);
    for (std::size_t r = 0; r < table.rows; ++r) {
      auto id = seq.ids.find(table.ids.name(static_cast<NodeId>(r)));
      if (!id) continue;
      covered[*id] = true;
      auto row = table.row(r);
      for (std::size_t c = 0; c < cols; ++c) m(*id, static_cast<Eigen::Index>(c)) = row[c];
    }
    // Transition t needs rows for V_t in f_t, and transition t-1 needs V_{t-1} in f_t.
    for (NodeId v = 0; v < seq.ids.size(); ++v) {
      const bool needed = seq.present[t][v] || (t > 0 && seq.present[t - 1][v]);
      if (needed && !covered[v]) {
        throw ValidationError("embedding " + o.embeddings[t] + " lacks node '" + seq.ids.name(v) + "'");
      }
    }
    matrices.push_back(std::move(m));
  }
  StabilityResult s = stability_constant(seq, matrices);
  MetricsReport r;
  r.task = "stability";
  r.metrics["stability_constant"] = s.constant;
  json transitions = json::array();
  for (std::size_t t = 0; t < s.ratios.size(); ++t) {
    transitions.push_back({{"from", seq.labels[t]}, {"to", seq.labels[t + 1]}, {"relative_stability", s.ratios[t]}});
  }
  r.config = {{"snapshots", o.snapshots}, {"embeddings", o.embeddings}, {"transitions", transitions}};
  emit_report(r, o.out);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"graphemb: graph embedding and evaluation toolkit"};
  app.require_subcommand(1);

  EmbedOptions eo;
  auto* embed = app.add_subcommand("embed", "Train an embedding and write its artifacts");
  embed->add_option("--method", eo.method, "deepwalk|node2vec|line1|line2|g2g|kg2e")->required();
  embed->add_option("--edges", eo.edges, "Edge list 'src dst [weight]'");
  embed->add_option("--attributes", eo.attributes, "Sparse attributes 'node feature value'");
  embed->add_option("--labels", eo.labels, "Node labels 'node label'");
  embed->add_option("--triples", eo.triples, "Knowledge triples 'head relation tail'");
  embed->add_flag("--directed", eo.directed);
  embed->add_flag("--weighted", eo.weighted);
  embed->add_flag("--one-hot", eo.one_hot, "Allow g2g without attributes (identity features)");
  embed->add_option("--out", eo.out_dir, "Output directory")->required();
  embed->add_option("-L,--dim", eo.dim, "Embedding size L (Gaussian: L/2 mean + L/2 variance)");
  embed->add_option("--num-walks", eo.num_walks)->capture_default_str();
  embed->add_option("--walk-length", eo.walk_length)->capture_default_str();
  embed->add_option("--window", eo.window)->capture_default_str();
  embed->add_option("--p", eo.p, "Return parameter")->capture_default_str();
  embed->add_option("--q", eo.q, "In-out parameter")->capture_default_str();
  embed->add_option("--negatives", eo.negatives, "Negative samples per positive")->capture_default_str();
  embed->add_option("--hops", eo.hops, "Hop horizon K for g2g triplets")->capture_default_str();
  embed->add_option("--epochs", eo.epochs);
  embed->add_option("--lr", eo.lr);
  embed->add_option("--gamma", eo.gamma, "kg2e margin")->capture_default_str();
  embed->add_option("--energy", eo.energy)->check(CLI::IsMember({"kl", "el"}))->capture_default_str();
  embed->add_option("--corruption", eo.corruption)->check(CLI::IsMember({"unif", "bern"}))->capture_default_str();
  embed->add_option("--hidden", eo.hidden, "g2g hidden layer sizes")->capture_default_str();
  embed->add_option("--p-val", eo.p_val)->capture_default_str();
  embed->add_option("--p-test", eo.p_test)->capture_default_str();
  embed->add_option("--seed", eo.seed)->capture_default_str();
  embed->add_option("--threads", eo.threads)->capture_default_str();

  EvalOptions vo;
  auto* eval = app.add_subcommand("eval", "Evaluate an embedding");
  eval->add_option("--task", vo.task, "linkpred|nodeclf|cluster")
      ->required()
      ->check(CLI::IsMember({"linkpred", "nodeclf", "cluster"}));
  eval->add_option("--embedding", vo.embedding)->required();
  eval->add_flag("--gaussian", vo.gaussian, "Embedding file holds mu and sigma halves");
  eval->add_option("--pairs", vo.pairs, "Scored pairs 'u v label'");
  eval->add_option("--labels", vo.labels, "Node labels 'node label'");
  eval->add_option("--k", vo.k, "Cluster count (default: number of label classes)");
  eval->add_option("--repeats", vo.repeats)->capture_default_str();
  eval->add_option("--train-fraction", vo.train_fraction)->capture_default_str();
  eval->add_option("--seed", vo.seed)->capture_default_str();
  eval->add_option("--out", vo.out, "Report path (default stdout)");

  ProjectOptions po;
  auto* project = app.add_subcommand("project", "PCA projection to a coordinates TSV");
  project->add_option("--embedding", po.embedding)->required();
  project->add_flag("--gaussian", po.gaussian);
  project->add_option("--dim", po.dim)->capture_default_str();
  project->add_option("--out", po.out)->required();

  StabilityOptions so;
  auto* stability = app.add_subcommand("stability", "Stability constant over snapshot embeddings");
  stability->add_option("--snapshots", so.snapshots, "Directory of snapshot edge lists")->required();
  stability->add_option("--embeddings", so.embeddings, "One embedding file per snapshot, in order")->required();
  stability->add_flag("--directed", so.directed);
  stability->add_flag("--weighted", so.weighted);
  stability->add_option("--out", so.out, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  static const std::set<std::string> kMethods{"deepwalk", "node2vec", "line1", "line2", "g2g", "kg2e"};
  try {
    if (embed->parsed()) {
      if (!kMethods.contains(eo.method)) throw UsageError("unknown method '" + eo.method + "'");
      return run_embed(eo);
    }
    if (eval->parsed()) return run_eval(vo);
    if (project->parsed()) return run_project(po);
    return run_stability(so);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace
}  // namespace graphemb

int main(int argc, char** argv) { return graphemb::run(argc, argv); }

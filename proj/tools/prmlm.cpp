// Copyright 2026 The prmlm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: train/evaluate bigram models, build similarity
// matrices, score texts with the probability ratio measure, cluster words,
// and run the recognizer simulation. Every subcommand writes a report whose
// header echoes the resolved configuration; identical invocations produce
// byte-identical output.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "prmlm/cluster.hpp"
#include "prmlm/corpus.hpp"
#include "prmlm/demo.hpp"
#include "prmlm/ngram.hpp"
#include "prmlm/numeric.hpp"
#include "prmlm/prm.hpp"
#include "prmlm/recognizer.hpp"
#include "prmlm/report.hpp"
#include "prmlm/similarity.hpp"
#include "prmlm/spearman.hpp"
#include "prmlm/types.hpp"
#include "prmlm/vocab.hpp"

namespace {

using namespace prmlm;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << content;
}

std::vector<std::string> load_lines(const std::string& path, bool lowercase) {
  std::vector<std::string> lines = read_corpus_file(path);
  if (lowercase) {
    for (auto& line : lines) line = to_lower_ascii(line);
  }
  return lines;
}

ReportFormat parse_format(const std::string& format) {
  if (format == "tsv") return ReportFormat::kTsv;
  if (format == "json") return ReportFormat::kJson;
  throw CLI::ValidationError("--format", "expected 'tsv' or 'json'");
}

PrmForm parse_form(const std::string& form) {
  if (form == "direct") return PrmForm::kDirect;
  if (form == "regrouped") return PrmForm::kRegrouped;
  throw CLI::ValidationError("--form", "expected 'direct' or 'regrouped'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Shared flags for commands that need a similarity source.
struct SimSource {
  std::string sim_path;
  bool proxy = false;
  double temperature = 0.5;
  double threshold = 0.05;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--sim", sim_path, "similarity matrix file (TSV)");
    cmd->add_flag("--proxy", proxy,
                  "derive similarity from spelling edit distance");
    cmd->add_option("--temperature", temperature,
                    "proxy similarity temperature")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--threshold", threshold,
                    "proxy scores below this are dropped")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  }

  SimilarityMatrix build(const Vocabulary& vocab) const {
    if (!sim_path.empty() && proxy) {
      throw CLI::ValidationError("--sim", "give either --sim or --proxy");
    }
    if (!sim_path.empty()) {
      return load_similarity_file(sim_path, vocab).matrix;
    }
    if (proxy) return proxy_similarity(vocab, temperature, threshold);
    throw CLI::ValidationError("similarity",
                               "a similarity source is required: --sim FILE or --proxy");
  }

  void echo(ReportBuilder& report) const {
    if (!sim_path.empty()) {
      report.config("sim", sim_path);
    } else {
      report.config("sim", "proxy");
      report.config("temperature", fmt_exact(temperature));
      report.config("threshold", fmt_exact(threshold));
    }
  }
};

int run_train(const std::string& corpus_path, double alpha,
              std::size_t min_count, bool lowercase,
              const std::string& out_path) {
  auto lines = load_lines(corpus_path, lowercase);
  Vocabulary vocab = Vocabulary::build(lines, min_count);
  EncodedCorpus corpus = encode_corpus(lines, vocab);
  BigramModel model(vocab, count_bigrams(corpus, vocab), alpha);

  std::ostringstream out;
  std::vector<std::string> comments = {
      std::string("tool: ") + kToolName + " " + kToolVersion,
      "corpus: " + corpus_path,
      "min-count: " + std::to_string(min_count),
      "lowercase: " + yes_no(lowercase),
      "vocabulary: " + std::to_string(vocab.size()) + " words (" +
          std::to_string(vocab.content_size()) + " content)",
      "positions: " + std::to_string(model.counts().total_positions),
  };
  save_model(model, out, comments);
  write_output(out_path, out.str());
  return 0;
}

int run_ppl(const std::string& model_path, const std::string& corpus_path,
            bool lowercase, const std::string& format,
            const std::string& out_path) {
  LoadedCounts loaded = load_model_file(model_path);
  BigramModel model(loaded.vocab, loaded.counts, loaded.alpha);
  EncodedCorpus corpus =
      encode_corpus(load_lines(corpus_path, lowercase), loaded.vocab);

  ReportBuilder report("ppl", parse_format(format));
  report.config("model", model_path);
  report.config("corpus", corpus_path);
  report.config("alpha", fmt_exact(model.alpha()));
  report.config("lowercase", yes_no(lowercase));

  report.section("utterances", {"utt-id", "positions", "log-prob", "ppl"});
  for (std::size_t u = 0; u < corpus.sentences.size(); ++u) {
    const auto& sentence = corpus.sentences[u];
    double lp = model.sentence_log_prob(sentence);
    std::size_t positions = sentence.size() - 1;
    report.row({"u" + std::to_string(u), std::to_string(positions),
                fmt_fixed(lp, 6),
                fmt_fixed(std::exp(-lp / static_cast<double>(positions)), 6)});
  }
  PerplexityResult total = perplexity(model, corpus);
  report.row({"ALL", std::to_string(total.positions),
              fmt_fixed(total.log_prob, 6), fmt_fixed(total.perplexity, 6)});
  write_output(out_path, report.render());
  return 0;
}

int run_prm(const std::string& model_path, const std::string& corpus_path,
            const SimSource& sim_source, std::size_t nb_simil,
            const std::string& form, bool lowercase, const std::string& format,
            const std::string& out_path) {
  if (nb_simil == 0) {
    std::cerr << "prm: --nbsimil 0 makes the measure coincide with "
                 "perplexity; use the ppl command instead\n";
    return 1;
  }
  LoadedCounts loaded = load_model_file(model_path);
  BigramModel model(loaded.vocab, loaded.counts, loaded.alpha);
  EncodedCorpus corpus =
      encode_corpus(load_lines(corpus_path, lowercase), loaded.vocab);
  SimilarityMatrix sim = sim_source.build(loaded.vocab);

  PrmConfig config;
  config.nb_simil = nb_simil;
  config.form = parse_form(form);

  ReportBuilder report("prm", parse_format(format));
  report.config("model", model_path);
  report.config("corpus", corpus_path);
  report.config("alpha", fmt_exact(model.alpha()));
  sim_source.echo(report);
  report.config("nbsimil", std::to_string(nb_simil));
  report.config("form", form);
  report.config("lowercase", yes_no(lowercase));

  report.section("utterances",
                 {"utt-id", "positions", "log-prm", "log-prm-per-word"});
  double total_log = 0.0;
  std::size_t total_positions = 0;
  for (std::size_t u = 0; u < corpus.sentences.size(); ++u) {
    PrmScore score =
        prm_score_sentence(model, sim, corpus.sentences[u], config);
    report.row({"u" + std::to_string(u),
                std::to_string(score.positions_scored),
                fmt_fixed(score.log_value, 6), fmt_fixed(score.per_word(), 6)});
    total_log += score.log_value;
    total_positions += score.positions_scored;
  }
  PrmScore total = prm_score(model, sim, corpus, config);
  report.row({"ALL", std::to_string(total.positions_scored),
              fmt_fixed(total.log_value, 6), fmt_fixed(total.per_word(), 6)});
  write_output(out_path, report.render());
  return 0;
}

int run_sim_matrix(const std::string& corpus_path,
                   const std::string& model_path, std::size_t min_count,
                   bool lowercase, double temperature, double threshold,
                   const std::string& out_path) {
  std::optional<LoadedCounts> loaded;
  std::optional<Vocabulary> built;
  if (!model_path.empty()) {
    loaded = load_model_file(model_path);
  } else if (!corpus_path.empty()) {
    built = Vocabulary::build(load_lines(corpus_path, lowercase), min_count);
  } else {
    throw CLI::ValidationError("sim-matrix",
                               "a vocabulary source is required: --corpus FILE or --model FILE");
  }
  const Vocabulary& vocab = loaded ? loaded->vocab : *built;
  SimilarityMatrix matrix = proxy_similarity(vocab, temperature, threshold);

  std::ostringstream out;
  out << "# " << kToolName << " " << kToolVersion << " sim-matrix\n";
  if (!model_path.empty()) {
    out << "# model: " << model_path << "\n";
  } else {
    out << "# corpus: " << corpus_path << "\n";
    out << "# min-count: " << min_count << "\n";
    out << "# lowercase: " << yes_no(lowercase) << "\n";
  }
  out << "# temperature: " << fmt_exact(temperature) << "\n";
  out << "# threshold: " << fmt_exact(threshold) << "\n";
  out << "# pairs: " << matrix.pair_count() << "\n";
  save_similarity(matrix, out);
  write_output(out_path, out.str());
  return 0;
}

int run_correlate(const std::string& pairs_path, const std::string& format,
                  const std::string& out_path) {
  std::ifstream in(pairs_path);
  if (!in) throw DataError("cannot open pairs file: " + pairs_path);
  PairedSamples samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 3) {
      throw DataError("line " + std::to_string(line_no) +
                      ": expected 'id measure accuracy'");
    }
    char* end = nullptr;
    std::string xs(tokens[1]), ys(tokens[2]);
    double x = std::strtod(xs.c_str(), &end);
    if (end != xs.c_str() + xs.size()) {
      throw DataError("line " + std::to_string(line_no) + ": bad measure '" +
                      xs + "'");
    }
    double y = std::strtod(ys.c_str(), &end);
    if (end != ys.c_str() + ys.size()) {
      throw DataError("line " + std::to_string(line_no) + ": bad accuracy '" +
                      ys + "'");
    }
    samples.labels.emplace_back(tokens[0]);
    samples.pairs.emplace_back(x, y);
  }
  if (samples.pairs.size() < 3) {
    throw DataError("need at least 3 sample rows, got " +
                    std::to_string(samples.pairs.size()));
  }
  double r = spearman(samples);

  ReportBuilder report("correlate", parse_format(format));
  report.config("pairs", pairs_path);
  report.config("n", std::to_string(samples.pairs.size()));
  report.section("correlation", {"statistic", "value"});
  report.row({"r_s", fmt_fixed(r, 4)});
  write_output(out_path, report.render());
  return 0;
}

int run_cluster(const std::string& corpus_path, std::size_t num_classes,
                const std::string& objective_name, std::size_t nb_simil,
                const SimSource& sim_source, double alpha,
                std::size_t max_passes, std::uint64_t seed,
                std::size_t min_count, bool lowercase,
                const std::string& format, const std::string& out_path) {
  auto lines = load_lines(corpus_path, lowercase);
  Vocabulary vocab = Vocabulary::build(lines, min_count);
  EncodedCorpus corpus = encode_corpus(lines, vocab);

  Objective objective;
  std::optional<SimilarityMatrix> sim;
  if (objective_name == "likelihood") {
    objective.kind = ObjectiveKind::kLikelihood;
  } else if (objective_name == "prm") {
    objective.kind = ObjectiveKind::kPrmDerived;
    sim = sim_source.build(vocab);
    objective.sim = &*sim;
    objective.nb_simil = nb_simil;
  } else {
    throw CLI::ValidationError("--objective",
                               "expected 'likelihood' or 'prm'");
  }

  ExchangeOptions options;
  options.num_classes = num_classes;
  options.alpha = alpha;
  options.max_passes = max_passes;
  options.seed = seed;
  ExchangeResult result = exchange_cluster(corpus, vocab, objective, options);

  ReportBuilder report("cluster", parse_format(format));
  report.config("corpus", corpus_path);
  report.config("classes", std::to_string(num_classes));
  report.config("objective", objective_name);
  if (objective.kind == ObjectiveKind::kPrmDerived) {
    sim_source.echo(report);
    report.config("nbsimil", std::to_string(nb_simil));
  }
  report.config("alpha", fmt_exact(alpha));
  report.config("max-passes", std::to_string(max_passes));
  report.config("seed", std::to_string(seed));
  report.config("min-count", std::to_string(min_count));
  report.config("lowercase", yes_no(lowercase));
  for (std::size_t p = 0; p < result.pass_objectives.size(); ++p) {
    report.note("pass " + std::to_string(p + 1) +
                " objective: " + fmt_fixed(result.pass_objectives[p], 6));
  }
  report.note("moves: " + std::to_string(result.moves));
  report.note("final objective: " + fmt_fixed(result.final_objective, 6));

  report.section("classes", {"word", "class"});
  for (WordId w = Vocabulary::kFirstContent; w < vocab.size(); ++w) {
    report.row({vocab.surface(w),
                std::to_string(result.classes.assignment[w])});
  }
  write_output(out_path, report.render());
  return 0;
}

struct SimulateArgs {
  std::string model_path;
  std::string corpus_path;
  SimSource sim_source;
  double sigma = 0.5;
  std::uint64_t seed = 42;
  std::vector<std::size_t> measure_sizes = {0, 10, 20};
  std::size_t decode_nb_simil = 10;
  std::string context = "bigram";
  std::string form = "direct";
  bool lowercase = false;
  std::string format = "tsv";
  std::string out_path = "-";
};

void echo_experiment_config(ReportBuilder& report, const SimulateArgs& args,
                            const ExperimentConfig& config) {
  report.config("sigma", fmt_exact(config.sigma));
  report.config("seed", std::to_string(config.seed));
  std::string sizes;
  for (std::size_t i = 0; i < config.measure_sizes.size(); ++i) {
    if (i) sizes += ",";
    sizes += std::to_string(config.measure_sizes[i]);
  }
  report.config("nbsimil", sizes);
  report.config("decode-nbsimil", std::to_string(config.decode_nb_simil));
  report.config("context", config.decode_context == ContextMode::kBigram
                               ? "bigram"
                               : "unigram");
  report.config("form",
                config.form == PrmForm::kDirect ? "direct" : "regrouped");
  report.config("lowercase", yes_no(args.lowercase));
}

void emit_utterance_section(ReportBuilder& report,
                            const ExperimentReport& result) {
  std::vector<std::string> columns = {"utt-id", "positions", "accuracy"};
  for (const auto& name : result.measure_names) columns.push_back(name);
  report.section("utterances", std::move(columns));
  for (const auto& row : result.rows) {
    std::vector<std::string> cells = {row.utterance_id,
                                      std::to_string(row.positions),
                                      fmt_fixed(row.accuracy, 6),
                                      fmt_fixed(row.ppl, 6)};
    for (double m : row.measures) cells.push_back(fmt_fixed(m, 6));
    report.row(std::move(cells));
  }
  std::vector<std::string> all = {"ALL", "-",
                                  fmt_fixed(result.overall_accuracy, 6),
                                  fmt_fixed(result.corpus_ppl, 6)};
  for (double m : result.corpus_measures) all.push_back(fmt_fixed(m, 6));
  report.row(std::move(all));
}

void emit_correlation_section(ReportBuilder& report,
                              const ExperimentReport& result) {
  report.section("correlations", {"measure", "r_s", "note"});
  for (const auto& corr : result.correlations) {
    report.row({corr.measure, corr.defined ? fmt_fixed(corr.r_s, 4) : "NA",
                corr.defined ? "-" : corr.note});
  }
}

ExperimentConfig experiment_config_from(const SimulateArgs& args) {
  ExperimentConfig config;
  config.measure_sizes = args.measure_sizes;
  config.decode_nb_simil = args.decode_nb_simil;
  if (args.context == "bigram") {
    config.decode_context = ContextMode::kBigram;
  } else if (args.context == "unigram") {
    config.decode_context = ContextMode::kUnigram;
  } else {
    throw CLI::ValidationError("--context", "expected 'bigram' or 'unigram'");
  }
  config.form = parse_form(args.form);
  config.sigma = args.sigma;
  config.seed = args.seed;
  return config;
}

int run_simulate(const SimulateArgs& args) {
  LoadedCounts loaded = load_model_file(args.model_path);
  BigramModel model(loaded.vocab, loaded.counts, loaded.alpha);
  EncodedCorpus corpus =
      encode_corpus(load_lines(args.corpus_path, args.lowercase), loaded.vocab);
  SimilarityMatrix sim = args.sim_source.build(loaded.vocab);
  ExperimentConfig config = experiment_config_from(args);
  ExperimentReport result = run_experiment(model, sim, corpus, config);

  ReportBuilder report("simulate", parse_format(args.format));
  report.config("model", args.model_path);
  report.config("corpus", args.corpus_path);
  report.config("alpha", fmt_exact(model.alpha()));
  args.sim_source.echo(report);
  echo_experiment_config(report, args, config);
  report.note("overall accuracy: " + fmt_fixed(result.overall_accuracy, 6));
  emit_utterance_section(report, result);
  write_output(args.out_path, report.render());
  return 0;
}

struct ExperimentArgs {
  bool demo = false;
  std::string train_path;
  std::string test_path;
  double alpha = 0.5;
  std::size_t min_count = 1;
  SimulateArgs sim_args;  // reuses the simulate flag set minus model/corpus
};

int run_experiment_cmd(const ExperimentArgs& args) {
  ReportBuilder report("experiment", parse_format(args.sim_args.format));

  std::vector<std::string> train_lines, test_lines;
  double alpha = args.alpha;
  std::optional<ExperimentConfig> config;
  std::optional<SimSource> sim_source;

  if (args.demo) {
    DemoFixture fixture = make_demo_fixture(args.sim_args.seed);
    train_lines = std::move(fixture.train_lines);
    test_lines = std::move(fixture.test_lines);
    alpha = fixture.alpha;
    config = fixture.experiment;
    SimSource source;
    source.proxy = true;
    source.temperature = fixture.temperature;
    sim_source = source;
    report.config("demo", "yes");
  } else {
    if (args.train_path.empty() || args.test_path.empty()) {
      throw CLI::ValidationError("experiment",
                                 "need --train and --test (or --demo)");
    }
    train_lines = load_lines(args.train_path, args.sim_args.lowercase);
    test_lines = load_lines(args.test_path, args.sim_args.lowercase);
    config = experiment_config_from(args.sim_args);
    sim_source = args.sim_args.sim_source;
    report.config("train", args.train_path);
    report.config("test", args.test_path);
    report.config("min-count", std::to_string(args.min_count));
  }

  Vocabulary vocab = Vocabulary::build(train_lines, args.demo ? 1 : args.min_count);
  EncodedCorpus train = encode_corpus(train_lines, vocab);
  EncodedCorpus test = encode_corpus(test_lines, vocab);
  BigramModel model(vocab, count_bigrams(train, vocab), alpha);
  SimilarityMatrix sim = sim_source->build(vocab);
  ExperimentReport result = run_experiment(model, sim, test, *config);

  report.config("alpha", fmt_exact(alpha));
  sim_source->echo(report);
  SimulateArgs echo_args = args.sim_args;
  echo_experiment_config(report, echo_args, *config);
  report.note("overall accuracy: " + fmt_fixed(result.overall_accuracy, 6));
  emit_utterance_section(report, result);
  emit_correlation_section(report, result);
  write_output(args.sim_args.out_path, report.render());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigram language model evaluation toolkit"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  int exit_code = 0;

  // train
  struct {
    std::string corpus;
    double alpha = 0.5;
    std::size_t min_count = 1;
    bool lowercase = false;
    std::string out = "-";
  } train;
  {
    auto* cmd = app.add_subcommand("train",
                                   "count bigrams and write a model file");
    cmd->add_option("--corpus", train.corpus, "training text, one sentence per line")
        ->required();
    cmd->add_option("--alpha", train.alpha, "additive smoothing weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--min-count", train.min_count,
                    "keep words occurring at least this often")
        ->capture_default_str();
    cmd->add_flag("--lowercase", train.lowercase, "ASCII case folding");
    cmd->add_option("--out", train.out, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() {
      exit_code = run_train(train.corpus, train.alpha, train.min_count,
                            train.lowercase, train.out);
    });
  }

  // ppl
  struct {
    std::string model, corpus;
    bool lowercase = false;
    std::string format = "tsv";
    std::string out = "-";
  } ppl;
  {
    auto* cmd = app.add_subcommand("ppl", "perplexity of a test text");
    cmd->add_option("--model", ppl.model, "model file")->required();
    cmd->add_option("--corpus", ppl.corpus, "test text")->required();
    cmd->add_flag("--lowercase", ppl.lowercase, "ASCII case folding");
    cmd->add_option("--format", ppl.format, "tsv or json")
        ->capture_default_str();
    cmd->add_option("--out", ppl.out, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() {
      exit_code = run_ppl(ppl.model, ppl.corpus, ppl.lowercase, ppl.format,
                          ppl.out);
    });
  }

  // prm
  struct {
    std::string model, corpus;
    SimSource sim;
    std::size_t nb_simil = 10;
    std::string form = "direct";
    bool lowercase = false;
    std::string format = "tsv";
    std::string out = "-";
  } prm;
  {
    auto* cmd = app.add_subcommand(
        "prm", "probability ratio measure of a test text");
    cmd->add_option("--model", prm.model, "model file")->required();
    cmd->add_option("--corpus", prm.corpus, "test text")->required();
    prm.sim.add_flags(cmd);
    cmd->add_option("--nbsimil", prm.nb_simil,
                    "confusable set size (0 is refused; that is perplexity)")
        ->capture_default_str();
    cmd->add_option("--form", prm.form, "direct or regrouped")
        ->capture_default_str();
    cmd->add_flag("--lowercase", prm.lowercase, "ASCII case folding");
    cmd->add_option("--format", prm.format, "tsv or json")
        ->capture_default_str();
    cmd->add_option("--out", prm.out, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() {
      exit_code = run_prm(prm.model, prm.corpus, prm.sim, prm.nb_simil,
                          prm.form, prm.lowercase, prm.format, prm.out);
    });
  }

  // sim-matrix
  struct {
    std::string corpus, model;
    std::size_t min_count = 1;
    bool lowercase = false;
    double temperature = 0.5;
    double threshold = 0.05;
    std::string out = "-";
  } simm;
  {
    auto* cmd = app.add_subcommand(
        "sim-matrix", "spelling-proxy similarity matrix for a vocabulary");
    cmd->add_option("--corpus", simm.corpus, "corpus to build the vocabulary from");
    cmd->add_option("--model", simm.model, "model file to take the vocabulary from");
    cmd->add_option("--min-count", simm.min_count,
                    "vocabulary cutoff (with --corpus)")
        ->capture_default_str();
    cmd->add_flag("--lowercase", simm.lowercase, "ASCII case folding");
    cmd->add_option("--temperature", simm.temperature,
                    "proxy similarity temperature")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--threshold", simm.threshold,
                    "scores below this are dropped")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--out", simm.out, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() {
      exit_code = run_sim_matrix(simm.corpus, simm.model, simm.min_count,
                                 simm.lowercase, simm.temperature,
                                 simm.threshold, simm.out);
    });
  }

  // correlate
  struct {
    std::string pairs;
    std::string format = "tsv";
    std::string out = "-";
  } correlate;
  {
    auto* cmd = app.add_subcommand(
        "correlate", "rank correlation of a measure against accuracy");
    cmd->add_option("--pairs", correlate.pairs,
                    "TSV with rows 'id measure accuracy'")
        ->required();
    cmd->add_option("--format", correlate.format, "tsv or json")
        ->capture_default_str();
    cmd->add_option("--out", correlate.out, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() {
      exit_code =
          run_correlate(correlate.pairs, correlate.format, correlate.out);
    });
  }

  // cluster
  struct {
    std::string corpus;
    std::size_t classes = 2;
    std::string objective = "likelihood";
    std::size_t nb_simil = 5;
    SimSource sim;
    double alpha = 0.5;
    std::size_t max_passes = 20;
    std::uint64_t seed = 42;
    std::size_t min_count = 1;
    bool lowercase = false;
    std::string format = "tsv";
    std::string out = "-";
  } cluster;
  {
    auto* cmd = app.add_subcommand("cluster",
                                   "exchange clustering of the vocabulary");
    cmd->add_option("--corpus", cluster.corpus, "training text")->required();
    cmd->add_option("--classes", cluster.classes, "number of word classes")
        ->required();
    cmd->add_option("--objective", cluster.objective,
                    "likelihood or prm")
        ->capture_default_str();
    cmd->add_option("--nbsimil", cluster.nb_simil,
                    "confusable set size (prm objective)")
        ->capture_default_str();
    cluster.sim.add_flags(cmd);
    cmd->add_option("--alpha", cluster.alpha, "additive smoothing weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-passes", cluster.max_passes,
                    "exchange pass limit")
        ->capture_default_str();
    cmd->add_option("--seed", cluster.seed, "RNG seed (echoed; the pass is deterministic)")
        ->capture_default_str();
    cmd->add_option("--min-count", cluster.min_count, "vocabulary cutoff")
        ->capture_default_str();
    cmd->add_flag("--lowercase", cluster.lowercase, "ASCII case folding");
    cmd->add_option("--format", cluster.format, "tsv or json")
        ->capture_default_str();
    cmd->add_option("--out", cluster.out, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() {
      exit_code = run_cluster(cluster.corpus, cluster.classes,
                              cluster.objective, cluster.nb_simil, cluster.sim,
                              cluster.alpha, cluster.max_passes, cluster.seed,
                              cluster.min_count, cluster.lowercase,
                              cluster.format, cluster.out);
    });
  }

  // simulate
  SimulateArgs simulate;
  {
    auto* cmd = app.add_subcommand(
        "simulate", "recognizer simulation over a test text");
    cmd->add_option("--model", simulate.model_path, "model file")->required();
    cmd->add_option("--corpus", simulate.corpus_path, "test text")->required();
    simulate.sim_source.add_flags(cmd);
    cmd->add_option("--sigma", simulate.sigma, "acoustic noise level")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--seed", simulate.seed, "noise stream seed")
        ->capture_default_str();
    cmd->add_option("--nbsimil", simulate.measure_sizes,
                    "measure neighborhood sizes, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--decode-nbsimil", simulate.decode_nb_simil,
                    "decoder candidate set size")
        ->capture_default_str();
    cmd->add_option("--context", simulate.context, "bigram or unigram")
        ->capture_default_str();
    cmd->add_option("--form", simulate.form, "direct or regrouped")
        ->capture_default_str();
    cmd->add_flag("--lowercase", simulate.lowercase, "ASCII case folding");
    cmd->add_option("--format", simulate.format, "tsv or json")
        ->capture_default_str();
    cmd->add_option("--out", simulate.out_path, "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() { exit_code = run_simulate(simulate); });
  }

  // experiment
  ExperimentArgs experiment;
  {
    auto* cmd = app.add_subcommand(
        "experiment",
        "train, simulate, and correlate measures against accuracy");
    cmd->add_flag("--demo", experiment.demo,
                  "run the built-in synthetic task");
    cmd->add_option("--train", experiment.train_path, "training text");
    cmd->add_option("--test", experiment.test_path, "test text");
    cmd->add_option("--alpha", experiment.alpha, "additive smoothing weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--min-count", experiment.min_count, "vocabulary cutoff")
        ->capture_default_str();
    experiment.sim_args.sim_source.add_flags(cmd);
    cmd->add_option("--sigma", experiment.sim_args.sigma,
                    "acoustic noise level")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--seed", experiment.sim_args.seed, "noise stream seed")
        ->capture_default_str();
    cmd->add_option("--nbsimil", experiment.sim_args.measure_sizes,
                    "measure neighborhood sizes, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--decode-nbsimil", experiment.sim_args.decode_nb_simil,
                    "decoder candidate set size")
        ->capture_default_str();
    cmd->add_option("--context", experiment.sim_args.context,
                    "bigram or unigram")
        ->capture_default_str();
    cmd->add_option("--form", experiment.sim_args.form,
                    "direct or regrouped")
        ->capture_default_str();
    cmd->add_flag("--lowercase", experiment.sim_args.lowercase,
                  "ASCII case folding");
    cmd->add_option("--format", experiment.sim_args.format, "tsv or json")
        ->capture_default_str();
    cmd->add_option("--out", experiment.sim_args.out_path,
                    "output path ('-' for stdout)")
        ->capture_default_str();
    cmd->callback([&]() { exit_code = run_experiment_cmd(experiment); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1, --help/--version exit 0
  } catch (const DataError& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

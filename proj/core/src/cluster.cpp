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

#include "prmlm/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "prmlm/numeric.hpp"

namespace prmlm {

ClassMap ClassMap::initial(const Vocabulary& vocab, const BigramCounts& counts,
                           std::size_t num_classes) {
  if (num_classes < 1 || num_classes > vocab.content_size()) {
    throw std::invalid_argument("num_classes must lie in [1, content words]");
  }
  ClassMap map;
  map.num_classes = num_classes;
  map.assignment.assign(vocab.size(), 0);
  map.assignment[Vocabulary::kBos] = map.bos_class();
  map.assignment[Vocabulary::kEos] = map.eos_class();
  map.assignment[Vocabulary::kUnk] = map.unk_class();

  std::vector<WordId> order;
  for (WordId w = Vocabulary::kFirstContent; w < vocab.size(); ++w) {
    order.push_back(w);
  }
  std::stable_sort(order.begin(), order.end(), [&](WordId a, WordId b) {
    return counts.successor_count[a] > counts.successor_count[b];
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    map.assignment[order[r]] = static_cast<ClassId>(r % num_classes);
  }
  return map;
}

ClassBigramModel::ClassBigramModel(const Vocabulary& vocab,
                                   const BigramCounts& counts, ClassMap classes,
                                   double alpha)
    : vocab_(&vocab),
      classes_(std::move(classes)),
      alpha_(alpha),
      num_total_(classes_.total_classes()) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (classes_.assignment.size() != vocab.size()) {
    throw std::invalid_argument("class map does not match vocabulary size");
  }
  if (classes_.assignment[Vocabulary::kBos] != classes_.bos_class() ||
      classes_.assignment[Vocabulary::kEos] != classes_.eos_class() ||
      classes_.assignment[Vocabulary::kUnk] != classes_.unk_class()) {
    throw std::invalid_argument("markers must sit in their singleton classes");
  }
  for (WordId w = Vocabulary::kFirstContent; w < vocab.size(); ++w) {
    if (classes_.assignment[w] >= classes_.num_classes) {
      throw std::invalid_argument("content word assigned past num_classes");
    }
  }

  trans_.assign(num_total_ * num_total_, 0);
  trans_row_.assign(num_total_, 0);
  emit_word_ = counts.successor_count;
  emit_word_.resize(vocab.size(), 0);
  emit_class_.assign(num_total_, 0);
  class_size_.assign(num_total_, 0);

  for (WordId w = 0; w < vocab.size(); ++w) {
    ClassId c = classes_.assignment[w];
    ++class_size_[c];
    emit_class_[c] += emit_word_[w];
  }
  for (std::uint64_t key : counts.sorted_keys()) {
    WordId prev = static_cast<WordId>(key >> 32);
    WordId w = static_cast<WordId>(key & 0xffffffffu);
    std::uint64_t n = counts.pairs.at(key);
    ClassId c1 = classes_.assignment[prev];
    ClassId c2 = classes_.assignment[w];
    trans_[c1 * num_total_ + c2] += n;
    trans_row_[c1] += n;
  }
}

double ClassBigramModel::trans_prob(ClassId from, ClassId to) const {
  if (from >= num_total_ || to >= num_total_ || to == classes_.bos_class()) {
    throw std::invalid_argument("illegal class transition query");
  }
  double num = static_cast<double>(trans_[from * num_total_ + to]) + alpha_;
  double den = static_cast<double>(trans_row_[from]) +
               alpha_ * static_cast<double>(num_total_ - 1);
  return num / den;
}

double ClassBigramModel::emit_prob(WordId w) const {
  if (!vocab_->valid(w)) throw std::invalid_argument("word id out of range");
  ClassId c = classes_.assignment[w];
  double num = static_cast<double>(emit_word_[w]) + alpha_;
  double den = static_cast<double>(emit_class_[c]) +
               alpha_ * static_cast<double>(class_size_[c]);
  return num / den;
}

double ClassBigramModel::log_prob(WordId prev, WordId w) const {
  if (!vocab_->valid(prev) || !vocab_->valid(w) || w == Vocabulary::kBos ||
      prev == Vocabulary::kEos) {
    throw std::invalid_argument("illegal bigram query");
  }
  return std::log(trans_prob(classes_.assignment[prev],
                             classes_.assignment[w])) +
         std::log(emit_prob(w));
}

double objective_value(const ClassBigramModel& model,
                       const EncodedCorpus& corpus,
                       const Objective& objective) {
  const Vocabulary& vocab = model.vocab();
  std::vector<ConfusableSet> table;
  if (objective.kind == ObjectiveKind::kPrmDerived) {
    if (objective.sim == nullptr) {
      throw std::invalid_argument("ratio-derived objective needs a similarity matrix");
    }
    if (objective.sim->vocab().size() != vocab.size()) {
      throw std::invalid_argument("similarity matrix built on another vocabulary");
    }
    table = build_confusable_table(*objective.sim, objective.nb_simil);
  }

  KahanSum total;
  for (const auto& sentence : corpus.sentences) {
    check_sentence(sentence, vocab);
    for (std::size_t i = 1; i < sentence.size(); ++i) {
      WordId prev = sentence[i - 1];
      WordId w = sentence[i];
      total.add(model.log_prob(prev, w));
      if (table.empty()) continue;
      const ConfusableSet& sw = table[w];
      if (!sw.neighbors.empty()) {
        KahanSum pen;
        for (const auto& [alt, s] : sw.neighbors) {
          pen.add(model.log_prob(prev, alt));
        }
        total.add(-pen.value() / static_cast<double>(sw.neighbors.size()));
      }
      const ConfusableSet& sv = table[prev];
      if (!sv.neighbors.empty()) {
        KahanSum pen;
        for (const auto& [alt, s] : sv.neighbors) {
          pen.add(model.log_prob(alt, w));
        }
        total.add(-pen.value() / static_cast<double>(sv.neighbors.size()));
      }
    }
  }
  return total.value() + objective.offset;
}

namespace {

// Exchange bookkeeping. The objective in both flavors is
//   G = sum_cells A(c1, c2) * log ptrans(c2 | c1)
//     + sum_w Arow(w) * log(count(w) + alpha)            (constant)
//     - sum_c ArowSum(c) * log(emit(c) + alpha * size(c))
// where A is a fixed word-pair weight matrix: the raw bigram counts for the
// likelihood, counts minus the confusable-penalty weights for the
// ratio-derived criterion. Only the class aggregation of A changes when a
// word moves.
struct Edge {
  WordId other;
  double weight;       // A entry
  std::uint64_t count; // N entry
};

// Saves every touched location so candidate moves restore the tables to the
// exact bit pattern they had (arithmetic undo would round differently).
struct Journal {
  std::vector<std::pair<double*, double>> doubles;
  std::vector<std::pair<std::uint64_t*, std::uint64_t>> words;
  std::vector<std::pair<std::uint32_t*, std::uint32_t>> sizes;  // ClassId too
  bool recording = false;

  void save(double* p) {
    if (recording) doubles.emplace_back(p, *p);
  }
  void save(std::uint64_t* p) {
    if (recording) words.emplace_back(p, *p);
  }
  void save(std::uint32_t* p) {
    if (recording) sizes.emplace_back(p, *p);
  }
  void restore() {
    for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) *it->first = it->second;
    for (auto it = words.rbegin(); it != words.rend(); ++it) *it->first = it->second;
    for (auto it = doubles.rbegin(); it != doubles.rend(); ++it) *it->first = it->second;
    clear();
  }
  void clear() {
    doubles.clear();
    words.clear();
    sizes.clear();
  }
};

struct ExchangeState {
  std::size_t num_total = 0;  // content classes + 3 marker classes
  double alpha = 0.0;
  double offset = 0.0;

  std::vector<ClassId> cls;           // per word
  std::vector<std::vector<Edge>> out; // A/N adjacency, ascending neighbor id
  std::vector<std::vector<Edge>> in;
  std::vector<double> arow;           // per word, column sum of A
  std::vector<double> aout;           // per word, row sum of A
  std::vector<std::uint64_t> nout;    // per word, row sum of N
  std::vector<std::uint64_t> succ;    // per word, successor count

  std::vector<double> ac;             // class-pair A, dense
  std::vector<double> ac_row;
  std::vector<std::uint64_t> nc;      // class-pair N, dense
  std::vector<std::uint64_t> nc_row;
  std::vector<std::uint64_t> emit;    // per class
  std::vector<std::uint32_t> size;    // per class
  std::vector<double> arow_sum;       // per class
  double emit_const = 0.0;

  Journal journal;

  double eval() const {
    KahanSum g;
    double c_out = static_cast<double>(num_total - 1);
    for (std::size_t c1 = 0; c1 < num_total; ++c1) {
      g.add(-ac_row[c1] *
            std::log(static_cast<double>(nc_row[c1]) + alpha * c_out));
      const double* arow_cells = &ac[c1 * num_total];
      const std::uint64_t* nrow_cells = &nc[c1 * num_total];
      for (std::size_t c2 = 0; c2 < num_total; ++c2) {
        double a = arow_cells[c2];
        if (a != 0.0) {
          g.add(a * std::log(static_cast<double>(nrow_cells[c2]) + alpha));
        }
      }
    }
    for (std::size_t c = 0; c < num_total; ++c) {
      if (size[c] > 0) {
        g.add(-arow_sum[c] * std::log(static_cast<double>(emit[c]) +
                                      alpha * static_cast<double>(size[c])));
      }
    }
    return g.value() + emit_const + offset;
  }

  void move(WordId x, ClassId to) {
    ClassId from = cls[x];
    // Remove x's contributions while it still sits in `from`.
    for (const Edge& e : out[x]) {
      ClassId cy = cls[e.other];
      std::size_t cell = from * num_total + cy;
      journal.save(&ac[cell]);
      ac[cell] -= e.weight;
      journal.save(&nc[cell]);
      nc[cell] -= e.count;
    }
    for (const Edge& e : in[x]) {
      if (e.other == x) continue;  // the self edge moved with out[]
      std::size_t cell = cls[e.other] * num_total + from;
      journal.save(&ac[cell]);
      ac[cell] -= e.weight;
      journal.save(&nc[cell]);
      nc[cell] -= e.count;
    }
    journal.save(&ac_row[from]);
    ac_row[from] -= aout[x];
    journal.save(&nc_row[from]);
    nc_row[from] -= nout[x];
    journal.save(&arow_sum[from]);
    arow_sum[from] -= arow[x];
    journal.save(&emit[from]);
    emit[from] -= succ[x];
    journal.save(&size[from]);
    --size[from];

    journal.save(&cls[x]);
    cls[x] = to;

    for (const Edge& e : out[x]) {
      ClassId cy = cls[e.other];  // self edge now lands in (to, to)
      std::size_t cell = to * num_total + cy;
      journal.save(&ac[cell]);
      ac[cell] += e.weight;
      journal.save(&nc[cell]);
      nc[cell] += e.count;
    }
    for (const Edge& e : in[x]) {
      if (e.other == x) continue;
      std::size_t cell = cls[e.other] * num_total + to;
      journal.save(&ac[cell]);
      ac[cell] += e.weight;
      journal.save(&nc[cell]);
      nc[cell] += e.count;
    }
    journal.save(&ac_row[to]);
    ac_row[to] += aout[x];
    journal.save(&nc_row[to]);
    nc_row[to] += nout[x];
    journal.save(&arow_sum[to]);
    arow_sum[to] += arow[x];
    journal.save(&emit[to]);
    emit[to] += succ[x];
    journal.save(&size[to]);
    ++size[to];
  }
};

}  // namespace

ExchangeResult exchange_cluster(const EncodedCorpus& corpus,
                                const Vocabulary& vocab,
                                const Objective& objective,
                                const ExchangeOptions& options) {
  if (options.num_classes < 2 ||
      options.num_classes > vocab.content_size()) {
    throw std::invalid_argument("num_classes must lie in [2, content words]");
  }
  BigramCounts counts = count_bigrams(corpus, vocab);
  ClassMap init = ClassMap::initial(vocab, counts, options.num_classes);

  std::vector<ConfusableSet> table;
  if (objective.kind == ObjectiveKind::kPrmDerived) {
    if (objective.sim == nullptr) {
      throw std::invalid_argument("ratio-derived objective needs a similarity matrix");
    }
    if (objective.sim->vocab().size() != vocab.size()) {
      throw std::invalid_argument("similarity matrix built on another vocabulary");
    }
    table = build_confusable_table(*objective.sim, objective.nb_simil);
  }

  // Weighted word-pair matrix A; accumulation order is fixed by sorted_keys.
  std::unordered_map<std::uint64_t, double> weights;
  std::vector<std::uint64_t> keys = counts.sorted_keys();
  for (std::uint64_t key : keys) {
    weights[key] += static_cast<double>(counts.pairs.at(key));
  }
  if (!table.empty()) {
    for (std::uint64_t key : keys) {
      WordId v = static_cast<WordId>(key >> 32);
      WordId w = static_cast<WordId>(key & 0xffffffffu);
      double n = static_cast<double>(counts.pairs.at(key));
      const ConfusableSet& sw = table[w];
      if (!sw.neighbors.empty()) {
        double q = n / static_cast<double>(sw.neighbors.size());
        for (const auto& [alt, s] : sw.neighbors) {
          weights[BigramCounts::key(v, alt)] -= q;
        }
      }
      const ConfusableSet& sv = table[v];
      if (!sv.neighbors.empty()) {
        double q = n / static_cast<double>(sv.neighbors.size());
        for (const auto& [alt, s] : sv.neighbors) {
          weights[BigramCounts::key(alt, w)] -= q;
        }
      }
    }
  }

  ExchangeState st;
  st.num_total = init.total_classes();
  st.alpha = options.alpha;
  st.offset = objective.offset;
  st.cls = init.assignment;
  st.out.assign(vocab.size(), {});
  st.in.assign(vocab.size(), {});
  st.arow.assign(vocab.size(), 0.0);
  st.aout.assign(vocab.size(), 0.0);
  st.nout.assign(vocab.size(), 0);
  st.succ = counts.successor_count;

  std::vector<std::uint64_t> weight_keys;
  weight_keys.reserve(weights.size());
  for (const auto& [k, wgt] : weights) weight_keys.push_back(k);
  std::sort(weight_keys.begin(), weight_keys.end());
  for (std::uint64_t key : weight_keys) {
    WordId v = static_cast<WordId>(key >> 32);
    WordId w = static_cast<WordId>(key & 0xffffffffu);
    double a = weights.at(key);
    std::uint64_t n = counts.pair_count(v, w);
    st.out[v].push_back(Edge{w, a, n});
    st.in[w].push_back(Edge{v, a, n});
    st.arow[w] += a;
    st.aout[v] += a;
    st.nout[v] += n;
  }

  std::size_t num_total = st.num_total;
  st.ac.assign(num_total * num_total, 0.0);
  st.ac_row.assign(num_total, 0.0);
  st.nc.assign(num_total * num_total, 0);
  st.nc_row.assign(num_total, 0);
  st.emit.assign(num_total, 0);
  st.size.assign(num_total, 0);
  st.arow_sum.assign(num_total, 0.0);
  {
    KahanSum em_const;
    for (WordId x = 0; x < vocab.size(); ++x) {
      ClassId c = st.cls[x];
      ++st.size[c];
      st.emit[c] += st.succ[x];
      st.arow_sum[c] += st.arow[x];
      em_const.add(st.arow[x] *
                   std::log(static_cast<double>(st.succ[x]) + st.alpha));
      for (const Edge& e : st.out[x]) {
        std::size_t cell = c * num_total + st.cls[e.other];
        st.ac[cell] += e.weight;
        st.nc[cell] += e.count;
      }
      st.ac_row[c] += st.aout[x];
      st.nc_row[c] += st.nout[x];
    }
    st.emit_const = em_const.value();
  }

  // Offer words in descending frequency (ties by id: stable sort).
  std::vector<WordId> order;
  for (WordId w = Vocabulary::kFirstContent; w < vocab.size(); ++w) {
    order.push_back(w);
  }
  std::stable_sort(order.begin(), order.end(), [&](WordId a, WordId b) {
    return counts.successor_count[a] > counts.successor_count[b];
  });

  ExchangeResult result;
  double cur = st.eval();
  constexpr double kImprovement = 1e-12;
  for (std::size_t pass = 1; pass <= options.max_passes; ++pass) {
    std::size_t moved = 0;
    for (WordId x : order) {
      ClassId from = st.cls[x];
      ClassId best = from;
      double best_g = cur + kImprovement;
      for (ClassId cand = 0; cand < options.num_classes; ++cand) {
        if (cand == from) continue;
        st.journal.recording = true;
        st.move(x, cand);
        double g = st.eval();
        st.journal.restore();
        st.journal.recording = false;
        if (g > best_g) {
          best_g = g;
          best = cand;
        }
      }
      if (best != from) {
        st.journal.recording = false;
        st.move(x, best);
        cur = best_g;
        result.move_objectives.push_back(cur);
        ++result.moves;
        ++moved;
      }
    }
    result.passes = pass;
    result.pass_objectives.push_back(cur);
    if (moved == 0) break;
  }

  result.classes = ClassMap{std::move(st.cls), options.num_classes};
  result.final_objective = cur;
  return result;
}

}  // namespace prmlm

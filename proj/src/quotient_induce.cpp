#include "soficlab/quotient_induce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

ComponentDecomposition n_components(const ActionModel& model,
                                    const NormalSubgroupSpec& nspec) {
  if (nspec.generators.empty()) throw Error("empty normal subgroup spec");
  SchreierGraph graph;
  graph.n = model.n;
  for (size_t i = 0; i < nspec.generators.size(); ++i) {
    graph.labels.push_back("n" + std::to_string(i));
    graph.perms.push_back(model.image(nspec.generators[i]));
  }
  return components(graph);
}

}  // namespace

InducedModel orbit_space_action(const ActionModel& model, const NormalSubgroupSpec& nspec) {
  model.validate();
  InducedModel out;
  out.decomposition = n_components(model, nspec);
  out.symbols = model.group;
  const ComponentDecomposition& decomp = out.decomposition;

  for (int gi = 0; gi < model.group.size(); ++gi) {
    const Permutation& g = model.gen_images[gi];
    std::vector<int> target(decomp.count(), -1);
    for (int c = 0; c < decomp.count(); ++c) {
      for (int v : decomp.members[c]) {
        int d = decomp.comp_of[g(v)];
        if (target[c] < 0)
          target[c] = d;
        else if (target[c] != d)
          throw NotWellDefined("generator '" + model.group.names[gi] +
                               "' splits a component: the model is not a genuine action");
      }
    }
    out.images.emplace_back(std::move(target));
    std::vector<int> all(decomp.count());
    for (int c = 0; c < decomp.count(); ++c) all[c] = c;
    out.good.push_back(std::move(all));
    out.good_weight.push_back(Rational(1));
  }

  // The normal generators act trivially downstairs by construction; assert it.
  for (const Word& w : nspec.generators) {
    const Permutation p = model.image(w);
    for (int v = 0; v < model.n; ++v)
      if (decomp.comp_of[p(v)] != decomp.comp_of[v])
        throw NotWellDefined("normal generator moves a component");
  }
  return out;
}

SingletonMatch singleton_match(const ActionModel& q_model, const InducedModel& induced,
                               const std::vector<int>& embedding) {
  q_model.validate();
  if (static_cast<int>(embedding.size()) != q_model.n)
    throw SizeMismatch("singleton_match: embedding size != |X|");
  const ComponentDecomposition& decomp = induced.decomposition;
  std::set<int> image_check(embedding.begin(), embedding.end());
  if (static_cast<int>(image_check.size()) != q_model.n)
    throw Error("singleton_match: embedding not injective");

  // Back-map from Y to X along the embedding.
  std::vector<int> back(decomp.n, -1);
  for (int x = 0; x < q_model.n; ++x) {
    if (embedding[x] < 0 || embedding[x] >= decomp.n)
      throw Error("singleton_match: embedding target out of range");
    back[embedding[x]] = x;
  }

  SingletonMatch out;
  long long singletons = 0;
  for (int x = 0; x < q_model.n; ++x)
    if (decomp.members[decomp.comp_of[embedding[x]]].size() == 1) ++singletons;
  out.singleton_fraction = Rational(singletons, q_model.n);

  out.discrepancy = Rational(0);
  for (int qi = 0; qi < q_model.group.size(); ++qi) {
    const Permutation& sigma_q = q_model.gen_images[qi];
    const Permutation& induced_q = induced.image_of(q_model.group.names[qi]);
    long long mismatches = 0;
    for (int x = 0; x < q_model.n; ++x) {
      const int cx = decomp.comp_of[embedding[x]];
      bool ok = false;
      if (decomp.members[cx].size() == 1) {
        const int dy = induced_q(cx);
        if (decomp.members[dy].size() == 1) {
          const int y = decomp.members[dy][0];
          ok = back[y] >= 0 && back[y] == sigma_q(x);
        }
      }
      if (!ok) ++mismatches;
    }
    Rational dist(mismatches, q_model.n);
    out.per_symbol.push_back(dist);
    if (dist > out.discrepancy) out.discrepancy = dist;
  }
  return out;
}

std::vector<int> conjugacy_defect(const ActionModel& model, const Word& g,
                                  const NormalSubgroupSpec& nspec) {
  const Permutation sigma_g = model.image(g);
  std::vector<char> in(model.n, 0);
  for (const Word& s : nspec.generators) {
    const Permutation sigma_s = model.image(s);
    const Permutation conj = model.image(g.concat(s).concat(g.inverse()));
    for (int v = 0; v < model.n; ++v)
      if (sigma_g(sigma_s(v)) != conj(sigma_g(v))) in[v] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < model.n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

MajorityMap majority_component_map(const ActionModel& model,
                                   const ComponentDecomposition& decomp, const Word& g,
                                   const Rational& eta) {
  if (decomp.n != model.n) throw SizeMismatch("majority_component_map: decomposition size");
  const Permutation sigma_g = model.image(g);
  const int k = decomp.count();

  MajorityMap out{Permutation::identity(std::max(k, 1)), {}, {}, {}, Rational(0)};
  out.targets.assign(k, 0);
  out.overlap.assign(k, Rational(0));

  for (int c = 0; c < k; ++c) {
    std::map<int, long long> hits;  // target component -> overlap count
    for (int v : decomp.members[c]) ++hits[decomp.comp_of[sigma_g(v)]];
    int best = -1;
    long long best_count = -1;
    for (const auto& [d, count] : hits) {
      if (count > best_count) {  // map order gives lowest id on ties
        best = d;
        best_count = count;
      }
    }
    out.targets[c] = best;
    out.overlap[c] = Rational(best_count, static_cast<long long>(decomp.members[c].size()));
  }

  const Rational threshold = Rational(1) - eta;
  for (int c = 0; c < k; ++c) {
    if (out.overlap[c] >= threshold) {
      out.good.push_back(c);
      out.good_weight += decomp.weights[c];
    }
  }

  // Greedy assignment in id order, then completion in id order.
  std::vector<int> image(k, -1);
  std::vector<char> taken(k, 0);
  for (int c : out.good) {
    if (!taken[out.targets[c]]) {
      image[c] = out.targets[c];
      taken[out.targets[c]] = 1;
    }
  }
  std::vector<int> free_targets;
  for (int d = 0; d < k; ++d)
    if (!taken[d]) free_targets.push_back(d);
  size_t next = 0;
  for (int c = 0; c < k; ++c)
    if (image[c] < 0) image[c] = free_targets[next++];
  out.map = Permutation(std::move(image));
  return out;
}

MeasuredQuotient measured_quotient_model(const ActionModel& model,
                                         const NormalSubgroupSpec& nspec,
                                         const std::vector<std::pair<std::string, Word>>& lifts,
                                         const MarkedGroup& q_group, const Rational& eta) {
  if (lifts.empty()) throw Error("measured_quotient_model: no lifts");
  MeasuredQuotient out;
  out.induced.decomposition = n_components(model, nspec);
  const ComponentDecomposition& decomp = out.induced.decomposition;

  ProbMeasure mu(decomp.weights);
  out.action.mu = mu;

  std::vector<std::string> names;
  for (const auto& [sym, lift] : lifts) names.push_back(sym);
  out.induced.symbols = MarkedGroup(names);

  for (const auto& [sym, lift] : lifts) {
    MajorityMap mm = majority_component_map(model, decomp, lift, eta);

    SymbolDefect sd;
    sd.symbol = sym;
    std::vector<int> defect = conjugacy_defect(model, lift, nspec);
    sd.defect_size = static_cast<long long>(defect.size());
    sd.beta = Rational(sd.defect_size, model.n);

    // Weight of components whose image meets the defect set in share > sqrt(beta).
    const Permutation sigma_g = model.image(lift);
    std::vector<char> in_defect(model.n, 0);
    for (int v : defect) in_defect[v] = 1;
    Rational bad_weight(0);
    Rational eta_measured(0);
    for (int c = 0; c < decomp.count(); ++c) {
      long long hit = 0;
      for (int v : decomp.members[c]) hit += in_defect[sigma_g(v)];
      Rational share(hit, static_cast<long long>(decomp.members[c].size()));
      if (share * share > sd.beta) bad_weight += decomp.weights[c];
      Rational deficiency = Rational(1) - mm.overlap[c];
      if (deficiency > eta_measured) eta_measured = deficiency;
    }
    sd.bad_weight = bad_weight;
    sd.markov_holds = bad_weight * bad_weight <= sd.beta;
    sd.eta_measured = eta_measured;
    sd.tv_defect = tv_distance(pushforward(mu, mm.map), mu);
    sd.good_weight = mm.good_weight;
    out.report.per_symbol.push_back(std::move(sd));

    out.induced.images.push_back(mm.map);
    out.induced.good.push_back(mm.good);
    out.induced.good_weight.push_back(mm.good_weight);
    out.action.symbols.push_back(sym);
    out.action.perms.emplace(sym, mm.map);
  }

  // Composable pairs: reduced concatenation of the window words is again a
  // window word.
  std::map<std::string, size_t> by_canonical;
  std::vector<Word> q_words;
  for (size_t i = 0; i < lifts.size(); ++i) {
    Word w = Word::parse(lifts[i].first, q_group);
    by_canonical.emplace(w.canonical(q_group), i);
    q_words.push_back(std::move(w));
  }
  for (size_t i = 0; i < q_words.size(); ++i) {
    for (size_t j = 0; j < q_words.size(); ++j) {
      auto it = by_canonical.find(q_words[i].concat(q_words[j]).canonical(q_group));
      if (it == by_canonical.end()) continue;
      const std::string& gh = lifts[it->second].first;
      out.action.products.push_back({lifts[i].first, lifts[j].first, gh});
      PairDefect pd;
      pd.q1 = lifts[i].first;
      pd.q2 = lifts[j].first;
      pd.q12 = gh;
      pd.defect = measured_distance(
          mu, out.action.perm(gh),
          out.action.perm(lifts[i].first).compose(out.action.perm(lifts[j].first)));
      out.report.per_pair.push_back(std::move(pd));
    }
  }
  out.action.validate();
  return out;
}

BernoulliModel bernoulli_model(const GroupTable& q, int max_order) {
  if (q.order > max_order)
    throw TooLarge("bernoulli_model: group order " + std::to_string(q.order) +
                   " exceeds cap " + std::to_string(max_order));
  const int k = q.order;
  const long long n = 1LL << k;

  BernoulliModel out{ActionModel{}, {}, q};
  out.model.n = static_cast<int>(n);
  std::vector<std::string> names;
  for (int el = 0; el < k; ++el) names.push_back("q" + std::to_string(el));
  out.model.group = MarkedGroup(std::move(names));

  for (int el = 0; el < k; ++el) {
    std::vector<int> im(static_cast<size_t>(n));
    for (long long v = 0; v < n; ++v) {
      long long y = 0;
      for (int h = 0; h < k; ++h) {
        const int src = q.times(q.inv(el), h);  // (q.x)(h) = x(q^{-1} h)
        if ((v >> src) & 1) y |= 1LL << h;
      }
      im[static_cast<size_t>(v)] = static_cast<int>(y);
    }
    out.model.gen_images.emplace_back(std::move(im));
  }

  for (long long v = 0; v < n; ++v)
    if ((v >> q.identity) & 1) out.marked.push_back(static_cast<int>(v));
  return out;
}

Rational bernoulli_statistic(const BernoulliModel& b, int element) {
  const Permutation& sigma = b.model.gen_images[element];
  std::vector<char> in(b.model.n, 0);
  for (int v : b.marked) in[v] = 1;
  long long count = 0;
  for (int v : b.marked)
    if (!in[sigma(v)]) ++count;
  return Rational(count, b.model.n);
}

}  // namespace soficlab

#include "soficlab/action_model.hpp"

#include <algorithm>
#include <set>

#include "soficlab/errors.hpp"
#include "soficlab/rng.hpp"

namespace soficlab {

MarkedGroup::MarkedGroup(std::vector<std::string> n) : names(std::move(n)) {
  if (names.empty()) throw Error("MarkedGroup: empty generating set");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw Error("MarkedGroup: empty generator name");
    if (!seen.insert(name).second)
      throw Error("MarkedGroup: duplicate generator '" + name + "'");
  }
}

int MarkedGroup::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw UnknownGenerator("unknown generator '" + name + "'");
}

bool MarkedGroup::has(const std::string& name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

Word Word::parse(const std::string& text, const MarkedGroup& group) {
  if (text.empty()) throw ParseError("Word: empty text");
  if (text == "e" || text == "1") return Word();
  std::vector<Letter> letters;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    if (tok.empty()) throw ParseError("Word: empty letter in '" + text + "'");
    std::string name = tok;
    long long exp = 1;
    size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      size_t used = 0;
      try {
        exp = std::stoll(e, &used);
      } catch (const std::exception&) {
        throw ParseError("Word: bad exponent in '" + tok + "'");
      }
      if (used != e.size()) throw ParseError("Word: bad exponent in '" + tok + "'");
    }
    int gen = group.index(name);
    int sign = exp >= 0 ? 1 : -1;
    for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i) letters.push_back({gen, sign});
    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos == text.size()) throw ParseError("Word: trailing '*' in '" + text + "'");
  }
  return Word(std::move(letters));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> stack;
  for (const Letter& l : letters_) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

std::string Word::text(const MarkedGroup& group) const {
  if (letters_.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += group.names[letters_[i].gen];
    if (letters_[i].sign < 0) out += "^-1";
  }
  return out;
}

std::string Word::canonical(const MarkedGroup& group) const {
  return reduced().text(group);
}

Permutation ActionModel::evaluate(const Word& w) const {
  Permutation result = Permutation::identity(n);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= group.size())
      throw UnknownGenerator("word letter out of range");
    const Permutation& g = gen_images[l.gen];
    result = result.compose(l.sign > 0 ? g : g.inverse());
  }
  return result;
}

Permutation ActionModel::image(const Word& w) const {
  if (!has_table()) return evaluate(w);
  const std::string key = w.canonical(group);
  auto it = table.find(key);
  if (it == table.end())
    throw MissingTableEntry("no stored image for element '" + key + "'");
  return it->second;
}

void ActionModel::validate() const {
  if (n < 1) throw Error("ActionModel: set size must be >= 1");
  if (static_cast<int>(gen_images.size()) != group.size())
    throw Error("ActionModel: one image per generator required");
  for (const Permutation& p : gen_images)
    if (p.size() != n) throw SizeMismatch("ActionModel: generator image size mismatch");
  for (const auto& [key, p] : table)
    if (p.size() != n) throw SizeMismatch("ActionModel: table image size mismatch for '" + key + "'");
}

ActionModel make_model(int n, MarkedGroup group, std::vector<Permutation> images) {
  ActionModel m;
  m.n = n;
  m.group = std::move(group);
  m.gen_images = std::move(images);
  m.validate();
  return m;
}

ActionModel with_window_table(const ActionModel& model, const std::vector<Word>& window) {
  ActionModel out = model;
  out.table.clear();
  for (const Word& w : window) out.table.emplace(w.canonical(model.group), model.evaluate(w));
  return out;
}

Rational multiplicativity_defect(const ActionModel& model, const Word& g, const Word& h) {
  Permutation gh = model.image(g.concat(h));
  Permutation split = model.image(g).compose(model.image(h));
  return hamming_distance(gh, split);
}

KernelSupport kernel_support(const ActionModel& model, const NormalSubgroupSpec& nspec) {
  if (nspec.generators.empty()) throw Error("kernel_support: empty subgroup spec");
  std::vector<Permutation> evaluated;
  evaluated.reserve(nspec.generators.size());
  Rational eps_max(0);
  for (const Word& w : nspec.generators) {
    evaluated.push_back(model.image(w));
    Rational len = hamming_length(evaluated.back());
    if (len > eps_max) eps_max = len;
  }
  SupportBound sb = generated_support_bound(evaluated);
  KernelSupport out;
  out.omega = std::move(sb.omega);
  out.eps_max = eps_max;
  out.omega_fraction = sb.bound;
  out.bound = Rational(static_cast<long long>(nspec.generators.size())) * eps_max;
  return out;
}

namespace {

// Random permutation supported on a uniformly chosen k-subset.
Permutation noise_perm(int n, long long k, Rng& rng) {
  Permutation p = Permutation::identity(n);
  if (k <= 1) return p;
  std::vector<int> sub = rng.subset(n, static_cast<int>(k));
  std::vector<int> shuffled = rng.permutation(static_cast<int>(k));
  std::vector<int> im(p.images());
  for (size_t i = 0; i < sub.size(); ++i) im[sub[i]] = sub[shuffled[i]];
  return Permutation(std::move(im));
}

}  // namespace

ActionModel perturb(const ActionModel& model, const Rational& rate, std::uint64_t seed) {
  if (rate.sign() < 0 || rate > Rational(1))
    throw Error("perturb: rate must lie in [0,1]");
  const long long n = model.n;
  // ceil(rate * n)
  const long long k = (rate.num() * n + rate.den() - 1) / rate.den();
  ActionModel out = model;
  std::uint64_t stream = 0;
  for (auto& g : out.gen_images) {
    Rng rng(seed, stream++);
    g = noise_perm(model.n, k, rng).compose(g);
  }
  for (auto& [key, p] : out.table) {
    Rng rng(seed, stream++);
    p = noise_perm(model.n, k, rng).compose(p);
  }
  return out;
}

ActionModel power_amplify(const ActionModel& model, int k, long long size_cap) {
  if (k < 1) throw Error("power_amplify: k must be >= 1");
  if (k == 1) return model;
  checked_pow(model.n, k, size_cap);
  ActionModel out;
  out.group = model.group;
  out.n = static_cast<int>(checked_pow(model.n, k, size_cap));
  for (const Permutation& g : model.gen_images)
    out.gen_images.push_back(diagonal_power(g, k, size_cap));
  for (const auto& [key, p] : model.table)
    out.table.emplace(key, diagonal_power(p, k, size_cap));
  return out;
}

}  // namespace soficlab

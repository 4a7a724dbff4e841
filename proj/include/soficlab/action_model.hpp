#ifndef SOFICLAB_ACTION_MODEL_HPP
#define SOFICLAB_ACTION_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

// Finite marked generating set; formal inverses are implied.
struct MarkedGroup {
  std::vector<std::string> names;

  MarkedGroup() = default;
  explicit MarkedGroup(std::vector<std::string> n);

  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;  // throws UnknownGenerator
  bool has(const std::string& name) const;
};

struct Letter {
  int gen;
  int sign;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

// Word over a marked generating set. Stored exactly as supplied; free
// reduction is an explicit separate pass so defect measurements see words
// verbatim.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Grammar: letters joined by '*'; a letter is `name`, `name^-1` or
  // `name^k` for a small integer k; the empty word is `e`.
  static Word parse(const std::string& text, const MarkedGroup& group);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  Word concat(const Word& other) const;
  Word inverse() const;
  Word reduced() const;  // cancel adjacent inverse pairs

  std::string text(const MarkedGroup& group) const;
  // Text of the freely reduced word; the designated lookup key for
  // element-image tables.
  std::string canonical(const MarkedGroup& group) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<Letter> letters_;
};

// Marked generators n_1..n_m of a normal subgroup, given as words.
struct NormalSubgroupSpec {
  std::vector<Word> generators;
};

// Finite permutation model of a marked group: one permutation per generator,
// plus an optional element-image table over a finite window of words (keyed
// by canonical form). A model with a table represents a stage of an
// asymptotic homomorphism; word images outside the table are undefined.
struct ActionModel {
  int n = 0;
  MarkedGroup group;
  std::vector<Permutation> gen_images;            // by generator index
  std::map<std::string, Permutation> table;       // canonical word -> image

  const Permutation& gen_image(int i) const { return gen_images[i]; }
  const Permutation& gen_image(const std::string& name) const {
    return gen_images[group.index(name)];
  }
  bool has_table() const { return !table.empty(); }

  // Free evaluation: product of generator images in word order; the empty
  // word maps to the identity. A monoid homomorphism on concatenation.
  Permutation evaluate(const Word& w) const;

  // Table-aware image: with a table present, the canonical form of w must be
  // a stored entry (MissingTableEntry otherwise); without a table this is
  // free evaluation.
  Permutation image(const Word& w) const;

  void validate() const;
};

ActionModel make_model(int n, MarkedGroup group, std::vector<Permutation> images);

// Genuine element-image table over a window: every window word is mapped by
// free evaluation. The base for perturbed asymptotic-homomorphism instances.
ActionModel with_window_table(const ActionModel& model, const std::vector<Word>& window);

// d(sigma(gh), sigma(g) sigma(h)) in normalized Hamming distance, using
// table-aware images. Zero for every pair under free evaluation.
Rational multiplicativity_defect(const ActionModel& model, const Word& g, const Word& h);

struct KernelSupport {
  std::vector<int> omega;  // union of supports of the evaluated generators
  Rational eps_max;        // max_i length(image(n_i))
  Rational omega_fraction; // |omega| / n
  Rational bound;          // m * eps_max, the certified upper bound
};

// Support bound for the image of a normal subgroup: every word in the n_i
// fixes the complement of omega pointwise, and |omega| <= m * eps_max * n.
KernelSupport kernel_support(const ActionModel& model, const NormalSubgroupSpec& nspec);

// Compose every stored permutation with a fresh random permutation supported
// on a uniformly chosen ceil(rate*n)-subset. Deterministic in seed; for each
// generator g, d(old, new) <= rate + 1/n.
ActionModel perturb(const ActionModel& model, const Rational& rate, std::uint64_t seed);

inline constexpr long long kDefaultSizeCap = 10'000'000;

// Diagonal action on X^k (generators and table entries alike). For each
// stored permutation, length(power) = 1 - (1 - length(base))^k exactly.
ActionModel power_amplify(const ActionModel& model, int k,
                          long long size_cap = kDefaultSizeCap);

}  // namespace soficlab

#endif

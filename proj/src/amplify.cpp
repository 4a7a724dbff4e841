#include "soficlab/amplify.hpp"

#include "soficlab/errors.hpp"

namespace soficlab {

int FiniteQuotient::rho_of(const Word& w, const MarkedGroup& group) const {
  int h = table.identity;
  for (const Letter& l : w.letters()) {
    auto it = rho.find(group.names[l.gen]);
    if (it == rho.end())
      throw WindowMismatch("rho has no image for generator '" + group.names[l.gen] + "'");
    int g = l.sign > 0 ? it->second : table.inv(it->second);
    h = table.times(h, g);
  }
  return h;
}

Permutation left_regular_perm(const GroupTable& table, int element) {
  std::vector<int> im(table.order);
  for (int x = 0; x < table.order; ++x) im[x] = table.times(element, x);
  return Permutation(std::move(im));
}

ActionModel left_regular(const GroupTable& table) {
  std::vector<std::string> names;
  std::vector<Permutation> images;
  for (int h = 0; h < table.order; ++h) {
    names.push_back("g" + std::to_string(h));
    images.push_back(left_regular_perm(table, h));
  }
  return make_model(table.order, MarkedGroup(std::move(names)), std::move(images));
}

namespace {

Permutation product_perm(const Permutation& a, const Permutation& reg, int order) {
  std::vector<int> im(static_cast<size_t>(a.size()) * order);
  for (int x = 0; x < a.size(); ++x)
    for (int h = 0; h < order; ++h)
      im[static_cast<size_t>(x) * order + h] = a(x) * order + reg(h);
  return Permutation(std::move(im));
}

}  // namespace

AmplifyResult amplify(const ActionModel& alpha, const FiniteQuotient& quotient,
                      long long cap) {
  alpha.validate();
  const int order = quotient.table.order;
  if (static_cast<long long>(alpha.n) * order > cap)
    throw Overflow("amplify: |X| * |H| exceeds size cap; use ProductView");

  AmplifyResult res;
  res.theta.n = alpha.n * order;
  res.theta.group = alpha.group;
  for (int i = 0; i < alpha.group.size(); ++i) {
    Word g(std::vector<Letter>{{i, 1}});
    int h = quotient.rho_of(g, alpha.group);
    res.theta.gen_images.push_back(
        product_perm(alpha.gen_images[i], left_regular_perm(quotient.table, h), order));
  }
  std::vector<std::pair<std::string, int>> window_rho;
  for (const Word& w : quotient.window) {
    Permutation base = [&] {
      try {
        return alpha.image(w);
      } catch (const MissingTableEntry& e) {
        throw WindowMismatch(std::string("amplify: ") + e.what());
      }
    }();
    int h = quotient.rho_of(w, alpha.group);
    window_rho.emplace_back(w.canonical(alpha.group), h);
    res.theta.table.emplace(w.canonical(alpha.group),
                            product_perm(base, left_regular_perm(quotient.table, h), order));
  }
  for (size_t i = 0; i < window_rho.size(); ++i) {
    if (window_rho[i].second == quotient.table.identity)
      res.report.rho_trivial.push_back(window_rho[i].first);
    for (size_t j = i + 1; j < window_rho.size(); ++j)
      if (window_rho[i].second == window_rho[j].second &&
          window_rho[i].first != window_rho[j].first)
        res.report.rho_collisions.emplace_back(window_rho[i].first, window_rho[j].first);
  }
  return res;
}

std::pair<int, int> ProductView::apply(const Word& w, int x, int h) const {
  const Permutation base = alpha->image(w);
  const int hh = quotient->rho_of(w, alpha->group);
  return {base(x), quotient->table.times(hh, h)};
}

}  // namespace soficlab

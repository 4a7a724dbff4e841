#ifndef SOFICLAB_GROUP_TABLE_HPP
#define SOFICLAB_GROUP_TABLE_HPP

#include <string>
#include <vector>

namespace soficlab {

// Finite group as an explicit multiplication table. Associativity, identity
// and inverses are verified at construction (InvalidTable otherwise).
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> mul;
  int identity = 0;
  std::vector<int> inverse;

  static GroupTable from_rows(std::vector<std::vector<int>> rows);

  int times(int a, int b) const { return mul[a][b]; }
  int inv(int a) const { return inverse[a]; }

  // Whether the listed elements generate the whole group (closure walk).
  bool generates(const std::vector<int>& elems) const;
  // Small deterministic generating set (greedy closure growth).
  std::vector<int> generating_set() const;

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable dihedral(int n);    // order 2n
  static GroupTable symmetric3();       // = dihedral(3)
  static GroupTable quaternion8();
  static GroupTable product(const GroupTable& a, const GroupTable& b);
};

}  // namespace soficlab

#endif

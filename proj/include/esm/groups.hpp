#pragma once

// Concrete finite groups: cyclic C_N and dicyclic Dic_m (generalized
// quaternion Q_{2^n} = Dic_{2^{n-2}}), realized by multiplication tables, with
// brute-force subgroup classes, Weyl groups and the table of marks.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace esm {

struct GroupDescriptor {
  enum class Kind { Cyclic, Dicyclic };

  Kind kind = Kind::Cyclic;
  long param = 2;  // Cyclic: the order N. Dicyclic: m, with order 4m.

  static GroupDescriptor cyclic(long p, long n);  // C_{p^n}, p prime, n >= 1
  static GroupDescriptor cyclic_of_order(long N);  // any N >= 1
  static GroupDescriptor dicyclic(long m);         // m >= 2
  static GroupDescriptor quaternion(long n);       // Q_{2^n}, n >= 3
  // "C8", "C27", "Q16", "Dic3" (also "Q8" style for any 2-power dicyclic).
  static GroupDescriptor parse(const std::string& text);

  long order() const { return kind == Kind::Cyclic ? param : 4 * param; }
  // {p, n} when the order is p^n with n >= 1.
  std::optional<std::pair<long, long>> prime_power() const;
  std::string label() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

class GroupModel {
 public:
  static constexpr long kDefaultOrderBound = 512;

  static GroupModel build(const GroupDescriptor& d);

  int order() const { return static_cast<int>(inverse_.size()); }
  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * inverse_.size() + b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int a, long e) const;
  int element_order(int a) const;
  long exponent() const;
  // g h g^{-1}
  int conjugate(int g, int h) const { return mul(mul(g, h), inv(g)); }
  std::vector<int> conjugate_subset(int g, const std::vector<int>& s) const;  // sorted

  const std::string& name(int a) const { return names_[a]; }
  std::optional<int> find(const std::string& element_name) const;

  const std::optional<GroupDescriptor>& descriptor() const { return descriptor_; }
  const std::string& label() const { return label_; }
  bool is_abelian() const;
  bool is_cyclic() const;

  // Sorted element list of the subgroup generated by gens.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  // Conjugacy classes of elements, each sorted, ordered by least element.
  std::vector<std::vector<int>> conjugacy_classes() const;

  // Index of each element in the group this one was cut out of (identity map
  // for groups made by build()).
  const std::vector<int>& parent_index() const { return parent_index_; }
  // The subgroup on the given elements as a group in its own right. An empty
  // label means the label of the identified isomorphism type.
  GroupModel subgroup_model(const std::vector<int>& elements, const std::string& label = "") const;

  // Exhaustive closure, identity, inverse and associativity checks.
  bool verify_axioms() const;

 private:
  GroupModel() = default;
  static std::optional<GroupDescriptor> identify(const GroupModel& g);

  std::optional<GroupDescriptor> descriptor_;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> parent_index_;
};

/// Finite abelian group W^ab in invariant-factor form, with the coordinate
/// vector of the image of every element of the group it came from.
struct Abelianization {
  std::vector<long> invariants;                 // factors > 1, d1 | d2 | ...
  std::vector<std::vector<long>> coords;        // coords[w] for each element w
  std::vector<long> zero() const { return std::vector<long>(invariants.size(), 0); }
  std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const;
};

// Abelianization of a group given by its multiplication table (identity 0).
Abelianization abelianize(int order, const std::vector<int>& table);

struct WeylGroup {
  int order = 1;
  bool cyclic = true;
  Abelianization ab;
  // For g in N_G(H): its coordinates in W^ab. Meaningless outside N_G(H);
  // test membership against SubgroupClass::normalizer.
  std::vector<std::vector<long>> coords_of_element;
};

struct SubgroupClass {
  int id = 0;
  std::string label;
  std::vector<std::string> aliases;
  std::vector<int> representative;  // sorted; lexicographically least conjugate
  std::vector<std::vector<int>> conjugates;
  int order = 1;
  int index = 1;
  bool cyclic = true;
  std::vector<int> normalizer;  // sorted
  WeylGroup weyl;
};

/// Subgroup classes of a group in canonical order (by subgroup order, ties by
/// the representative's element list) together with the table of marks.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(std::shared_ptr<const GroupModel> group, long order_bound = GroupModel::kDefaultOrderBound);

  const GroupModel& group() const { return *group_; }
  std::shared_ptr<const GroupModel> group_ptr() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  size_t size() const { return classes_.size(); }
  const SubgroupClass& at(size_t i) const { return classes_.at(i); }

  // Class of an arbitrary subgroup (sorted element list); throws when s is not a subgroup.
  int class_of(const std::vector<int>& s) const;
  // Label or alias lookup.
  std::optional<int> find_class(const std::string& label) const;

  // marks(h, k) = |(G/H)^K| for classes h (row) and k (column).
  long mark(size_t h, size_t k) const { return marks_[h][k]; }
  const std::vector<std::vector<long>>& table_of_marks() const { return marks_; }

  // Lattice of the representative of class h, built once and shared. Its
  // group's parent_index() maps back into group().
  std::shared_ptr<const SubgroupLattice> subgroup_lattice(size_t h) const;

 private:
  std::shared_ptr<const GroupModel> group_;
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<int>, int> subgroup_class_;
  std::vector<std::vector<long>> marks_;
  mutable std::mutex sub_mu_;
  mutable std::map<size_t, std::shared_ptr<const SubgroupLattice>> sub_cache_;
};

std::vector<SubgroupClass> subgroup_classes(const GroupModel& g, long order_bound = GroupModel::kDefaultOrderBound);
std::vector<std::vector<long>> table_of_marks(const GroupModel& g, const std::vector<SubgroupClass>& classes);

// Shared, memoized lattice for a descriptor.
std::shared_ptr<const SubgroupLattice> lattice_for(const GroupDescriptor& d);

}  // namespace esm

#include "fuchs/classes.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <numeric>

namespace fuchs {

ClassData conjugacy_classes(const GroupTable& group) {
  const std::size_t n = group.order();
  constexpr std::uint32_t kUnset = 0xffffffffU;
  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<ConjugacyClass> raw;
  std::vector<ElementId> gen_inv;
  for (auto g : group.generators()) gen_inv.push_back(group.inverse(g));
  for (ElementId x = 0; x < n; ++x) {
    if (raw_class[x] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(raw.size());
    ConjugacyClass c;
    c.representative = x;
    c.members.push_back(x);
    raw_class[x] = cls;
    for (std::size_t head = 0; head < c.members.size(); ++head) {
      const ElementId y = c.members[head];
      for (std::size_t k = 0; k < gen_inv.size(); ++k) {
        const ElementId z = group.multiply(group.multiply(gen_inv[k], y), group.generators()[k]);
        if (raw_class[z] == kUnset) {
          raw_class[z] = cls;
          c.members.push_back(z);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.size = c.members.size();
    c.element_order = group.element_order(x);
    raw.push_back(std::move(c));
  }
  std::vector<std::uint32_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& ca = raw[a];
    const auto& cb = raw[b];
    if (ca.element_order != cb.element_order) return ca.element_order < cb.element_order;
    if (ca.size != cb.size) return ca.size < cb.size;
    return ca.representative < cb.representative;
  });
  ClassData data;
  std::vector<std::uint32_t> rank(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<std::uint32_t>(i);
  for (auto idx : order) data.classes.push_back(std::move(raw[idx]));
  data.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) data.class_of[x] = rank[raw_class[x]];

  std::uint64_t e = 1;
  for (const auto& c : data.classes) e = lcm_u64(e, c.element_order);
  data.exponent = static_cast<std::uint32_t>(e);
  data.power_maps.assign(e, std::vector<std::uint32_t>(data.classes.size()));
  for (std::size_t i = 0; i < data.classes.size(); ++i) {
    const ElementId rep = data.classes[i].representative;
    ElementId pw = group.identity();
    for (std::uint64_t k = 0; k < e; ++k) {
      data.power_maps[k][i] = data.class_of[pw];
      pw = group.multiply(pw, rep);
    }
  }
  data.inverse_class.resize(data.classes.size());
  for (std::size_t i = 0; i < data.classes.size(); ++i) {
    data.inverse_class[i] = data.class_of[group.inverse(data.classes[i].representative)];
  }
  return data;
}

std::uint64_t structure_constant(const GroupTable& group, const ClassData& classes, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t r = classes.size();
  if (i >= r || j >= r || k >= r) fail(ErrorKind::OutOfRange, "class index out of range");
  const ElementId z = classes.classes[k].representative;
  std::uint64_t count = 0;
  for (const ElementId x : classes.classes[i].members) {
    if (classes.class_of[group.multiply(group.inverse(x), z)] == j) ++count;
  }
  return count;
}

std::vector<std::uint64_t> structure_tensor(const GroupTable& group, const ClassData& classes) {
  const std::size_t r = classes.size();
  std::vector<std::uint64_t> tensor(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const ElementId z = classes.classes[k].representative;
    for (ElementId x = 0; x < group.order(); ++x) {
      const std::size_t i = classes.class_of[x];
      const std::size_t j = classes.class_of[group.multiply(group.inverse(x), z)];
      ++tensor[(i * r + j) * r + k];
    }
  }
  return tensor;
}

std::uint64_t centralizer_order(const GroupTable& group, ElementId x) {
  std::uint64_t count = 0;
  for (ElementId g = 0; g < group.order(); ++g) {
    if (group.multiply(g, x) == group.multiply(x, g)) ++count;
  }
  return count;
}

std::uint64_t centralizer_order(const GroupTable& group, const GroupElement& x) {
  return centralizer_order(group, group.index_of(x));
}

}  // namespace fuchs

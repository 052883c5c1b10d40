#include "fuchs/homcount.hpp"

#include "fuchs/error.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace fuchs {

std::string mode_name(CountMode mode) {
  switch (mode) {
    case CountMode::Classes: return "classes";
    case CountMode::Total: return "total";
    case CountMode::Epi: return "epi";
  }
  return "";
}

std::string method_name(CountMethod method) {
  switch (method) {
    case CountMethod::Formula: return "character-formula";
    case CountMethod::Oracle: return "oracle";
    case CountMethod::Both: return "both";
  }
  return "";
}

namespace {

void check_counting_signature(const FuchsianSignature& sig) {
  if (sig.v != 1 && sig.v != 2) fail(ErrorKind::SignatureInvalid, "v must be 1 or 2");
  if (sig.v == 1 && sig.genus < 1) fail(ErrorKind::SignatureInvalid, "non-oriented signatures need g >= 1");
  for (auto m : sig.periods) {
    if (m < 1) fail(ErrorKind::SignatureInvalid, "elliptic orders must be positive");
  }
}

bool order_admissible(std::uint64_t element_order, std::uint64_t m, bool exact) {
  return exact ? element_order == m : m % element_order == 0;
}

// Per slot, the classes summed over; classes mode has one class per slot.
using Slots = std::vector<std::vector<std::size_t>>;

// Sum over characters of weight * prod_i (sum_{c in slot i} |C_c| chi(c)) / chi(1)^{d-2+vg}, times |G|^{vg-1}, mod p.
std::uint64_t evaluate_mod(const FuchsianSignature& sig, const CharacterTable& table, const Slots& slots, std::uint64_t p) {
  const std::uint64_t omega = unity_root_mod(p, table.exponent);
  const std::int64_t shift = static_cast<std::int64_t>(sig.d()) - 2 + static_cast<std::int64_t>(sig.surface_rank());
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < table.num_characters(); ++r) {
    std::uint64_t weight = 1;
    if (sig.v == 1) {
      const int ind = table.indicators[r];
      if (ind == 0) continue;
      weight = (ind == -1 && sig.genus % 2 == 1) ? p - 1 : 1;
    }
    std::uint64_t term = weight;
    for (const auto& slot : slots) {
      std::uint64_t s = 0;
      for (const auto c : slot) s = (s + mulmod(table.classes[c].size % p, value_mod(table, r, c, p, omega), p)) % p;
      term = mulmod(term, s, p);
      if (term == 0) break;
    }
    if (term == 0) continue;
    const std::uint64_t deg = table.degrees[r] % p;
    const std::uint64_t dpow = powmod(shift >= 0 ? invmod(deg, p) : deg, static_cast<std::uint64_t>(shift >= 0 ? shift : -shift), p);
    total = (total + mulmod(term, dpow, p)) % p;
  }
  const std::int64_t gexp = static_cast<std::int64_t>(sig.surface_rank()) - 1;
  const std::uint64_t g = table.group_order % p;
  const std::uint64_t gpow = powmod(gexp >= 0 ? g : invmod(g, p), static_cast<std::uint64_t>(gexp >= 0 ? gexp : -gexp), p);
  return mulmod(total, gpow, p);
}

// Upper bound for the count: |G|^{vg-1} prod_i N_i sum_chi chi(1)^{2-vg}, with N_i the slot size in elements.
BigInt count_bound(const FuchsianSignature& sig, const CharacterTable& table, const Slots& slots) {
  Rational bound = 1;
  const std::int64_t gexp = static_cast<std::int64_t>(sig.surface_rank()) - 1;
  bound *= gexp >= 0 ? Rational(pow_big(table.group_order, gexp)) : Rational(BigInt(1), pow_big(table.group_order, -gexp));
  for (const auto& slot : slots) {
    BigInt n = 0;
    for (auto c : slot) n += table.classes[c].size;
    bound *= n;
  }
  Rational degsum = 0;
  const std::int64_t dexp = 2 - static_cast<std::int64_t>(sig.surface_rank());
  for (auto d : table.degrees) {
    degsum += dexp >= 0 ? Rational(pow_big(d, dexp)) : Rational(BigInt(1), pow_big(d, -dexp));
  }
  bound *= degsum;
  return numerator_of(bound) / denominator_of(bound);
}

std::vector<std::uint64_t> crt_primes(std::uint32_t e, std::uint64_t group_order, std::size_t offset, std::size_t count) {
  std::vector<std::uint64_t> primes;
  std::uint64_t p = ((std::uint64_t{1} << 30) / e) * e + 1;
  std::size_t skipped = 0;
  while (primes.size() < count) {
    if (p >= (std::uint64_t{1} << 32)) fail(ErrorKind::PrimeSearchFailed, "ran out of CRT primes below 2^32");
    if (is_prime(p) && group_order % p != 0) {
      if (skipped < offset) {
        ++skipped;
      } else {
        primes.push_back(p);
      }
    }
    p += e;
  }
  return primes;
}

BigInt evaluate_exact(const FuchsianSignature& sig, const CharacterTable& table, const Slots& slots, const FormulaOptions& options) {
  const BigInt bound = count_bound(sig, table, slots);
  std::size_t needed = 1;
  {
    BigInt prod = BigInt(1) << 30;
    while (prod <= bound) {
      prod <<= 30;
      ++needed;
    }
  }
  for (std::size_t round = 0; round <= options.max_rounds; ++round) {
    // needed primes for reconstruction plus one for verification.
    const auto primes = crt_primes(table.exponent, table.group_order, options.prime_offset, needed + 1 + round);
    BigInt value = 0, modulus = 1;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      const std::uint64_t r = evaluate_mod(sig, table, slots, p);
      // value + modulus * t = r (mod p)
      const std::uint64_t cur = reduce_mod(value, p);
      const std::uint64_t mod_p = reduce_mod(modulus, p);
      const std::uint64_t t = mulmod((r + p - cur) % p, invmod(mod_p, p), p);
      value += modulus * t;
      modulus *= p;
    }
    const std::uint64_t check = primes.back();
    if (value <= bound && reduce_mod(value, check) == evaluate_mod(sig, table, slots, check)) return value;
  }
  fail(ErrorKind::BoundOverflow, "CRT reconstruction did not stabilise within the retry limit");
}

}  // namespace

BigInt hom_count_classes(const FuchsianSignature& sig, const CharacterTable& table, const ClassTuple& tup, const FormulaOptions& options) {
  check_counting_signature(sig);
  if (tup.size() != sig.d()) fail(ErrorKind::Mismatch, "class tuple length differs from the number of elliptic generators");
  if (sig.surface_rank() + sig.d() < 1) fail(ErrorKind::SignatureInvalid, "vg + d must be at least 1");
  Slots slots;
  for (auto c : tup) {
    if (c >= table.num_classes()) fail(ErrorKind::OutOfRange, "class index " + std::to_string(c) + " out of range");
    slots.push_back({c});
  }
  return evaluate_exact(sig, table, slots, options);
}

BigInt hom_count_total(const FuchsianSignature& sig, const CharacterTable& table, const FormulaOptions& options) {
  check_counting_signature(sig);
  if (sig.surface_rank() + sig.d() < 1) fail(ErrorKind::SignatureInvalid, "vg + d must be at least 1");
  Slots slots;
  for (auto m : sig.periods) {
    std::vector<std::size_t> slot;
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      if (order_admissible(table.classes[c].order, m, options.exact_orders)) slot.push_back(c);
    }
    if (slot.empty()) return 0;
    slots.push_back(std::move(slot));
  }
  return evaluate_exact(sig, table, slots, options);
}

BigInt hom_count_total_by_tuples(const FuchsianSignature& sig, const CharacterTable& table, const FormulaOptions& options) {
  check_counting_signature(sig);
  std::vector<std::vector<std::size_t>> choices;
  for (auto m : sig.periods) {
    std::vector<std::size_t> slot;
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      if (order_admissible(table.classes[c].order, m, options.exact_orders)) slot.push_back(c);
    }
    if (slot.empty()) return 0;
    choices.push_back(std::move(slot));
  }
  BigInt total = 0;
  ClassTuple tup(sig.d());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sig.d()) {
      total += hom_count_classes(sig, table, tup, options);
      return;
    }
    for (auto c : choices[i]) {
      tup[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

// ---------------------------------------------------------------- oracle

namespace {

struct OraclePlan {
  std::vector<std::vector<ElementId>> allowed;  // per elliptic slot
  std::vector<char> last_allowed;               // membership bitmap for the solved slot
  std::vector<ElementId> everything;
};

OraclePlan make_plan(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes, const OracleOptions& options) {
  check_counting_signature(sig);
  if (options.classes && options.classes->size() != sig.d()) {
    fail(ErrorKind::Mismatch, "class tuple length differs from the number of elliptic generators");
  }
  OraclePlan plan;
  plan.everything.resize(group.order());
  for (ElementId x = 0; x < group.order(); ++x) plan.everything[x] = x;
  for (std::size_t i = 0; i < sig.d(); ++i) {
    std::vector<ElementId> slot;
    if (options.classes) {
      const std::size_t c = (*options.classes)[i];
      if (c >= classes.size()) fail(ErrorKind::OutOfRange, "class index " + std::to_string(c) + " out of range");
      slot = classes.classes[c].members;
    } else {
      for (ElementId x = 0; x < group.order(); ++x) {
        if (order_admissible(classes.classes[classes.class_of[x]].element_order, sig.periods[i], options.exact_orders)) slot.push_back(x);
      }
    }
    plan.allowed.push_back(std::move(slot));
  }
  if (sig.d() > 0) {
    plan.last_allowed.assign(group.order(), 0);
    for (auto x : plan.allowed.back()) plan.last_allowed[x] = 1;
  }
  return plan;
}

BigInt plan_cost(const FuchsianSignature& sig, const GroupTable& group, const OraclePlan& plan) {
  BigInt cost = pow_big(group.order(), sig.surface_rank());
  for (std::size_t i = 0; i + 1 < plan.allowed.size(); ++i) cost *= plan.allowed[i].size();
  return cost;
}

// Visits every relator solution; the visitor receives the full image tuple (surface images then x_1..x_d).
template <typename Visitor>
std::uint64_t enumerate_solutions(const FuchsianSignature& sig, const GroupTable& group, const OraclePlan& plan, unsigned threads,
                                  Visitor make_visitor) {
  const std::size_t vg = sig.surface_rank();
  const std::size_t d = sig.d();
  // Enumerated coordinates: vg surface images, then x_1..x_{d-1}.
  std::vector<const std::vector<ElementId>*> coords;
  for (std::size_t i = 0; i < vg; ++i) coords.push_back(&plan.everything);
  for (std::size_t i = 0; i + 1 < d; ++i) coords.push_back(&plan.allowed[i]);
  const std::size_t depth = coords.size();

  auto worker = [&](unsigned tid, unsigned nthreads) -> std::uint64_t {
    auto visit = make_visitor();
    std::vector<ElementId> images(vg + d, group.identity());
    std::uint64_t count = 0;
    // surface[i] = product of surface factors completed before coordinate i; xs[i] = product of x's before i.
    std::vector<ElementId> surface(depth + 1, group.identity()), xprod(depth + 1, group.identity());
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
      if (level == depth) {
        const ElementId s = surface[level];
        if (d == 0) {
          if (s == group.identity() && visit(images)) ++count;
          return;
        }
        const ElementId xd = group.inverse(group.multiply(s, xprod[level]));
        if (!plan.last_allowed[xd]) return;
        images[vg + d - 1] = xd;
        if (visit(images)) ++count;
        return;
      }
      const auto& choices = *coords[level];
      for (std::size_t idx = 0; idx < choices.size(); ++idx) {
        if (level == 0 && idx % nthreads != tid) continue;
        const ElementId x = choices[idx];
        images[level] = x;
        surface[level + 1] = surface[level];
        xprod[level + 1] = xprod[level];
        if (level < vg) {
          if (sig.v == 1) {
            surface[level + 1] = group.multiply(surface[level], group.multiply(x, x));
          } else if (level % 2 == 1) {
            const ElementId a = images[level - 1];
            const ElementId comm = group.multiply(group.multiply(group.inverse(a), group.inverse(x)), group.multiply(a, x));
            surface[level + 1] = group.multiply(surface[level], comm);
          }
        } else {
          xprod[level + 1] = group.multiply(xprod[level], x);
        }
        rec(level + 1);
      }
    };
    rec(0);
    return count;
  };

  if (depth == 0 || threads <= 1) return worker(0, 1);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { partial[t] = worker(t, threads); });
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace

BigInt oracle_cost(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes, const OracleOptions& options) {
  return plan_cost(sig, group, make_plan(sig, group, classes, options));
}

BigInt oracle_hom_count(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes, const OracleOptions& options) {
  const OraclePlan plan = make_plan(sig, group, classes, options);
  const BigInt cost = plan_cost(sig, group, plan);
  if (cost > options.cost_cap) fail(ErrorKind::TooExpensive, "oracle cost " + cost.str() + " exceeds " + std::to_string(options.cost_cap));
  group.prepare_cayley();
  return enumerate_solutions(sig, group, plan, options.threads, [] { return [](const std::vector<ElementId>&) { return true; }; });
}

EpiResult epi_count(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes, const OracleOptions& options) {
  const OraclePlan plan = make_plan(sig, group, classes, options);
  const BigInt cost = plan_cost(sig, group, plan);
  if (cost > options.cost_cap) fail(ErrorKind::TooExpensive, "oracle cost " + cost.str() + " exceeds " + std::to_string(options.cost_cap));
  group.prepare_cayley();
  EpiResult out;
  out.hom = enumerate_solutions(sig, group, plan, options.threads, [] { return [](const std::vector<ElementId>&) { return true; }; });
  out.epi = enumerate_solutions(sig, group, plan, options.threads, [&group] {
    return [&group](const std::vector<ElementId>& images) { return subgroup_order(group, images) == group.order(); };
  });
  out.probability = out.hom == 0 ? Rational(0) : Rational(out.epi, out.hom);
  return out;
}

}  // namespace fuchs

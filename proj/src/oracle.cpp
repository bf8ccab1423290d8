#include "qcv/oracle.hpp"

#include <stdexcept>

namespace qcv {

namespace {

constexpr std::size_t kTCoreCap = 60;

// visit every partition of n (parts nonincreasing); visit returns the running
// count bump itself, so no vectors are copied per partition
template <class Visit>
void walk_partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& parts,
                     Visit&& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    walk_partitions(remaining - p, p, parts, visit);
    parts.pop_back();
  }
}

bool no_hook_divisible(const std::vector<std::size_t>& parts, long t) {
  if (parts.empty()) return true;
  // conjugate: conj[j] = number of parts >= j+1 (parts are nonincreasing)
  std::vector<std::size_t> conj(parts[0], 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts[i]; ++j) ++conj[j];
  const auto tt = static_cast<std::size_t>(t);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts[i]; ++j) {
      const std::size_t hook = (parts[i] - j) + (conj[j] - i) - 1;
      if (hook % tt == 0) return false;
    }
  }
  return true;
}

}  // namespace

PartitionTable count_partitions(std::size_t max_n) {
  PartitionTable t{"p", std::vector<mpz_class>(max_n + 1)};
  t.values[0] = 1;
  for (std::size_t k = 1; k <= max_n; ++k)
    for (std::size_t n = k; n <= max_n; ++n) t.values[n] += t.values[n - k];
  return t;
}

PartitionTable count_partitions_even(std::size_t max_n) {
  PartitionTable t{"p_even", std::vector<mpz_class>(max_n + 1)};
  t.values[0] = 1;
  for (std::size_t k = 2; k <= max_n; k += 2)
    for (std::size_t n = k; n <= max_n; ++n) t.values[n] += t.values[n - k];
  return t;
}

PartitionTable count_tcore(long t, std::size_t max_n) {
  if (t < 2) throw std::invalid_argument("count_tcore: need t >= 2");
  if (max_n > kTCoreCap)
    throw std::invalid_argument("count_tcore: enumerative oracle is capped at n <= " +
                                std::to_string(kTCoreCap));
  PartitionTable table{"tcore(" + std::to_string(t) + ")", std::vector<mpz_class>(max_n + 1)};
  std::vector<std::size_t> parts;
  for (std::size_t n = 0; n <= max_n; ++n) {
    unsigned long count = 0;
    walk_partitions(n, n == 0 ? 1 : n, parts, [&](const std::vector<std::size_t>& ps) {
      if (no_hook_divisible(ps, t)) ++count;
    });
    table.values[n] = count;
  }
  return table;
}

PartitionTable count_cubic(std::size_t max_n) {
  PartitionTable t{"cubic", std::vector<mpz_class>(max_n + 1)};
  t.values[0] = 1;
  for (std::size_t k = 1; k <= max_n; ++k) {
    for (std::size_t n = k; n <= max_n; ++n) t.values[n] += t.values[n - k];
    if (k % 2 == 0)  // second color for even sizes
      for (std::size_t n = k; n <= max_n; ++n) t.values[n] += t.values[n - k];
  }
  return t;
}

CheckReport cross_validate(const GeneratingFunctionId& id, std::size_t max_n) {
  Stopwatch sw;
  using Kind = GeneratingFunctionId::Kind;
  PartitionTable table;
  switch (id.kind) {
    case Kind::TCore:
      table = count_tcore(id.t, max_n);
      break;
    case Kind::Cubic:
      table = count_cubic(max_n);
      break;
    case Kind::D: {
      // d(n) = sum_k a_3(n - 2k) p(k): f3^3/(f1 f2) = (f3^3/f1) * (1/f2)
      PartitionTable core3 = count_tcore(3, max_n);
      PartitionTable p = count_partitions(max_n / 2);
      table.family = "d";
      table.values.assign(max_n + 1, 0);
      for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; 2 * k <= n; ++k)
          table.values[n] += core3.values[n - 2 * k] * p.values[k];
      break;
    }
    default:
      throw std::invalid_argument("cross_validate: no oracle for family " + id.str());
  }

  ExactRing ring;
  SeriesPtr<ExactRing> s = gf(ring, id, max_n + 1);
  CheckReport rep;
  rep.id = "oracle.cross." + id.str();
  rep.statement = "series coefficients of gf(" + id.str() + ") match combinatorial counts";
  rep.order = max_n + 1;
  rep.instances = max_n + 1;
  for (std::size_t n = 0; n <= max_n; ++n) {
    if ((*s)[n] != table.values[n]) {
      rep.ok = false;
      rep.counterexample = {n, (*s)[n].get_str() + " != " + table.values[n].get_str()};
      break;
    }
  }
  rep.millis = sw.millis();
  return rep;
}

}  // namespace qcv

#include "tors/kernels.hpp"

#include <atomic>

#include "tors/error.hpp"

namespace tors {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() noexcept { return g_exec.load(std::memory_order_relaxed); }
void set_default_exec(Exec e) noexcept { g_exec.store(e, std::memory_order_relaxed); }

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace kernels {

namespace {

struct ClosedSearch {
  const std::vector<std::vector<std::size_t>>& lower;
  const std::vector<std::size_t>& order;
  std::size_t cap;
  std::vector<BitSet>& out;

  void run(BitSet& cur, std::size_t k) {
    if (k == order.size()) {
      if (out.size() >= cap) fail(ErrorCode::SizeCap, "more than " + std::to_string(cap) + " subsets");
      out.push_back(cur);
      return;
    }
    const std::size_t x = order[k];
    run(cur, k + 1);
    for (auto y : lower[x])
      if (!cur.test(y)) return;
    cur.set(x);
    run(cur, k + 1);
    cur.reset(x);
  }
};

}  // namespace

std::vector<BitSet> closed_subsets_serial(const std::vector<std::vector<std::size_t>>& lower,
                                          const std::vector<std::size_t>& order, std::size_t cap) {
  std::vector<BitSet> out;
  BitSet cur(lower.size());
  ClosedSearch{lower, order, cap, out}.run(cur, 0);
  return out;
}

std::vector<BitSet> closed_subsets_omp(const std::vector<std::vector<std::size_t>>& lower,
                                       const std::vector<std::size_t>& order, std::size_t cap) {
  // Prefixes over the first few positions in DFS order; completing each
  // prefix independently and concatenating reproduces the serial order.
  std::size_t depth = 0;
  while (depth < order.size() && depth < 12 && (std::size_t{1} << depth) < 16 * static_cast<std::size_t>(max_threads()))
    ++depth;
  std::vector<std::size_t> head(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(depth));
  auto prefixes = closed_subsets_serial(lower, head, cap);
  std::vector<std::size_t> tail(order.begin() + static_cast<std::ptrdiff_t>(depth), order.end());
  auto out = gather_omp<BitSet>(prefixes.size(), [&](std::size_t i, std::vector<BitSet>& part) {
    std::vector<BitSet> local;
    BitSet cur = prefixes[i];
    ClosedSearch{lower, tail, cap, local}.run(cur, 0);
    for (auto& s : local) part.push_back(std::move(s));
  });
  if (out.size() > cap) fail(ErrorCode::SizeCap, "more than " + std::to_string(cap) + " subsets");
  return out;
}

std::vector<BitSet> closed_subsets(const std::vector<std::vector<std::size_t>>& lower,
                                   const std::vector<std::size_t>& order, std::size_t cap, Exec exec) {
  if (exec == Exec::Parallel && openmp_enabled()) return closed_subsets_omp(lower, order, cap);
  return closed_subsets_serial(lower, order, cap);
}

}  // namespace kernels
}  // namespace tors

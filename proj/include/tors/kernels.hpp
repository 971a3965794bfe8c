#pragma once

// Data-parallel kernels shared by the enumerators. Every kernel has a serial
// reference version and an OpenMP version; both produce identical output
// (same elements, same order). The dispatching overload picks one from an
// Exec value.

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tors/bitset.hpp"

namespace tors {

enum class Exec { Serial, Parallel };

Exec default_exec() noexcept;
void set_default_exec(Exec e) noexcept;
int max_threads() noexcept;
bool openmp_enabled() noexcept;

namespace kernels {

namespace detail {

/// Collects the first exception thrown inside a parallel region.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(m_);
      if (!e_) e_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (e_) std::rethrow_exception(e_);
  }

 private:
  std::mutex m_;
  std::exception_ptr e_;
};

}  // namespace detail

/// rows[i].test(j) == pred(i, j) for i, j < n.
template <class Pred>
std::vector<BitSet> relation_rows_serial(std::size_t n, Pred&& pred) {
  std::vector<BitSet> rows(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j)) rows[i].set(j);
  return rows;
}

template <class Pred>
std::vector<BitSet> relation_rows_omp(std::size_t n, Pred&& pred) {
  std::vector<BitSet> rows(n, BitSet(n));
  detail::ExceptionSlot slot;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    slot.run([&] {
      auto& row = rows[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < n; ++j)
        if (pred(static_cast<std::size_t>(i), j)) row.set(j);
    });
  }
  slot.rethrow();
  return rows;
}

template <class Pred>
std::vector<BitSet> relation_rows(std::size_t n, Pred&& pred, Exec exec = default_exec()) {
  if (exec == Exec::Parallel && openmp_enabled()) return relation_rows_omp(n, pred);
  return relation_rows_serial(n, pred);
}

/// Ordered gather over [0, n): visit(i, out) appends any number of results for
/// index i; the output is the concatenation in increasing i.
template <class T, class Visit>
std::vector<T> gather_serial(std::size_t n, Visit&& visit) {
  std::vector<T> out;
  for (std::size_t i = 0; i < n; ++i) visit(i, out);
  return out;
}

template <class T, class Visit>
std::vector<T> gather_omp(std::size_t n, Visit&& visit) {
  if (n == 0) return {};
  const std::size_t blocks = std::min<std::size_t>(n, static_cast<std::size_t>(64 * max_threads()));
  std::vector<std::vector<T>> parts(blocks);
  detail::ExceptionSlot slot;
  const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long b = 0; b < nb; ++b) {
    slot.run([&] {
      const std::size_t lo = n * static_cast<std::size_t>(b) / blocks;
      const std::size_t hi = n * (static_cast<std::size_t>(b) + 1) / blocks;
      auto& part = parts[static_cast<std::size_t>(b)];
      for (std::size_t i = lo; i < hi; ++i) visit(i, part);
    });
  }
  slot.rethrow();
  std::vector<T> out;
  std::size_t total = 0;
  for (auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

template <class T, class Visit>
std::vector<T> gather(std::size_t n, Visit&& visit, Exec exec = default_exec()) {
  if (exec == Exec::Parallel && openmp_enabled()) return gather_omp<T>(n, visit);
  return gather_serial<T>(n, visit);
}

/// Enumerates the subsets S of {0..n-1} closed under "lower": if x is in S
/// then every element of lower[x] is in S. `order` must list all elements so
/// that lower[x] precedes x. Output is the depth-first order (exclude before
/// include) along `order`. Throws Error(SizeCap) past `cap` subsets.
std::vector<BitSet> closed_subsets_serial(const std::vector<std::vector<std::size_t>>& lower,
                                          const std::vector<std::size_t>& order, std::size_t cap);
std::vector<BitSet> closed_subsets_omp(const std::vector<std::vector<std::size_t>>& lower,
                                       const std::vector<std::size_t>& order, std::size_t cap);
std::vector<BitSet> closed_subsets(const std::vector<std::vector<std::size_t>>& lower,
                                   const std::vector<std::size_t>& order, std::size_t cap,
                                   Exec exec = default_exec());

}  // namespace kernels
}  // namespace tors

#include "hnl/multi_index.hpp"

#include <numeric>
#include <ostream>

#include "hnl/error.hpp"

namespace hnl {

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("multiindex entries must be non-negative");
  }
}

int MultiIndex::order() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DomainError("multiindex length mismatch");
  std::vector<int> sum(exps_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.exps_[i];
  return MultiIndex(std::move(sum));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = order() <=> other.order(); c != 0) return c;
  // Descending lexicographic within one order.
  return other.exps_ <=> exps_;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.to_string(); }

namespace {

void fill_order(std::size_t var, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    fill_order(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_order(std::size_t n, int k) {
  if (n == 0) throw DomainError("multiindex length must be positive");
  std::vector<MultiIndex> out;
  if (k < 0) return out;
  std::vector<int> cur(n, 0);
  fill_order(0, k, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int k) {
  std::vector<MultiIndex> out;
  for (int order = 0; order <= k; ++order) {
    auto block = multi_indices_of_order(n, order);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace hnl

#include "lsakit/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace lsakit {

std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int sort_with_sign(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void expand_rec(std::span<const Section> args, std::size_t slot, IndexTuple& idx,
                const Poly& coeff,
                const std::function<void(const IndexTuple&, const Poly&)>& fn) {
  if (slot == args.size()) {
    fn(idx, coeff);
    return;
  }
  const Section& s = args[slot];
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (s[i].is_zero()) continue;
    idx[slot] = i;
    if (s[i].is_one()) {
      expand_rec(args, slot + 1, idx, coeff, fn);
    } else {
      expand_rec(args, slot + 1, idx, coeff * s[i], fn);
    }
  }
}

}  // namespace

void for_each_frame_expansion(std::span<const Section> args,
                              const std::function<void(const IndexTuple&, const Poly&)>& fn) {
  IndexTuple idx(args.size());
  expand_rec(args, 0, idx, Poly::constant(0, 1), fn);
}

std::vector<Section> without(std::span<const Section> xs, std::initializer_list<std::size_t> drop) {
  std::vector<Section> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(xs[i]);
  }
  return out;
}

std::string frame_label(const IndexTuple& idx, const char* frame) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << frame << (idx[i] + 1);
  }
  os << ')';
  return os.str();
}

}  // namespace lsakit

#include "gkspin/clifford/clifford.hpp"

#include <unordered_map>

namespace gkspin {

struct BilinearSpace::Cache {
  std::unordered_map<std::uint64_t, BladeTerms> gen, mono, symbol, quant, rev;
};

namespace {

std::uint64_t key(Blade a, std::uint64_t b) { return (std::uint64_t(a) << 32) | b; }

void add_term(std::map<Blade, FieldScalar> &acc, Blade b, const FieldScalar &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = acc.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      acc.erase(it);
  }
}

BladeTerms flatten(const std::map<Blade, FieldScalar> &acc) {
  return BladeTerms(acc.begin(), acc.end());
}

} // namespace

BilinearSpace::BilinearSpace(std::vector<std::string> names,
                             std::vector<std::vector<FieldScalar>> gram)
    : names_(std::move(names)), gram_(std::move(gram)), cache_(std::make_shared<Cache>()) {
  std::size_t n = names_.size();
  if (n > 32)
    throw std::invalid_argument("at most 32 generators");
  if (gram_.size() != n)
    throw std::invalid_argument("Gram matrix size does not match generators");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n)
      throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw std::invalid_argument("Gram matrix is not symmetric");
  }
}

const BladeTerms &BilinearSpace::mono_times_gen(Blade m, int j) const {
  auto k = key(m, static_cast<std::uint64_t>(j));
  auto it = cache_->gen.find(k);
  if (it != cache_->gen.end())
    return it->second;
  Blade bit = Blade(1) << j;
  BladeTerms out;
  if (m == 0 || std::bit_width(m) - 1 < static_cast<unsigned>(j)) {
    out.emplace_back(m | bit, FieldScalar(1));
  } else {
    int top = static_cast<int>(std::bit_width(m)) - 1;
    Blade rest = m & ~(Blade(1) << top);
    std::map<Blade, FieldScalar> acc;
    if (top == j) {
      add_term(acc, rest, gram_[j][j]);
    } else {
      // rest e_top e_j = -(rest e_j) e_top + 2 <e_top, e_j> rest
      for (const auto &[b, c] : mono_times_gen(rest, j))
        add_term(acc, b | (Blade(1) << top), -c);
      add_term(acc, rest, FieldScalar(2) * gram_[top][j]);
    }
    out = flatten(acc);
  }
  return cache_->gen.emplace(k, std::move(out)).first->second;
}

const BladeTerms &BilinearSpace::mono_times_mono(Blade a, Blade b) const {
  auto k = key(a, b);
  auto it = cache_->mono.find(k);
  if (it != cache_->mono.end())
    return it->second;
  std::map<Blade, FieldScalar> cur{{a, FieldScalar(1)}};
  for (Blade bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    std::map<Blade, FieldScalar> next;
    for (const auto &[m, c] : cur)
      for (const auto &[m2, c2] : mono_times_gen(m, j))
        add_term(next, m2, c * c2);
    cur = std::move(next);
  }
  return cache_->mono.emplace(k, flatten(cur)).first->second;
}

const BladeTerms &BilinearSpace::symbol_of(Blade m) const {
  auto it = cache_->symbol.find(m);
  if (it != cache_->symbol.end())
    return it->second;
  std::map<Blade, FieldScalar> acc;
  if (m == 0) {
    acc.emplace(0, FieldScalar(1));
  } else {
    int i = std::countr_zero(m);
    Blade bit = Blade(1) << i;
    for (const auto &[b, c] : symbol_of(m & ~bit)) {
      // e_i . w = e_i ^ w + contraction by <e_i, .>
      if (!(b & bit)) {
        int sign = (std::popcount(b & (bit - 1)) & 1) ? -1 : 1;
        add_term(acc, b | bit, sign < 0 ? -c : c);
      }
      int pos = 0;
      for (Blade bb = b; bb; bb &= bb - 1, ++pos) {
        int j = std::countr_zero(bb);
        if (gram_[i][j].is_zero())
          continue;
        FieldScalar v = c * gram_[i][j];
        add_term(acc, b & ~(Blade(1) << j), (pos & 1) ? -v : v);
      }
    }
  }
  return cache_->symbol.emplace(m, flatten(acc)).first->second;
}

const BladeTerms &BilinearSpace::quantize(Blade m) const {
  auto it = cache_->quant.find(m);
  if (it != cache_->quant.end())
    return it->second;
  std::map<Blade, FieldScalar> acc;
  if (m == 0) {
    acc.emplace(0, FieldScalar(1));
  } else {
    // q(e_i ^ w) = e_i q(w) - q(contraction of w by <e_i, .>)
    int i = std::countr_zero(m);
    Blade bit = Blade(1) << i;
    Blade rest = m & ~bit;
    for (const auto &[b, c] : quantize(rest))
      add_term(acc, b | bit, c); // i is below every index of rest
    int pos = 0;
    for (Blade bb = rest; bb; bb &= bb - 1, ++pos) {
      int j = std::countr_zero(bb);
      if (gram_[i][j].is_zero())
        continue;
      FieldScalar v = gram_[i][j];
      if (pos & 1)
        v = -v;
      for (const auto &[b, c] : quantize(rest & ~(Blade(1) << j)))
        add_term(acc, b, -(v * c));
    }
  }
  return cache_->quant.emplace(m, flatten(acc)).first->second;
}

const BladeTerms &BilinearSpace::reversed(Blade m) const {
  auto it = cache_->rev.find(m);
  if (it != cache_->rev.end())
    return it->second;
  std::map<Blade, FieldScalar> cur{{0, FieldScalar(1)}};
  for (int j = dim() - 1; j >= 0; --j) {
    if (!(m & (Blade(1) << j)))
      continue;
    std::map<Blade, FieldScalar> next;
    for (const auto &[b, c] : cur)
      for (const auto &[b2, c2] : mono_times_gen(b, j))
        add_term(next, b2, c * c2);
    cur = std::move(next);
  }
  return cache_->rev.emplace(m, flatten(cur)).first->second;
}

} // namespace gkspin

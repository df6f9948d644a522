#include "arcalg/permutation.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "arcalg/error.hpp"

namespace arcalg {

namespace {

void require_same_size(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) {
    throw InvalidInput("permutation size mismatch: " + std::to_string(s.size()) +
                       " vs " + std::to_string(t.size()));
  }
}

void transitive_close(InversionPairSet& set) {
  // Warshall with the middle value outermost: (c,b),(b,a) => (c,a).
  int n = set.n();
  for (int b = 1; b <= n; ++b) {
    for (int c = b + 1; c <= n; ++c) {
      if (!set.contains(c, b)) continue;
      for (int a = 1; a < b; ++a) {
        if (set.contains(b, a)) set.insert(c, a);
      }
    }
  }
}

InversionPairSet complement(const InversionPairSet& set) {
  InversionPairSet out(set.n());
  for (int b = 2; b <= set.n(); ++b) {
    for (int a = 1; a < b; ++a) {
      if (!set.contains(b, a)) out.insert(b, a);
    }
  }
  return out;
}

bool is_transitive(const InversionPairSet& set) {
  int n = set.n();
  for (int c = 1; c <= n; ++c) {
    for (int b = 1; b < c; ++b) {
      if (!set.contains(c, b)) continue;
      for (int a = 1; a < b; ++a) {
        if (set.contains(b, a) && !set.contains(c, a)) return false;
      }
    }
  }
  return true;
}

// Calls f(mask) for every m-subset of {0, ..., total-1}, given as a bool vector.
template <class F>
void for_each_subset(int total, int m, F&& f) {
  std::vector<bool> chosen(static_cast<std::size_t>(total), false);
  std::fill(chosen.end() - m, chosen.end(), true);
  do {
    f(chosen);
  } while (std::next_permutation(chosen.begin(), chosen.end()));
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view digits) {
  if (digits == "e" || digits == "ε") return Permutation();
  std::vector<int> v;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') {
      throw InvalidInput("bad permutation digit string: " + std::string(digits));
    }
    v.push_back(ch - '0');
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i)-1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  require_same_size(*this, other);
  std::vector<int> v(values_.size());
  for (int i = 1; i <= size(); ++i) v[i - 1] = (*this)(other(i));
  return Permutation(std::move(v));
}

Permutation Permutation::swap_adjacent(int i) const {
  if (i < 1 || i >= size()) throw InvalidInput("adjacent swap out of range");
  Permutation out = *this;
  std::swap(out.values_[i - 1], out.values_[i]);
  return out;
}

std::string Permutation::to_string() const {
  if (values_.empty()) return "e";
  bool compact = size() <= 9;
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(values_[i]);
  }
  return compact ? s : "[" + s + "]";
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return values_ <=> other.values_;
}

std::size_t InversionPairSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::pair<int, int>> InversionPairSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int b = 2; b <= n_; ++b) {
    for (int a = 1; a < b; ++a) {
      if (contains(b, a)) out.emplace_back(b, a);
    }
  }
  return out;
}

bool InversionPairSet::is_subset_of(const InversionPairSet& other) const {
  if (n_ != other.n_) throw InvalidInput("inversion set size mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

InversionPairSet inversions(const Permutation& sigma) {
  int n = sigma.size();
  InversionPairSet out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (sigma(i) > sigma(j)) out.insert(sigma(i), sigma(j));
    }
  }
  return out;
}

bool is_inversion_set(const InversionPairSet& pairs) {
  return is_transitive(pairs) && is_transitive(complement(pairs));
}

Permutation from_inversions(const InversionPairSet& pairs) {
  if (!is_inversion_set(pairs)) throw InvalidInput("not an inversion set");
  std::vector<int> v(static_cast<std::size_t>(pairs.n()));
  for (int i = 0; i < pairs.n(); ++i) v[i] = i + 1;
  std::sort(v.begin(), v.end(), [&](int x, int y) {
    return x > y ? pairs.contains(x, y) : !pairs.contains(y, x);
  });
  return Permutation(std::move(v));
}

bool weak_leq(const Permutation& sigma, const Permutation& tau) {
  require_same_size(sigma, tau);
  return inversions(sigma).is_subset_of(inversions(tau));
}

Permutation weak_join(const Permutation& sigma, const Permutation& tau) {
  require_same_size(sigma, tau);
  InversionPairSet u = inversions(sigma);
  InversionPairSet t = inversions(tau);
  for (auto [b, a] : t.pairs()) u.insert(b, a);
  transitive_close(u);
  return from_inversions(u);
}

Permutation weak_meet(const Permutation& sigma, const Permutation& tau) {
  require_same_size(sigma, tau);
  InversionPairSet u = complement(inversions(sigma));
  for (auto [b, a] : complement(inversions(tau)).pairs()) u.insert(b, a);
  transitive_close(u);
  return from_inversions(complement(u));
}

std::vector<Permutation> cover_relations(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (int i : ascents(sigma)) out.push_back(sigma.swap_adjacent(i));
  return out;
}

std::vector<Permutation> lower_covers(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (int i : descents(sigma)) out.push_back(sigma.swap_adjacent(i));
  return out;
}

std::vector<Permutation> interval(const Permutation& mu, const Permutation& nu) {
  if (!weak_leq(mu, nu)) {
    throw InvalidInput("empty interval: " + mu.to_string() + " is not below " + nu.to_string());
  }
  InversionPairSet top = inversions(nu);
  std::set<Permutation> seen{mu};
  std::queue<Permutation> todo;
  todo.push(mu);
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop();
    for (int i : ascents(cur)) {
      // The new inversion is (cur(i+1), cur(i)).
      if (!top.contains(cur(i + 1), cur(i))) continue;
      Permutation next = cur.swap_adjacent(i);
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> descents(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> ascents(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) < sigma(i + 1)) out.push_back(i);
  }
  return out;
}

Permutation join_irreducible(const Permutation& sigma, int i) {
  int n = sigma.size();
  if (i < 1 || i >= n || sigma(i) < sigma(i + 1)) {
    throw InvalidInput(std::to_string(i) + " is not a descent of " + sigma.to_string());
  }
  int hi = sigma(i);
  int lo = sigma(i + 1);
  std::vector<int> before, after;
  for (int j = 1; j <= n; ++j) {
    int v = sigma(j);
    if (v <= lo || v >= hi) continue;
    (j < i ? before : after).push_back(v);
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  std::vector<int> word;
  for (int v = 1; v < lo; ++v) word.push_back(v);
  word.insert(word.end(), before.begin(), before.end());
  word.push_back(hi);
  word.push_back(lo);
  word.insert(word.end(), after.begin(), after.end());
  for (int v = hi + 1; v <= n; ++v) word.push_back(v);
  return Permutation(std::move(word));
}

Permutation meet_irreducible(const Permutation& sigma, int i) {
  if (i < 1 || i >= sigma.size() || sigma(i) > sigma(i + 1)) {
    throw InvalidInput(std::to_string(i) + " is not an ascent of " + sigma.to_string());
  }
  Permutation w = Permutation::longest(sigma.size());
  return w.compose(join_irreducible(w.compose(sigma), i));
}

Permutation standardize(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                   sorted.begin()) +
                  1);
  }
  return Permutation(std::move(out));
}

namespace {

std::vector<bool> membership(const Permutation& rho, const std::vector<int>& subset) {
  std::vector<bool> in(static_cast<std::size_t>(rho.size()) + 1, false);
  for (int r : subset) {
    if (r < 1 || r > rho.size()) {
      throw InvalidInput("index " + std::to_string(r) + " outside [1," +
                         std::to_string(rho.size()) + "]");
    }
    in[r] = true;
  }
  return in;
}

}  // namespace

Permutation std_pos(const Permutation& rho, const std::vector<int>& positions) {
  std::vector<bool> in = membership(rho, positions);
  std::vector<int> word;
  for (int i = 1; i <= rho.size(); ++i) {
    if (in[i]) word.push_back(rho(i));
  }
  return standardize(word);
}

Permutation std_val(const Permutation& rho, const std::vector<int>& values) {
  std::vector<bool> in = membership(rho, values);
  std::vector<int> word;
  for (int i = 1; i <= rho.size(); ++i) {
    if (in[rho(i)]) word.push_back(rho(i));
  }
  return standardize(word);
}

std::vector<Permutation> shifted_shuffle(const Permutation& sigma, const Permutation& tau) {
  int m = sigma.size();
  int n = tau.size();
  std::vector<Permutation> out;
  for_each_subset(m + n, m, [&](const std::vector<bool>& from_sigma) {
    std::vector<int> word;
    int si = 1, ti = 1;
    for (bool s : from_sigma) word.push_back(s ? sigma(si++) : tau(ti++) + m);
    out.emplace_back(std::move(word));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> convolution(const Permutation& sigma, const Permutation& tau) {
  int m = sigma.size();
  int n = tau.size();
  std::vector<Permutation> out;
  for_each_subset(m + n, m, [&](const std::vector<bool>& low_values) {
    // low_values marks the value set taken by the first m positions.
    std::vector<int> left, right;
    for (int v = 1; v <= m + n; ++v) (low_values[v - 1] ? left : right).push_back(v);
    std::vector<int> word;
    for (int i = 1; i <= m; ++i) word.push_back(left[sigma(i) - 1]);
    for (int i = 1; i <= n; ++i) word.push_back(right[tau(i) - 1]);
    out.emplace_back(std::move(word));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Permutation backslash(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> word = sigma.values();
  for (int v : tau.values()) word.push_back(v + sigma.size());
  return Permutation(std::move(word));
}

Permutation slash(const Permutation& tau, const Permutation& sigma) {
  std::vector<int> word;
  for (int v : tau.values()) word.push_back(v + sigma.size());
  for (int v : sigma.values()) word.push_back(v);
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v = Permutation::identity(n).values();
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace arcalg

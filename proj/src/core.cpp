#include "qhall/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw DomainError("partition part must be non-negative, got " + std::to_string(p));
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(int value) const {
  return std::find(parts_.begin(), parts_.end(), value) != parts_.end();
}

int Partition::count_equal(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::count_greater(int value) const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [&](int p) { return p > value; }));
}

Partition Partition::dual() const {
  std::vector<int> out(static_cast<std::size_t>(first()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  Partition d;
  d.parts_ = std::move(out);
  return d;
}

Partition Partition::with_part_added(int value) const {
  if (value <= 0) return *this;
  Partition r = *this;
  auto pos = std::upper_bound(r.parts_.begin(), r.parts_.end(), value, std::greater<>());
  r.parts_.insert(pos, value);
  return r;
}

Partition Partition::with_part_removed(int value) const {
  if (value == 0) return *this;
  Partition r = *this;
  auto it = std::find(r.parts_.begin(), r.parts_.end(), value);
  if (it == r.parts_.end()) {
    throw InternalError("partition has no part " + std::to_string(value) + ": " + to_string(*this));
  }
  r.parts_.erase(it);
  return r;
}

DimVector::DimVector(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 0) throw DomainError("dimension vector coordinates must be non-negative");
  }
}

DimVector DimVector::unit(int n, int vertex) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(wrap(vertex, n) - 1)] = 1;
  return DimVector(std::move(c));
}

int DimVector::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

DimVector DimVector::operator+(const DimVector& o) const {
  if (o.n() != n()) throw DomainError("dimension vectors over different vertex counts");
  std::vector<int> c = coords_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.coords_[k];
  return DimVector(std::move(c));
}

static void check_n(int n) {
  if (n < 2) throw DomainError("vertex count n must be at least 2, got " + std::to_string(n));
}

MultiPartition MultiPartition::empty(int n) {
  check_n(n);
  MultiPartition pi;
  pi.n_ = n;
  pi.comps_.assign(static_cast<std::size_t>(n), Partition{});
  pi.duals_ = pi.comps_;
  return pi;
}

MultiPartition MultiPartition::from_parts(int n, std::vector<Partition> comps) {
  check_n(n);
  if (comps.size() != static_cast<std::size_t>(n)) {
    throw DomainError("multipartition needs " + std::to_string(n) + " components, got " +
                      std::to_string(comps.size()));
  }
  MultiPartition pi;
  pi.n_ = n;
  pi.duals_.reserve(comps.size());
  for (const auto& c : comps) pi.duals_.push_back(c.dual());
  pi.comps_ = std::move(comps);
  return pi;
}

MultiPartition MultiPartition::from_duals(int n, std::vector<Partition> duals) {
  check_n(n);
  if (duals.size() != static_cast<std::size_t>(n)) {
    throw DomainError("multipartition needs " + std::to_string(n) + " components, got " +
                      std::to_string(duals.size()));
  }
  MultiPartition pi;
  pi.n_ = n;
  pi.comps_.reserve(duals.size());
  for (const auto& d : duals) pi.comps_.push_back(d.dual());
  pi.duals_ = std::move(duals);
  return pi;
}

int MultiPartition::size() const {
  int s = 0;
  for (const auto& c : comps_) s += c.sum();
  return s;
}

bool MultiPartition::is_empty() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Partition& p) { return p.empty(); });
}

int MultiPartition::max_length() const {
  int m = 0;
  for (const auto& d : duals_) m = std::max(m, d.first());
  return m;
}

MultiPartition MultiPartition::with_dual(int vertex, Partition d) const {
  MultiPartition r = *this;
  const std::size_t k = index(vertex);
  r.comps_[k] = d.dual();
  r.duals_[k] = std::move(d);
  return r;
}

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  check_n(n);
  for (int x : letters_) {
    if (x < 1 || x > n) {
      throw DomainError("word letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
  }
}

Word Word::suffix(std::size_t from) const {
  Word w;
  w.n_ = n_;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(std::min(from, letters_.size())),
                    letters_.end());
  return w;
}

Word Word::operator+(const Word& o) const {
  if (o.n_ != n_) throw DomainError("concatenating words over different vertex counts");
  Word w = *this;
  w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
  return w;
}

DimVector dim_vector(const MultiPartition& pi) {
  const int n = pi.n();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int l : pi.dual(i).parts()) {
      for (int t = 0; t < l; ++t) ++c[static_cast<std::size_t>(wrap(i + t, n) - 1)];
    }
  }
  return DimVector(std::move(c));
}

DimVector content(const Word& w) {
  std::vector<int> c(static_cast<std::size_t>(w.n()), 0);
  for (int x : w.letters()) ++c[static_cast<std::size_t>(x - 1)];
  return DimVector(std::move(c));
}

namespace {

struct SummandType {
  int vertex;
  int length;
  std::vector<int> cover;  // multiplicity contributed at each vertex
};

void enumerate_rec(const std::vector<SummandType>& types, std::size_t k, std::vector<int>& remaining,
                   int remaining_total, std::vector<std::vector<int>>& lengths, int n,
                   std::vector<MultiPartition>& out) {
  if (remaining_total == 0) {
    std::vector<Partition> duals;
    duals.reserve(lengths.size());
    for (const auto& ls : lengths) duals.emplace_back(ls);
    out.push_back(MultiPartition::from_duals(n, std::move(duals)));
    return;
  }
  if (k == types.size()) return;
  const auto& t = types[k];
  if (t.length > remaining_total) {
    enumerate_rec(types, k + 1, remaining, remaining_total, lengths, n, out);
    return;
  }
  int max_mult = remaining_total / t.length;
  for (std::size_t v = 0; v < t.cover.size(); ++v) {
    if (t.cover[v] > 0) max_mult = std::min(max_mult, remaining[v] / t.cover[v]);
  }
  auto& ls = lengths[static_cast<std::size_t>(t.vertex - 1)];
  for (int mult = 0; mult <= max_mult; ++mult) {
    if (mult > 0) {
      for (std::size_t v = 0; v < t.cover.size(); ++v) remaining[v] -= t.cover[v];
      remaining_total -= t.length;
      ls.push_back(t.length);
    }
    enumerate_rec(types, k + 1, remaining, remaining_total, lengths, n, out);
  }
  for (int mult = 0; mult < max_mult; ++mult) {
    for (std::size_t v = 0; v < t.cover.size(); ++v) remaining[v] += t.cover[v];
    remaining_total += t.length;
    ls.pop_back();
  }
}

}  // namespace

std::vector<MultiPartition> enumerate_pi(const DimVector& d) {
  const int n = d.n();
  check_n(n);
  const int total = d.total();
  std::vector<SummandType> types;
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= total; ++l) {
      SummandType t{i, l, std::vector<int>(static_cast<std::size_t>(n), 0)};
      for (int s = 0; s < l; ++s) ++t.cover[static_cast<std::size_t>(wrap(i + s, n) - 1)];
      types.push_back(std::move(t));
    }
  }
  std::vector<int> remaining(d.coords().begin(), d.coords().end());
  std::vector<std::vector<int>> lengths(static_cast<std::size_t>(n));
  std::vector<MultiPartition> out;
  enumerate_rec(types, 0, remaining, total, lengths, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimVector> dim_vectors_up_to(int n, int max_total) {
  std::vector<DimVector> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == c.size()) {
      out.emplace_back(c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[k] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, max_total);
  std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

std::vector<Word> words_of_length(int n, int length) {
  std::vector<Word> out;
  std::vector<int> letters(static_cast<std::size_t>(length), 1);
  while (true) {
    out.emplace_back(n, letters);
    int k = length - 1;
    while (k >= 0 && letters[static_cast<std::size_t>(k)] == n) {
      letters[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++letters[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Word> words_with_content(const DimVector& d) {
  std::vector<int> letters;
  for (int i = 1; i <= d.n(); ++i) letters.insert(letters.end(), static_cast<std::size_t>(d[i]), i);
  std::vector<Word> out;
  do {
    out.emplace_back(d.n(), letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.length(); ++k) os << (k ? "," : "") << p.part(k);
  os << ')';
  return os.str();
}

std::string to_string(const MultiPartition& pi) {
  std::string s = "(";
  for (int i = 1; i <= pi.n(); ++i) s += (i > 1 ? "," : "") + to_string(pi.component(i));
  return s + ")";
}

std::string to_string(const DimVector& d) {
  std::string s = "[";
  for (int k = 0; k < d.n(); ++k) s += (k ? "," : "") + std::to_string(d.coords()[static_cast<std::size_t>(k)]);
  return s + "]";
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.length(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

}  // namespace qhall

std::size_t std::hash<qhall::MultiPartition>::operator()(const qhall::MultiPartition& pi) const noexcept {
  std::size_t h = static_cast<std::size_t>(pi.n());
  for (const auto& c : pi.components()) {
    for (int p : c.parts()) h = h * 1000003u + static_cast<std::size_t>(p);
    h = h * 1000003u + 0x9e3779b9u;
  }
  return h;
}
